from ._liepdo import *  # noqa: F401,F403
from ._liepdo import __doc__  # noqa: F401
