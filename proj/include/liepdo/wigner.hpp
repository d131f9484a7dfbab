#pragma once

#include <Eigen/Dense>
#include <vector>

namespace liepdo {

/// Wigner d-matrix d^l(beta), rows/columns indexed m,n in {-l..l} (offset
/// by +l). Three-term recursion in l at fixed (m,n), seeded at
/// l0 = max(|m|,|n|); stable at desk scale (l <= 64 and beyond).
Eigen::MatrixXd wigner_d(int l, double beta);

/// d^l(beta) for all l = 0..lmax at once (the recursion produces every
/// intermediate degree anyway).
std::vector<Eigen::MatrixXd> wigner_d_table(int lmax, double beta);

}  // namespace liepdo
