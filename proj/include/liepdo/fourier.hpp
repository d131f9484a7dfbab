#pragma once

#include <Eigen/Dense>
#include <vector>

#include "liepdo/group.hpp"

namespace liepdo {

/// Matrix Fourier coefficients f^(xi), one d_xi x d_xi block per dual index,
/// kept in dual enumeration order.
struct FourierCoefficients {
  Group group;
  std::vector<DualIndex> indices;
  std::vector<Eigen::MatrixXcd> blocks;

  const Eigen::MatrixXcd* find(const DualIndex& xi) const;
  Eigen::MatrixXcd* find(const DualIndex& xi);
};

/// Coefficients all zero for <xi> <= lam, in enumeration order.
FourierCoefficients zero_coefficients(const Group& group, double lam);

/// f^(xi) = sum_i w_i f(x_i) xi(x_i)^* for all <xi> <= lam. Emits a warning
/// to stderr when the grid's exactness band does not cover lam.
FourierCoefficients forward_transform(const GroupFunction& f, double lam);

/// f(x) = sum_xi d_xi Tr(xi(x) f^(xi)) evaluated at every grid node.
GroupFunction inverse_transform(const FourierCoefficients& c, const GridPtr& grid);

/// (sum_xi d_xi |f^(xi)|_HS^2)^{1/2}.
double plancherel_norm(const FourierCoefficients& c);

/// Explicit truncation: zero out entries with |value| < threshold.
/// Never applied implicitly anywhere in the library.
void truncate(FourierCoefficients& c, double threshold);

}  // namespace liepdo
