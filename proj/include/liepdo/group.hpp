#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "liepdo/dual.hpp"

namespace liepdo {

struct Group {
  Backend backend;
  int torus_dim;  // number of torus factors; 0 for SO(3)

  static Group torus(int n) { return Group{Backend::Torus, n}; }
  static Group so3() { return Group{Backend::SO3, 0}; }

  /// Manifold dimension n (enters the symbol-class exponents).
  int dim() const { return backend == Backend::Torus ? torus_dim : 3; }
  /// Coordinates per point: torus angles, or z-y-z Euler angles.
  int coord_dim() const { return backend == Backend::Torus ? torus_dim : 3; }

  std::string tag() const {
    return backend == Backend::Torus ? "torus-" + std::to_string(torus_dim) : "so3";
  }
  bool operator==(const Group& o) const {
    return backend == o.backend && torus_dim == o.torus_dim;
  }

  std::vector<DualIndex> enumerate_dual(double lam) const {
    return liepdo::enumerate_dual(backend, torus_dim, lam);
  }
};

/// Discretization of the normalized Haar measure. exactness_band is the
/// largest band B such that quadrature of products of matrix coefficients
/// with <xi> <= B is exact up to round-off.
struct QuadratureGrid {
  Group group;
  std::vector<double> coords;  // node-major, coord_dim entries per node
  std::vector<double> weights;
  double exactness_band = 0;

  // axis data (tensor structure; used by the transforms)
  std::vector<double> axis_alpha, axis_beta, axis_gamma, beta_weights;
  int torus_axis_points = 0;

  std::size_t size() const { return weights.size(); }
  const double* node(std::size_t i) const {
    return coords.data() + i * group.coord_dim();
  }
};

using GridPtr = std::shared_ptr<const QuadratureGrid>;

/// Uniform tensor grid on T^n, equal weights, exact for trigonometric
/// polynomials well past the declared band.
GridPtr grid_torus(int n, double lam, double oversample);

/// Tensor grid on SO(3): uniform in alpha and gamma, Gauss-Legendre in
/// cos(beta). Construction fails if the sampled orthonormality self-check
/// exceeds 1e-10.
GridPtr grid_so3(int lmax, double oversample);

/// Dispatch on backend; for SO(3) lam is converted to the covering lmax.
GridPtr make_grid(const Group& group, double lam, double oversample);

/// Representation matrix xi(x) at a point (unit complex scalar on the
/// torus; Wigner D-matrix on SO(3)).
Eigen::MatrixXcd rep_eval(const Group& group, const double* x, const DualIndex& xi);

/// Complex values of a function on the nodes of a quadrature grid.
struct GroupFunction {
  GridPtr grid;
  Eigen::VectorXcd values;
};

/// Gauss-Legendre nodes/weights on [-1,1] (Golub-Welsch).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace liepdo
