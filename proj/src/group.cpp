#include "liepdo/group.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "liepdo/wigner.hpp"

namespace liepdo {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
using cd = std::complex<double>;
}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  // Golub-Welsch: eigen-decomposition of the Jacobi matrix.
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    double b = i / std::sqrt(4.0 * i * i - 1.0);
    J(i, i - 1) = b;
    J(i - 1, i) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    nodes[i] = es.eigenvalues()(i);
    double v = es.eigenvectors()(0, i);
    weights[i] = 2.0 * v * v;
  }
}

GridPtr grid_torus(int n, double lam, double oversample) {
  if (lam < 1.0) throw ConfigError("grid_torus: band limit must be >= 1");
  if (oversample < 1.0) throw ConfigError("grid_torus: oversample must be >= 1");
  const int per_axis = int(std::ceil(oversample * (2 * std::ceil(lam) + 1)));

  auto g = std::make_shared<QuadratureGrid>();
  g->group = Group::torus(n);
  g->torus_axis_points = per_axis;
  g->exactness_band = lam;

  std::size_t total = 1;
  for (int j = 0; j < n; ++j) total *= per_axis;
  g->coords.resize(total * n);
  g->weights.assign(total, 1.0 / double(total));

  std::vector<int> idx(n, 0);
  for (std::size_t i = 0; i < total; ++i) {
    for (int j = 0; j < n; ++j) g->coords[i * n + j] = kTwoPi * idx[j] / per_axis;
    for (int j = n - 1; j >= 0; --j) {
      if (++idx[j] < per_axis) break;
      idx[j] = 0;
    }
  }
  return g;
}

namespace {

// Sampled orthonormality self-check for an SO(3) grid: the tensor structure
// makes the alpha/gamma phase sums and the beta quadrature separately
// responsible for exactness, so both are checked directly.
void check_so3_grid(const QuadratureGrid& g, int lmax) {
  const double tol = 1e-10;
  const int na = int(g.axis_alpha.size());
  // Phase-sum exactness: (1/N) sum_a e^{i q alpha_a} = delta_{q,0} for all
  // frequency gaps q occurring in products up to the band.
  for (int q = 1; q <= 2 * lmax; ++q) {
    cd acc = 0;
    for (int a = 0; a < na; ++a) acc += std::exp(cd(0, q * g.axis_alpha[a]));
    if (std::abs(acc) / na > tol)
      throw ConfigError("grid_so3: phase-sum self-check failed");
  }
  // Beta quadrature: Schur pairing of d-functions at matching (m,n).
  const int nb = int(g.axis_beta.size());
  std::vector<std::vector<Eigen::MatrixXd>> dt(nb);
  for (int b = 0; b < nb; ++b) dt[b] = wigner_d_table(lmax, g.axis_beta[b]);
  for (int l = 0; l <= lmax; ++l) {
    for (int lp = l; lp <= lmax; ++lp) {
      // sample the corner and center entries shared by both degrees
      const int mm[3] = {-l, 0, l};
      for (int mi = 0; mi < 3; ++mi) {
        for (int ni = 0; ni < 3; ++ni) {
          int m = mm[mi], n = mm[ni];
          double acc = 0;
          for (int b = 0; b < nb; ++b)
            acc += g.beta_weights[b] * dt[b][l](m + l, n + l) * dt[b][lp](m + lp, n + lp);
          double expect = (l == lp) ? 1.0 / (2 * l + 1) : 0.0;
          if (std::abs(acc - expect) > tol)
            throw ConfigError("grid_so3: orthonormality self-check failed");
        }
      }
    }
  }
}

}  // namespace

GridPtr grid_so3(int lmax, double oversample) {
  if (lmax < 0) throw ConfigError("grid_so3: lmax must be >= 0");
  if (oversample < 1.0) throw ConfigError("grid_so3: oversample must be >= 1");
  const int na = int(std::ceil(oversample * (2 * lmax + 1)));
  const int nb = int(std::ceil(oversample * (lmax + 1)));
  const int ng = na;

  auto g = std::make_shared<QuadratureGrid>();
  g->group = Group::so3();
  g->exactness_band = std::sqrt(1.0 + double(lmax) * (lmax + 1));

  std::vector<double> glx, glw;
  gauss_legendre(nb, glx, glw);

  g->axis_alpha.resize(na);
  for (int a = 0; a < na; ++a) g->axis_alpha[a] = kTwoPi * a / na;
  g->axis_gamma = g->axis_alpha;
  g->axis_beta.resize(nb);
  g->beta_weights.resize(nb);
  for (int b = 0; b < nb; ++b) {
    g->axis_beta[b] = std::acos(glx[b]);
    g->beta_weights[b] = glw[b] / 2.0;  // normalized Haar mass of the beta factor
  }

  const std::size_t total = std::size_t(na) * nb * ng;
  g->coords.resize(total * 3);
  g->weights.resize(total);
  std::size_t i = 0;
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b)
      for (int c = 0; c < ng; ++c, ++i) {
        g->coords[i * 3 + 0] = g->axis_alpha[a];
        g->coords[i * 3 + 1] = g->axis_beta[b];
        g->coords[i * 3 + 2] = g->axis_gamma[c];
        g->weights[i] = g->beta_weights[b] / (double(na) * ng);
      }

  check_so3_grid(*g, lmax);
  return g;
}

GridPtr make_grid(const Group& group, double lam, double oversample) {
  if (group.backend == Backend::Torus) return grid_torus(group.torus_dim, lam, oversample);
  int lmax = 0;
  while (std::sqrt(1.0 + double(lmax + 1) * (lmax + 2)) <= lam) ++lmax;
  return grid_so3(lmax, oversample);
}

Eigen::MatrixXcd rep_eval(const Group& group, const double* x, const DualIndex& xi) {
  if (group.backend != xi.backend)
    throw ConfigError("rep_eval: backend mismatch between group and dual index");
  if (group.backend == Backend::Torus) {
    double phase = 0;
    for (int j = 0; j < group.torus_dim; ++j) phase += xi.label[j] * x[j];
    Eigen::MatrixXcd m(1, 1);
    m(0, 0) = std::exp(cd(0, phase));
    return m;
  }
  const int l = xi.label[0];
  Eigen::MatrixXd d = wigner_d(l, x[1]);
  Eigen::MatrixXcd D(2 * l + 1, 2 * l + 1);
  for (int m = -l; m <= l; ++m)
    for (int n = -l; n <= l; ++n)
      D(m + l, n + l) = std::exp(cd(0, -m * x[0])) * d(m + l, n + l) * std::exp(cd(0, -n * x[2]));
  return D;
}

}  // namespace liepdo
