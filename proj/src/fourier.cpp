#include "liepdo/fourier.hpp"

#include <cmath>
#include <complex>
#include <iostream>

#include "liepdo/detail/tables.hpp"
#include "liepdo/parallel.hpp"

namespace liepdo {

namespace {
using cd = std::complex<double>;
using detail::RowMat;
using detail::RowMatC;
using detail::d_tables;
using detail::phase_table;

int max_so3_degree(const std::vector<DualIndex>& indices) {
  int lmax = 0;
  for (const auto& xi : indices) lmax = std::max(lmax, xi.label[0]);
  return lmax;
}

}  // namespace

const Eigen::MatrixXcd* FourierCoefficients::find(const DualIndex& xi) const {
  for (std::size_t i = 0; i < indices.size(); ++i)
    if (indices[i] == xi) return &blocks[i];
  return nullptr;
}

Eigen::MatrixXcd* FourierCoefficients::find(const DualIndex& xi) {
  for (std::size_t i = 0; i < indices.size(); ++i)
    if (indices[i] == xi) return &blocks[i];
  return nullptr;
}

FourierCoefficients zero_coefficients(const Group& group, double lam) {
  FourierCoefficients c;
  c.group = group;
  c.indices = group.enumerate_dual(lam);
  c.blocks.reserve(c.indices.size());
  for (const auto& xi : c.indices) {
    int d = dimension(xi);
    c.blocks.emplace_back(Eigen::MatrixXcd::Zero(d, d));
  }
  return c;
}

FourierCoefficients forward_transform(const GroupFunction& f, double lam) {
  const QuadratureGrid& g = *f.grid;
  FourierCoefficients c = zero_coefficients(g.group, lam);
  double needed = 1.0;
  for (const auto& xi : c.indices) needed = std::max(needed, weight(xi));
  if (g.exactness_band + 1e-12 < needed)
    std::cerr << "[liepdo] warning: grid exactness band " << g.exactness_band
              << " below requested band " << needed << "; coefficients may alias\n";

  const std::size_t nnodes = g.size();
  Eigen::VectorXcd cw(nnodes);
  for (std::size_t i = 0; i < nnodes; ++i) cw(i) = g.weights[i] * f.values(i);

  if (g.group.backend == Backend::Torus) {
    const int n = g.group.torus_dim;
    parallel_for(c.indices.size(), [&](std::size_t bi) {
      const auto& k = c.indices[bi].label;
      cd acc = 0;
      for (std::size_t i = 0; i < nnodes; ++i) {
        double phase = 0;
        const double* x = g.node(i);
        for (int j = 0; j < n; ++j) phase += k[j] * x[j];
        acc += cw(i) * std::exp(cd(0, -phase));
      }
      c.blocks[bi](0, 0) = acc;
    });
    return c;
  }

  // SO(3): direct sum over nodes with cached Wigner and phase tables.
  const int lmax = max_so3_degree(c.indices);
  const auto pa = phase_table(g.axis_alpha, lmax);
  const auto qg = phase_table(g.axis_gamma, lmax);
  const auto dt = d_tables(g.axis_beta, lmax);
  const int nb = int(g.axis_beta.size());
  const int ng = int(g.axis_gamma.size());

  parallel_for(c.indices.size(), [&](std::size_t bi) {
    const int l = c.indices[bi].label[0];
    RowMatC acc = RowMatC::Zero(2 * l + 1, 2 * l + 1);
    for (std::size_t i = 0; i < nnodes; ++i) {
      const cd cv = cw(i);
      if (cv == cd(0, 0)) continue;
      const int a = int(i / (std::size_t(nb) * ng));
      const int b = int((i / ng) % nb);
      const int gidx = int(i % ng);
      const RowMat& d = dt[b][l];
      const cd* pam = pa[a].data() + (lmax - l);
      const cd* qgn = qg[gidx].data() + (lmax - l);
      // acc(m,n) accumulates sum_i c_i conj(D_{mn}); xi(x)^* entry (m,n)
      // is conj(D_{nm}), so the block is the transpose of acc.
      for (int m = 0; m < 2 * l + 1; ++m) {
        const cd u = cv * pam[m];
        const double* drow = d.data() + std::size_t(m) * (2 * l + 1);
        cd* arow = acc.data() + std::size_t(m) * (2 * l + 1);
        for (int nn = 0; nn < 2 * l + 1; ++nn) arow[nn] += u * (drow[nn] * qgn[nn]);
      }
    }
    c.blocks[bi] = acc.transpose();
  });
  return c;
}

GroupFunction inverse_transform(const FourierCoefficients& c, const GridPtr& grid) {
  const QuadratureGrid& g = *grid;
  if (!(g.group == c.group))
    throw ConfigError("inverse_transform: grid and coefficients disagree on group");
  GroupFunction f;
  f.grid = grid;
  f.values = Eigen::VectorXcd::Zero(g.size());

  std::vector<char> nonzero(c.blocks.size());
  for (std::size_t i = 0; i < c.blocks.size(); ++i)
    nonzero[i] = c.blocks[i].squaredNorm() > 0 ? 1 : 0;

  if (g.group.backend == Backend::Torus) {
    const int n = g.group.torus_dim;
    parallel_for(g.size(), [&](std::size_t i) {
      const double* x = g.node(i);
      cd acc = 0;
      for (std::size_t bi = 0; bi < c.indices.size(); ++bi) {
        if (!nonzero[bi]) continue;
        double phase = 0;
        for (int j = 0; j < n; ++j) phase += c.indices[bi].label[j] * x[j];
        acc += c.blocks[bi](0, 0) * std::exp(cd(0, phase));
      }
      f.values(i) = acc;
    });
    return f;
  }

  const int lmax = max_so3_degree(c.indices);
  const auto pa = phase_table(g.axis_alpha, lmax);
  const auto qg = phase_table(g.axis_gamma, lmax);
  const auto dt = d_tables(g.axis_beta, lmax);
  const int nb = int(g.axis_beta.size());
  const int ng = int(g.axis_gamma.size());

  // transposed blocks, row-major: B(m,n) = c(n,m)
  std::vector<RowMatC> bt(c.blocks.size());
  for (std::size_t bi = 0; bi < c.blocks.size(); ++bi)
    if (nonzero[bi]) bt[bi] = c.blocks[bi].transpose();

  parallel_for(g.size(), [&](std::size_t i) {
    const int a = int(i / (std::size_t(nb) * ng));
    const int b = int((i / ng) % nb);
    const int gidx = int(i % ng);
    cd acc = 0;
    for (std::size_t bi = 0; bi < c.indices.size(); ++bi) {
      if (!nonzero[bi]) continue;
      const int l = c.indices[bi].label[0];
      const RowMat& d = dt[b][l];
      const RowMatC& B = bt[bi];
      const cd* pam = pa[a].data() + (lmax - l);
      const cd* qgn = qg[gidx].data() + (lmax - l);
      cd block_acc = 0;
      for (int m = 0; m < 2 * l + 1; ++m) {
        const double* drow = d.data() + std::size_t(m) * (2 * l + 1);
        const cd* brow = B.data() + std::size_t(m) * (2 * l + 1);
        cd s = 0;
        // D_{mn} = e^{-im a} d_{mn} e^{-in g}; pairing with c(n,m)
        for (int nn = 0; nn < 2 * l + 1; ++nn) s += drow[nn] * std::conj(qgn[nn]) * brow[nn];
        block_acc += std::conj(pam[m]) * s;
      }
      acc += double(2 * l + 1) * block_acc;
    }
    f.values(i) = acc;
  });
  return f;
}

double plancherel_norm(const FourierCoefficients& c) {
  double s = 0;
  for (std::size_t i = 0; i < c.blocks.size(); ++i)
    s += dimension(c.indices[i]) * c.blocks[i].squaredNorm();
  return std::sqrt(s);
}

void truncate(FourierCoefficients& c, double threshold) {
  for (auto& b : c.blocks)
    b = b.unaryExpr([&](cd v) { return std::abs(v) < threshold ? cd(0, 0) : v; });
}

}  // namespace liepdo
