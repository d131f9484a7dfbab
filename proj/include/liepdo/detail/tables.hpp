#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "liepdo/wigner.hpp"

namespace liepdo::detail {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RowMatC =
    Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// exp(+i m theta_j) for m in [-lmax, lmax], per axis point.
inline std::vector<std::vector<std::complex<double>>> phase_table(
    const std::vector<double>& axis, int lmax) {
  std::vector<std::vector<std::complex<double>>> t(axis.size());
  for (std::size_t j = 0; j < axis.size(); ++j) {
    t[j].resize(2 * lmax + 1);
    for (int m = -lmax; m <= lmax; ++m)
      t[j][m + lmax] = std::exp(std::complex<double>(0, m * axis[j]));
  }
  return t;
}

inline std::vector<std::vector<RowMat>> d_tables(const std::vector<double>& betas, int lmax) {
  std::vector<std::vector<RowMat>> dt(betas.size());
  for (std::size_t b = 0; b < betas.size(); ++b) {
    auto full = wigner_d_table(lmax, betas[b]);
    dt[b].reserve(full.size());
    for (auto& m : full) dt[b].emplace_back(m);
  }
  return dt;
}

}  // namespace liepdo::detail
