#include "liepdo/besov.hpp"

#include <cmath>
#include <map>

namespace liepdo {

int dyadic_band(const DualIndex& xi) {
  int m = int(std::floor(std::log2(weight(xi))));
  return m < 0 ? 0 : m;
}

FourierCoefficients restrict_to_band(const FourierCoefficients& c, int m) {
  FourierCoefficients out = c;
  for (std::size_t i = 0; i < out.indices.size(); ++i)
    if (dyadic_band(out.indices[i]) != m) out.blocks[i].setZero();
  return out;
}

GroupFunction dyadic_project(const GroupFunction& f, int m, double lam) {
  if (m < 0) throw ConfigError("dyadic_project: band index must be >= 0");
  FourierCoefficients c = forward_transform(f, lam);
  return inverse_transform(restrict_to_band(c, m), f.grid);
}

double lp_norm(const GroupFunction& f, double p) {
  if (p < 1.0) throw ConfigError("lp_norm: p must be in [1, inf]");
  if (std::isinf(p)) {
    double mx = 0;
    for (Eigen::Index i = 0; i < f.values.size(); ++i)
      mx = std::max(mx, std::abs(f.values(i)));
    return mx;
  }
  double s = 0;
  for (Eigen::Index i = 0; i < f.values.size(); ++i)
    s += f.grid->weights[i] * std::pow(std::abs(f.values(i)), p);
  return std::pow(s, 1.0 / p);
}

double besov_norm_from_coeffs(const FourierCoefficients& c, const GridPtr& grid,
                              double s, double p, double q) {
  // group blocks by dyadic band; each xi belongs to exactly one band
  std::map<int, FourierCoefficients> bands;
  for (std::size_t i = 0; i < c.indices.size(); ++i) {
    if (c.blocks[i].squaredNorm() == 0) continue;
    int m = dyadic_band(c.indices[i]);
    auto it = bands.find(m);
    if (it == bands.end()) {
      FourierCoefficients empty;
      empty.group = c.group;
      it = bands.emplace(m, std::move(empty)).first;
    }
    it->second.indices.push_back(c.indices[i]);
    it->second.blocks.push_back(c.blocks[i]);
  }

  if (std::isinf(q)) {
    double mx = 0;
    for (const auto& [m, bc] : bands) {
      double a = lp_norm(inverse_transform(bc, grid), p);
      mx = std::max(mx, std::pow(2.0, m * s) * a);
    }
    return mx;
  }
  double acc = 0;
  for (const auto& [m, bc] : bands) {
    double a = lp_norm(inverse_transform(bc, grid), p);
    acc += std::pow(std::pow(2.0, m * s) * a, q);
  }
  return std::pow(acc, 1.0 / q);
}

double besov_norm(const GroupFunction& f, double s, double p, double q, double lam) {
  return besov_norm_from_coeffs(forward_transform(f, lam), f.grid, s, p, q);
}

double sobolev_norm_from_coeffs(const FourierCoefficients& c, double s) {
  double acc = 0;
  for (std::size_t i = 0; i < c.indices.size(); ++i) {
    double w = weight(c.indices[i]);
    acc += dimension(c.indices[i]) * std::pow(w, 2.0 * s) * c.blocks[i].squaredNorm();
  }
  return std::sqrt(acc);
}

double sobolev_norm(const GroupFunction& f, double s, double lam) {
  return sobolev_norm_from_coeffs(forward_transform(f, lam), s);
}

}  // namespace liepdo
