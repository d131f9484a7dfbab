#pragma once

#include "liepdo/fourier.hpp"

namespace liepdo {

/// Index m of the dyadic band 2^m <= <xi> < 2^{m+1}. The bands partition
/// the dual since <xi> >= 1.
int dyadic_band(const DualIndex& xi);

/// Coefficients restricted to band m (other blocks zeroed).
FourierCoefficients restrict_to_band(const FourierCoefficients& c, int m);

/// Op(chi_m) f: inverse transform of the band-restricted coefficients.
GroupFunction dyadic_project(const GroupFunction& f, int m, double lam);

/// Weighted quadrature norm for finite p; grid max for p = infinity
/// (a sup proxy, reliable at oversample >= 2 for band-limited data).
double lp_norm(const GroupFunction& f, double p);

double besov_norm(const GroupFunction& f, double s, double p, double q, double lam);

/// Besov norm evaluated from already-computed coefficients; block L^p norms
/// are taken on the given grid.
double besov_norm_from_coeffs(const FourierCoefficients& c, const GridPtr& grid,
                              double s, double p, double q);

double sobolev_norm(const GroupFunction& f, double s, double lam);
double sobolev_norm_from_coeffs(const FourierCoefficients& c, double s);

}  // namespace liepdo
