#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liepdo/fourier.hpp"

namespace liepdo {

/// Matrix-valued symbol sigma(x, xi). Multiplier symbols ignore x (the
/// evaluator receives nullptr).
struct Symbol {
  enum class Kind { Multiplier, Full };
  Kind kind = Kind::Multiplier;
  std::function<Eigen::MatrixXcd(const double* x, const DualIndex& xi)> eval;
  double rho = 1.0;
  double order = 0.0;
};

/// Sequence of entry pairs of the fixed first-order representation xi0.
/// Torus: (j, j) selects the j-th coordinate character. SO(3): 0-based
/// entries of the l=1 representation.
using DifferenceWord = std::vector<std::pair<int, int>>;

std::string word_string(const DifferenceWord& w);

/// The n canonical first-order differences D_1..D_n used by class_constants.
std::vector<std::pair<int, int>> canonical_generators(const Group& group);

/// q_w(y) = prod_r (xi0(y)_{i_r j_r} - delta_{i_r j_r}).
std::complex<double> difference_weight_function(const Group& group, const DifferenceWord& w,
                                                const double* y);

struct ClassConstants {
  std::vector<std::pair<DifferenceWord, double>> constants;
  double rho = 1.0;
  int k = 0;
  double lam = 1.0;

  double sup() const;
};

Symbol identity_symbol();
Symbol scalar_multiplier(std::complex<double> c);
/// sigma(xi) = <xi>^{-t} I.
Symbol weight_power_symbol(double t);
/// sigma_R(xi) = <xi>^{-t} 1_{R <= <xi> <= 2R} I.
Symbol band_window_symbol(double t, double r);
/// Full symbol sigma(x, xi) = g(x) <xi>^{-t} I.
Symbol scalar_field_symbol(std::function<std::complex<double>(const double*)> g, double t);

Eigen::MatrixXcd eval_symbol(const Symbol& s, const double* x, const DualIndex& xi);

/// D^w sigma for a multiplier, by the kernel method: inverse-transform sigma,
/// multiply by q_w, transform back. Valid on <xi> <= lam; sigma must be
/// evaluable on <xi> <= lam + |w|.
Symbol difference_apply(const Group& group, const Symbol& sigma, const DifferenceWord& w,
                        double lam, double oversample = 2.0);

/// C_w = max over <xi> <= lam (and grid x-samples for full symbols) of
/// |D^w sigma(x,xi)|_op <xi>^{n/2(1-rho)+rho|w|}, for all canonical words
/// with |w| <= k.
ClassConstants class_constants(const Group& group, const Symbol& sigma, double rho, int k,
                               double lam, double oversample = 2.0);

/// Coefficient-side action of a multiplier: xi-block becomes sigma(xi) f^(xi).
FourierCoefficients apply_multiplier(const Symbol& sigma, const FourierCoefficients& c);

/// Op(sigma) f over <xi> <= lam. Multipliers go through the coefficient fast
/// path; full symbols evaluate the quantization sum at every node.
GroupFunction quantize_apply(const Symbol& sigma, const GroupFunction& f, double lam);

}  // namespace liepdo
