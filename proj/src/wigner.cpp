#include "liepdo/wigner.hpp"

#include <cmath>

namespace liepdo {

namespace {

double log_fact(int n) { return std::lgamma(double(n) + 1.0); }

// d^{l0}_{mn} at l0 = max(|m|,|n|); single-term edge cases of the explicit
// Wigner sum.
double seed_value(int j, int m, int n, double c, double s) {
  if (n == j) {
    double lp = 0.5 * (log_fact(2 * j) - log_fact(j + m) - log_fact(j - m));
    return std::exp(lp) * std::pow(c, j + m) * std::pow(s, j - m);
  }
  if (n == -j) {
    double lp = 0.5 * (log_fact(2 * j) - log_fact(j + m) - log_fact(j - m));
    double v = std::exp(lp) * std::pow(c, j - m) * std::pow(s, j + m);
    return ((j + m) % 2 == 0) ? v : -v;
  }
  if (m == j) {
    double lp = 0.5 * (log_fact(2 * j) - log_fact(j + n) - log_fact(j - n));
    double v = std::exp(lp) * std::pow(c, j + n) * std::pow(s, j - n);
    return ((j - n) % 2 == 0) ? v : -v;
  }
  // m == -j
  double lp = 0.5 * (log_fact(2 * j) - log_fact(j + n) - log_fact(j - n));
  return std::exp(lp) * std::pow(c, j - n) * std::pow(s, j + n);
}

}  // namespace

std::vector<Eigen::MatrixXd> wigner_d_table(int lmax, double beta) {
  std::vector<Eigen::MatrixXd> table;
  table.reserve(lmax + 1);
  for (int l = 0; l <= lmax; ++l) table.emplace_back(Eigen::MatrixXd::Zero(2 * l + 1, 2 * l + 1));

  const double x = std::cos(beta);
  const double c = std::cos(beta / 2), s = std::sin(beta / 2);

  for (int m = -lmax; m <= lmax; ++m) {
    for (int n = -lmax; n <= lmax; ++n) {
      const int l0 = std::max(std::abs(m), std::abs(n));
      double prev = 0.0;
      double cur = seed_value(l0, m, n, c, s);
      table[l0](m + l0, n + l0) = cur;
      for (int j = l0; j < lmax; ++j) {
        double next;
        if (j == 0) {
          next = x * cur;  // m = n = 0
        } else {
          const double w1 =
              std::sqrt(double((j + 1) * (j + 1) - m * m) * double((j + 1) * (j + 1) - n * n));
          const double w0 = std::sqrt(double(j * j - m * m) * double(j * j - n * n));
          next = ((2 * j + 1) * (j * (j + 1) * x - double(m) * n) * cur -
                  (j + 1) * w0 * prev) /
                 (j * w1);
        }
        prev = cur;
        cur = next;
        table[j + 1](m + j + 1, n + j + 1) = cur;
      }
    }
  }
  return table;
}

Eigen::MatrixXd wigner_d(int l, double beta) {
  return wigner_d_table(l, beta).back();
}

}  // namespace liepdo
