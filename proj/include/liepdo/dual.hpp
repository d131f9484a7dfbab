#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace liepdo {

enum class Backend { Torus, SO3 };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BandLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Label of an irreducible representation class: integer vector k for the
/// torus, a single nonnegative integer l for SO(3).
struct DualIndex {
  Backend backend;
  std::vector<int> label;

  bool operator==(const DualIndex& other) const {
    return backend == other.backend && label == other.label;
  }
};

int dimension(const DualIndex& xi);
double casimir_eigenvalue(const DualIndex& xi);

/// <xi> = (1 + lambda)^{1/2}; equals 1 exactly for the trivial representation.
double weight(const DualIndex& xi);

bool dual_less(const DualIndex& a, const DualIndex& b);

Backend parse_backend(const std::string& tag, int* torus_dim);

/// All xi with <xi> <= lam, sorted by (weight, lexicographic label).
std::vector<DualIndex> enumerate_dual(Backend backend, int torus_dim, double lam);

std::string label_string(const DualIndex& xi);

}  // namespace liepdo
