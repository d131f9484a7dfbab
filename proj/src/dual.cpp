#include "liepdo/dual.hpp"

#include <algorithm>
#include <cmath>

namespace liepdo {

int dimension(const DualIndex& xi) {
  if (xi.backend == Backend::Torus) return 1;
  return 2 * xi.label.at(0) + 1;
}

double casimir_eigenvalue(const DualIndex& xi) {
  if (xi.backend == Backend::Torus) {
    double s = 0;
    for (int k : xi.label) s += double(k) * k;
    return s;
  }
  double l = xi.label.at(0);
  return l * (l + 1);
}

double weight(const DualIndex& xi) {
  return std::sqrt(1.0 + casimir_eigenvalue(xi));
}

bool dual_less(const DualIndex& a, const DualIndex& b) {
  double wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  return a.label < b.label;
}

Backend parse_backend(const std::string& tag, int* torus_dim) {
  if (tag == "so3") {
    if (torus_dim) *torus_dim = 0;
    return Backend::SO3;
  }
  if (tag.rfind("torus-", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(tag.substr(6));
    } catch (...) {
      throw ConfigError("unknown backend tag: " + tag);
    }
    if (n < 1) throw ConfigError("torus dimension must be >= 1: " + tag);
    if (torus_dim) *torus_dim = n;
    return Backend::Torus;
  }
  throw ConfigError("unknown backend tag: " + tag);
}

namespace {

void enumerate_torus(int n, double lam, std::vector<int>& label, int axis,
                     std::vector<DualIndex>& out) {
  if (axis == n) {
    DualIndex xi{Backend::Torus, label};
    if (weight(xi) <= lam) out.push_back(std::move(xi));
    return;
  }
  int kmax = int(std::floor(std::sqrt(std::max(0.0, lam * lam - 1.0))));
  for (int k = -kmax; k <= kmax; ++k) {
    label[axis] = k;
    enumerate_torus(n, lam, label, axis + 1, out);
  }
}

}  // namespace

std::vector<DualIndex> enumerate_dual(Backend backend, int torus_dim, double lam) {
  if (lam < 1.0) throw ConfigError("band limit must be >= 1");
  std::vector<DualIndex> out;
  if (backend == Backend::Torus) {
    if (torus_dim < 1) throw ConfigError("torus dimension must be >= 1");
    std::vector<int> label(torus_dim, 0);
    enumerate_torus(torus_dim, lam, label, 0, out);
  } else {
    for (int l = 0;; ++l) {
      DualIndex xi{Backend::SO3, {l}};
      if (weight(xi) > lam) break;
      out.push_back(std::move(xi));
    }
  }
  std::sort(out.begin(), out.end(), dual_less);
  return out;
}

std::string label_string(const DualIndex& xi) {
  std::string s = "(";
  for (size_t i = 0; i < xi.label.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xi.label[i]);
  }
  s += ")";
  return s;
}

}  // namespace liepdo
