#include "liepdo/symbol.hpp"

#include <cmath>
#include <memory>

#include "liepdo/besov.hpp"
#include "liepdo/detail/tables.hpp"
#include "liepdo/parallel.hpp"

namespace liepdo {

namespace {
using cd = std::complex<double>;
}

std::string word_string(const DifferenceWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& [i, j] : w)
    s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  return s;
}

std::vector<std::pair<int, int>> canonical_generators(const Group& group) {
  std::vector<std::pair<int, int>> g;
  if (group.backend == Backend::Torus) {
    for (int j = 0; j < group.torus_dim; ++j) g.emplace_back(j, j);
  } else {
    // entries of the l=1 representation around the center
    g = {{1, 1}, {1, 2}, {2, 1}};
  }
  return g;
}

cd difference_weight_function(const Group& group, const DifferenceWord& w, const double* y) {
  cd q = 1.0;
  if (group.backend == Backend::Torus) {
    for (const auto& [i, j] : w) {
      if (i != j || i < 0 || i >= group.torus_dim)
        throw ConfigError("difference word entry out of range for torus");
      q *= std::exp(cd(0, y[i])) - 1.0;
    }
    return q;
  }
  DualIndex xi1{Backend::SO3, {1}};
  Eigen::MatrixXcd D1 = rep_eval(group, y, xi1);
  for (const auto& [i, j] : w) {
    if (i < 0 || i > 2 || j < 0 || j > 2)
      throw ConfigError("difference word entry out of range for so3");
    q *= D1(i, j) - (i == j ? 1.0 : 0.0);
  }
  return q;
}

double ClassConstants::sup() const {
  double s = 0;
  for (const auto& [w, c] : constants) s = std::max(s, c);
  return s;
}

Symbol identity_symbol() {
  Symbol s;
  s.kind = Symbol::Kind::Multiplier;
  s.eval = [](const double*, const DualIndex& xi) {
    return Eigen::MatrixXcd::Identity(dimension(xi), dimension(xi)).eval();
  };
  s.rho = 1.0;
  s.order = 0.0;
  return s;
}

Symbol scalar_multiplier(cd c) {
  Symbol s = identity_symbol();
  s.eval = [c](const double*, const DualIndex& xi) {
    return (c * Eigen::MatrixXcd::Identity(dimension(xi), dimension(xi))).eval();
  };
  return s;
}

Symbol weight_power_symbol(double t) {
  Symbol s;
  s.kind = Symbol::Kind::Multiplier;
  s.eval = [t](const double*, const DualIndex& xi) {
    double v = std::pow(weight(xi), -t);
    return (v * Eigen::MatrixXcd::Identity(dimension(xi), dimension(xi))).eval();
  };
  s.order = -t;
  return s;
}

Symbol band_window_symbol(double t, double r) {
  Symbol s;
  s.kind = Symbol::Kind::Multiplier;
  s.eval = [t, r](const double*, const DualIndex& xi) {
    double w = weight(xi);
    double v = (w >= r && w <= 2 * r) ? std::pow(w, -t) : 0.0;
    return (v * Eigen::MatrixXcd::Identity(dimension(xi), dimension(xi))).eval();
  };
  s.order = -t;
  return s;
}

Symbol scalar_field_symbol(std::function<cd(const double*)> g, double t) {
  Symbol s;
  s.kind = Symbol::Kind::Full;
  s.eval = [g = std::move(g), t](const double* x, const DualIndex& xi) {
    cd v = g(x) * std::pow(weight(xi), -t);
    return (v * Eigen::MatrixXcd::Identity(dimension(xi), dimension(xi))).eval();
  };
  s.order = -t;
  return s;
}

Eigen::MatrixXcd eval_symbol(const Symbol& s, const double* x, const DualIndex& xi) {
  return s.eval(s.kind == Symbol::Kind::Multiplier ? nullptr : x, xi);
}

Symbol difference_apply(const Group& group, const Symbol& sigma, const DifferenceWord& w,
                        double lam, double oversample) {
  if (sigma.kind != Symbol::Kind::Multiplier)
    throw ConfigError("difference_apply: only multiplier symbols are supported");
  if (w.empty()) return sigma;

  const double src_band = lam + double(w.size());
  GridPtr grid = make_grid(group, lam + 2.0 * w.size(), oversample);

  // kernel of the multiplier, truncated to the enlarged band
  FourierCoefficients src;
  src.group = group;
  src.indices = group.enumerate_dual(src_band);
  src.blocks.reserve(src.indices.size());
  for (const auto& xi : src.indices) src.blocks.push_back(eval_symbol(sigma, nullptr, xi));
  GroupFunction kernel = inverse_transform(src, grid);

  for (std::size_t i = 0; i < grid->size(); ++i)
    kernel.values(i) *= difference_weight_function(group, w, grid->node(i));

  auto table = std::make_shared<FourierCoefficients>(forward_transform(kernel, lam));

  Symbol out;
  out.kind = Symbol::Kind::Multiplier;
  out.rho = sigma.rho;
  out.order = sigma.order - sigma.rho * double(w.size());
  out.eval = [table, lam](const double*, const DualIndex& xi) {
    const Eigen::MatrixXcd* b = table->find(xi);
    if (!b)
      throw BandLimitError("difference_apply result queried beyond its valid band <xi> <= " +
                           std::to_string(lam));
    return *b;
  };
  return out;
}

namespace {

double operator_norm(const Eigen::MatrixXcd& m) {
  if (m.rows() == 1 && m.cols() == 1) return std::abs(m(0, 0));
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

void enumerate_words(const std::vector<std::pair<int, int>>& gens, int k,
                     std::vector<DifferenceWord>& out) {
  // multisets over the generators (scalar q-factors commute)
  std::vector<int> counts(gens.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t g, int remaining) {
    if (g == gens.size()) {
      DifferenceWord w;
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (int c = 0; c < counts[i]; ++c) w.push_back(gens[i]);
      out.push_back(std::move(w));
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      counts[g] = c;
      rec(g + 1, remaining - c);
    }
    counts[g] = 0;
  };
  rec(0, k);
}

}  // namespace

ClassConstants class_constants(const Group& group, const Symbol& sigma, double rho, int k,
                               double lam, double oversample) {
  if (k < 0) throw ConfigError("class_constants: k must be >= 0");
  if (lam < 1.0) throw ConfigError("class_constants: lam must be >= 1");

  ClassConstants cc;
  cc.rho = rho;
  cc.k = k;
  cc.lam = lam;

  std::vector<DifferenceWord> words;
  enumerate_words(canonical_generators(group), k, words);

  const auto dual = group.enumerate_dual(lam);
  const double n = group.dim();

  std::vector<const double*> x_samples{nullptr};
  GridPtr xgrid;
  if (sigma.kind == Symbol::Kind::Full) {
    xgrid = make_grid(group, lam, oversample);
    x_samples.clear();
    for (std::size_t i = 0; i < xgrid->size(); ++i) x_samples.push_back(xgrid->node(i));
  }

  for (const auto& w : words) {
    double cmax = 0;
    const double scale_exp = n / 2.0 * (1.0 - rho) + rho * double(w.size());
    for (const double* x : x_samples) {
      Symbol sw;
      if (sigma.kind == Symbol::Kind::Multiplier) {
        sw = difference_apply(group, sigma, w, lam, oversample);
      } else {
        Symbol frozen;
        frozen.kind = Symbol::Kind::Multiplier;
        frozen.eval = [&sigma, x](const double*, const DualIndex& xi) {
          return sigma.eval(x, xi);
        };
        sw = difference_apply(group, frozen, w, lam, oversample);
      }
      for (const auto& xi : dual) {
        double v = operator_norm(eval_symbol(sw, nullptr, xi)) * std::pow(weight(xi), scale_exp);
        cmax = std::max(cmax, v);
      }
      if (sigma.kind == Symbol::Kind::Multiplier) break;
    }
    cc.constants.emplace_back(w, cmax);
  }
  return cc;
}

FourierCoefficients apply_multiplier(const Symbol& sigma, const FourierCoefficients& c) {
  if (sigma.kind != Symbol::Kind::Multiplier)
    throw ConfigError("apply_multiplier: symbol must be a multiplier");
  FourierCoefficients out = c;
  for (std::size_t i = 0; i < out.indices.size(); ++i)
    out.blocks[i] = eval_symbol(sigma, nullptr, out.indices[i]) * out.blocks[i];
  return out;
}

GroupFunction quantize_apply(const Symbol& sigma, const GroupFunction& f, double lam) {
  FourierCoefficients fc = forward_transform(f, lam);
  if (sigma.kind == Symbol::Kind::Multiplier)
    return inverse_transform(apply_multiplier(sigma, fc), f.grid);

  const QuadratureGrid& g = *f.grid;
  GroupFunction out;
  out.grid = f.grid;
  out.values = Eigen::VectorXcd::Zero(g.size());

  if (g.group.backend == Backend::Torus) {
    parallel_for(g.size(), [&](std::size_t i) {
      const double* x = g.node(i);
      cd acc = 0;
      for (std::size_t bi = 0; bi < fc.indices.size(); ++bi) {
        const auto& xi = fc.indices[bi];
        Eigen::MatrixXcd D = rep_eval(g.group, x, xi);
        acc += (double(dimension(xi)) *
                (D * sigma.eval(x, xi) * fc.blocks[bi]).trace());
      }
      out.values(i) = acc;
    });
    return out;
  }

  // SO(3): evaluate the quantization sum per node with cached tables.
  int lmax = 0;
  for (const auto& xi : fc.indices) lmax = std::max(lmax, xi.label[0]);
  const auto pa = detail::phase_table(g.axis_alpha, lmax);
  const auto qg = detail::phase_table(g.axis_gamma, lmax);
  const auto dt = detail::d_tables(g.axis_beta, lmax);
  const int nb = int(g.axis_beta.size());
  const int ng = int(g.axis_gamma.size());

  parallel_for(g.size(), [&](std::size_t i) {
    const double* x = g.node(i);
    const int a = int(i / (std::size_t(nb) * ng));
    const int b = int((i / ng) % nb);
    const int gidx = int(i % ng);
    cd acc = 0;
    for (std::size_t bi = 0; bi < fc.indices.size(); ++bi) {
      const auto& xi = fc.indices[bi];
      const int l = xi.label[0];
      detail::RowMatC M = (sigma.eval(x, xi) * fc.blocks[bi]).transpose();  // M(m,n) = (sf)(n,m)
      const detail::RowMat& d = dt[b][l];
      const cd* pam = pa[a].data() + (lmax - l);
      const cd* qgn = qg[gidx].data() + (lmax - l);
      cd block_acc = 0;
      for (int m = 0; m < 2 * l + 1; ++m) {
        const double* drow = d.data() + std::size_t(m) * (2 * l + 1);
        const cd* mrow = M.data() + std::size_t(m) * (2 * l + 1);
        cd s = 0;
        for (int nn = 0; nn < 2 * l + 1; ++nn) s += drow[nn] * std::conj(qgn[nn]) * mrow[nn];
        block_acc += std::conj(pam[m]) * s;
      }
      acc += double(2 * l + 1) * block_acc;
    }
    out.values(i) = acc;
  });
  return out;
}

}  // namespace liepdo
