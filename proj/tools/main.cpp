// liepdo command line: transforms, Besov norms, and the verification
// experiments. Exit codes: 0 success/pass, 1 verification failure,
// 2 usage or configuration error.

#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "liepdo/besov.hpp"
#include "liepdo/harness.hpp"
#include "liepdo/parallel.hpp"
#include "liepdo/symbol.hpp"

using namespace liepdo;
using cd = std::complex<double>;

namespace {

double parse_pq(const std::string& s) {
  if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  return std::stod(s);
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

// named inputs: single-char:k=2 | single-coeff:l=1,m=0,n=0 | random:seed=7
FourierCoefficients named_input(const Group& group, const std::string& spec, double lam) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw ConfigError("input spec needs name:args");
  std::string name = spec.substr(0, colon);
  std::map<std::string, std::string> kv;
  std::stringstream ss(spec.substr(colon + 1));
  std::string tok;
  std::string pending_key;
  while (std::getline(ss, tok, ',')) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) {
      // continuation of a comma-separated value, e.g. k=1,-2
      if (pending_key.empty()) throw ConfigError("bad input spec token: " + tok);
      kv[pending_key] += "," + tok;
    } else {
      pending_key = tok.substr(0, eq);
      kv[pending_key] = tok.substr(eq + 1);
    }
  }

  FourierCoefficients c = zero_coefficients(group, lam);
  if (name == "single-char") {
    if (group.backend != Backend::Torus)
      throw ConfigError("single-char inputs require a torus backend");
    auto k = parse_int_list(kv.at("k"));
    if (int(k.size()) != group.torus_dim)
      throw ConfigError("single-char: k needs one entry per torus dimension");
    auto* b = c.find({Backend::Torus, k});
    if (!b) throw ConfigError("single-char: frequency outside the band limit");
    (*b)(0, 0) = 1.0;
    return c;
  }
  if (name == "single-coeff") {
    if (group.backend != Backend::SO3)
      throw ConfigError("single-coeff inputs require the so3 backend");
    int l = std::stoi(kv.at("l")), m = std::stoi(kv.at("m")), n = std::stoi(kv.at("n"));
    if (std::abs(m) > l || std::abs(n) > l) throw ConfigError("single-coeff: |m|,|n| <= l");
    auto* b = c.find({Backend::SO3, {l}});
    if (!b) throw ConfigError("single-coeff: degree outside the band limit");
    (*b)(m + l, n + l) = 1.0;
    return c;
  }
  if (name == "random") {
    return random_coefficients(group, std::stoull(kv.at("seed")), lam);
  }
  throw ConfigError("unknown input kind: " + name);
}

Group group_for(const std::string& backend) {
  int n = 0;
  Backend b = parse_backend(backend, &n);
  return b == Backend::Torus ? Group::torus(n) : Group::so3();
}

double resolve_band(const Group& group, double band, int lmax) {
  if (lmax >= 0) {
    if (group.backend != Backend::SO3) throw ConfigError("--lmax applies to so3 only");
    return std::sqrt(1.0 + double(lmax) * (lmax + 1));
  }
  return band;
}

ordered_json coefficients_json(const FourierCoefficients& c, const std::string& backend,
                               double lam) {
  ordered_json j;
  j["schema"] = "liepdo-coefficients-v1";
  j["backend"] = backend;
  j["band"] = lam;
  j["blocks"] = ordered_json::array();
  for (std::size_t i = 0; i < c.indices.size(); ++i) {
    ordered_json jb;
    jb["label"] = c.indices[i].label;
    jb["dim"] = dimension(c.indices[i]);
    ordered_json re = ordered_json::array(), im = ordered_json::array();
    for (Eigen::Index r = 0; r < c.blocks[i].rows(); ++r) {
      ordered_json rr = ordered_json::array(), ri = ordered_json::array();
      for (Eigen::Index col = 0; col < c.blocks[i].cols(); ++col) {
        rr.push_back(c.blocks[i](r, col).real());
        ri.push_back(c.blocks[i](r, col).imag());
      }
      re.push_back(rr);
      im.push_back(ri);
    }
    jb["re"] = re;
    jb["im"] = im;
    j["blocks"].push_back(jb);
  }
  return j;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file: " + out);
  f << text;
}

std::string format_norm(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  std::string s = os.str();
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find("inf") == std::string::npos)
    s += ".0";
  return s;
}

int run_experiment_command(const NormReport& report, const std::string& out,
                           const std::string& format) {
  for (const auto& s : report.series) {
    std::cout << s.name << ": slope " << s.slope << (s.slope_ok ? " (ok)" : " (FAIL)") << "\n";
    if (!s.slope_ok)
      for (const auto& row : s.rows)
        std::cout << "  band " << row.band << " estimate " << row.norm_estimate << "\n";
  }
  std::cout << "verdict: " << report.verdict << "\n";
  if (!out.empty()) write_report(report, out, format);
  if (report.verdict == "exploratory") return 0;
  return report.verdict == "pass" ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"global pseudo-differential calculus on T^n and SO(3)"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "cap worker threads (default: all cores)");

  std::string backend = "torus-1", input, out, format = "json";
  double band = 16.0, oversample = 2.0;
  int lmax = -1;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    sub->add_option("--backend", backend, "torus-1 | torus-2 | torus-3 | so3");
    sub->add_option("--band", band, "band limit (default 16)");
    sub->add_option("--lmax", lmax, "so3 degree cap; overrides --band");
    sub->add_option("--oversample", oversample, "quadrature oversampling (default 2)");
    sub->add_option("--out", out, "write machine report to this file");
    sub->add_option("--format", format, "json | csv");
    if (with_input) sub->add_option("--input", input, "named input function")->required();
  };

  auto* cmd_transform = app.add_subcommand("transform", "forward Fourier transform");
  add_common(cmd_transform, true);

  auto* cmd_norm = app.add_subcommand("norm", "Besov norm of a named input");
  double s_val = 0.0;
  std::string p_str = "inf", q_str = "inf";
  add_common(cmd_norm, true);
  cmd_norm->add_option("--s", s_val, "smoothness index");
  cmd_norm->add_option("--p", p_str, "block integrability (number or inf)");
  cmd_norm->add_option("--q", q_str, "block summability (number or inf)");

  std::vector<double> bands, s_list{0.0};
  double rho = 1.0;
  std::uint64_t seed = 42;
  int probes = 8;
  double constants_lambda = 0.0;
  bool negative_control = false;

  auto add_experiment = [&](CLI::App* sub) {
    sub->add_option("--backend", backend, "torus-1 | torus-2 | torus-3 | so3");
    sub->add_option("--rho", rho, "symbol class parameter");
    sub->add_option("--bands", bands, "ascending band list")->required()->delimiter(',');
    sub->add_option("--seed", seed, "PRNG seed");
    sub->add_option("--probes", probes, "random probes per cell");
    sub->add_option("--oversample", oversample, "quadrature oversampling");
    sub->add_option("--out", out, "write machine report to this file");
    sub->add_option("--format", format, "json | csv");
  };

  auto* cmd_theorem = app.add_subcommand("verify-theorem", "norm-estimate flatness across bands");
  add_experiment(cmd_theorem);
  cmd_theorem->add_option("--s", s_list, "smoothness indices")->delimiter(',');
  cmd_theorem->add_option("--constants-lambda", constants_lambda,
                          "band cap for class-constant evaluation");
  cmd_theorem->add_flag("--negative-control", negative_control,
                        "run the sign-flip contrast symbol instead (exploratory)");

  auto* cmd_lemma = app.add_subcommand("verify-lemma", "window-symbol norm uniformity across scales");
  add_experiment(cmd_lemma);

  auto* cmd_corollary = app.add_subcommand("check-corollary", "reduction-region membership");
  double m_par = 0.0, delta = 0.0;
  int ell = 0, n_dim = 1;
  cmd_corollary->add_option("--m", m_par, "symbol order")->required();
  cmd_corollary->add_option("--rho", rho, "class parameter rho");
  cmd_corollary->add_option("--delta", delta, "class parameter delta");
  cmd_corollary->add_option("--ell", ell, "derivative count");
  cmd_corollary->add_option("--n", n_dim, "group dimension");
  cmd_corollary->add_option("--band", band, "band limit for the weight sweep");

  auto* cmd_plancherel = app.add_subcommand("plancherel-test", "round-trip and norm identity");
  add_common(cmd_plancherel, false);
  cmd_plancherel->add_option("--seed", seed, "PRNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (threads > 0) set_thread_count(threads);

    if (cmd_transform->parsed()) {
      Group g = group_for(backend);
      double lam = resolve_band(g, band, lmax);
      auto c = named_input(g, input, lam);
      auto grid = make_grid(g, lam, oversample);
      auto f = inverse_transform(c, grid);
      auto roundtrip = forward_transform(f, lam);
      std::cout << "plancherel norm " << format_norm(plancherel_norm(roundtrip)) << "\n";
      emit(coefficients_json(roundtrip, backend, lam).dump(2) + "\n", out);
      return 0;
    }

    if (cmd_norm->parsed()) {
      Group g = group_for(backend);
      double lam = resolve_band(g, band, lmax);
      auto c = named_input(g, input, lam);
      auto grid = make_grid(g, lam, oversample);
      double v = besov_norm_from_coeffs(c, grid, s_val, parse_pq(p_str), parse_pq(q_str));
      std::cout << format_norm(v) << "\n";
      return 0;
    }

    if (cmd_theorem->parsed()) {
      ExperimentConfig cfg;
      cfg.backend = backend;
      cfg.rho = rho;
      cfg.s_list = s_list;
      cfg.bands = bands;
      cfg.probe_count = probes;
      cfg.seed = seed;
      cfg.oversample = oversample;
      cfg.constants_lambda = constants_lambda;
      NormReport r =
          negative_control ? negative_control_experiment(cfg) : theorem_experiment(cfg);
      return run_experiment_command(r, out, format);
    }

    if (cmd_lemma->parsed()) {
      ExperimentConfig cfg;
      cfg.backend = backend;
      cfg.rho = rho;
      cfg.bands = bands;
      cfg.probe_count = probes;
      cfg.seed = seed;
      cfg.oversample = oversample;
      return run_experiment_command(lemma_uniformity_experiment(cfg), out, format);
    }

    if (cmd_corollary->parsed()) {
      bool ok = corollary_reduction_check(m_par, rho, delta, ell, n_dim, band);
      std::cout << (ok ? "true" : "false") << "\n";
      return ok ? 0 : 1;
    }

    if (cmd_plancherel->parsed()) {
      Group g = group_for(backend);
      double lam = resolve_band(g, band, lmax);
      auto grid = make_grid(g, lam, oversample);
      auto f = random_bandlimited(g, grid, seed, lam);
      auto c = forward_transform(f, lam);
      auto back = inverse_transform(c, grid);
      double sup = f.values.cwiseAbs().maxCoeff();
      double rt = (back.values - f.values).cwiseAbs().maxCoeff() / sup;
      double grid_l2 = 0;
      for (std::size_t i = 0; i < grid->size(); ++i)
        grid_l2 += grid->weights[i] * std::norm(f.values(i));
      grid_l2 = std::sqrt(grid_l2);
      double pl = std::abs(grid_l2 - plancherel_norm(c)) / grid_l2;
      std::cout << "round-trip rel err " << rt << ", plancherel rel err " << pl << "\n";
      return (rt <= 1e-9 && pl <= 1e-9) ? 0 : 1;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BandLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
