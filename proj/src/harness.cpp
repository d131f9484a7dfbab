#include "liepdo/harness.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace liepdo {

namespace {

using cd = std::complex<double>;

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Box-Muller on explicitly constructed uniforms; avoids the
// implementation-defined std::normal_distribution.
struct GaussianStream {
  std::mt19937_64 eng;
  explicit GaussianStream(std::uint64_t seed) : eng(seed) {}
  double uniform() { return ((eng() >> 11) + 0.5) * 0x1.0p-53; }
  cd complex_gaussian() {
    double u1 = uniform(), u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    // CN(0,1): real and imaginary parts N(0, 1/2)
    return cd(r * std::cos(2 * M_PI * u2), r * std::sin(2 * M_PI * u2)) / std::sqrt(2.0);
  }
};

Group group_from_tag(const std::string& tag) {
  int n = 0;
  Backend b = parse_backend(tag, &n);
  return b == Backend::Torus ? Group::torus(n) : Group::so3();
}

int hoermander_k(int n) { return n / 2 + 1; }

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c) {
  std::uint64_t s = seed;
  splitmix64(s);
  s ^= a * 0xA24BAED4963EE407ull;
  splitmix64(s);
  s ^= b * 0x9FB21C651E98DF25ull;
  splitmix64(s);
  s ^= c * 0xD6E8FEB86659FD93ull;
  return splitmix64(s);
}

void ExperimentConfig::validate() const {
  if (probe_count < 1) throw ConfigError("probe count must be >= 1");
  for (std::size_t i = 1; i < bands.size(); ++i)
    if (bands[i] <= bands[i - 1]) throw ConfigError("bands must be sorted ascending");
  if (bands.empty()) throw ConfigError("at least one band is required");
  group_from_tag(backend);
}

ordered_json ExperimentConfig::to_json() const {
  ordered_json j;
  j["backend"] = backend;
  j["s_list"] = s_list;
  j["rho"] = rho;
  j["bands"] = bands;
  j["probe_count"] = probe_count;
  j["seed"] = seed;
  j["oversample"] = oversample;
  j["constants_lambda"] = constants_lambda;
  return j;
}

FourierCoefficients random_coefficients(const Group& group, std::uint64_t seed, double lam,
                                        const std::function<double(double)>& profile) {
  FourierCoefficients c = zero_coefficients(group, lam);
  GaussianStream gs(seed);
  for (std::size_t i = 0; i < c.indices.size(); ++i) {
    const double scale = profile ? profile(weight(c.indices[i])) : 1.0;
    auto& b = c.blocks[i];
    for (Eigen::Index r = 0; r < b.rows(); ++r)
      for (Eigen::Index col = 0; col < b.cols(); ++col)
        b(r, col) = scale * gs.complex_gaussian();
  }
  return c;
}

GroupFunction random_bandlimited(const Group& group, const GridPtr& grid, std::uint64_t seed,
                                 double lam, const std::function<double(double)>& profile) {
  return inverse_transform(random_coefficients(group, seed, lam, profile), grid);
}

double fit_log_slope(const std::vector<double>& bands, const std::vector<double>& norms) {
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < bands.size(); ++i) {
    if (norms[i] > 0 && bands[i] > 0) {
      xs.push_back(std::log2(bands[i]));
      ys.push_back(std::log2(norms[i]));
    }
  }
  if (xs.size() < 2) return 0.0;
  double n = double(xs.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  double denom = n * sxx - sx * sx;
  if (denom == 0) return 0.0;
  return (n * sxy - sx * sy) / denom;
}

double estimate_operator_norm(const Group& group, const Symbol& sigma, double s, double lam,
                              const ExperimentConfig& cfg, ProbeNorm norm,
                              std::uint64_t stream) {
  GridPtr grid = make_grid(group, lam, cfg.oversample);
  const auto dual = group.enumerate_dual(lam);

  auto probe_norm = [&](const FourierCoefficients& c) {
    if (norm == ProbeNorm::BesovInfInf)
      return besov_norm_from_coeffs(c, grid, s, std::numeric_limits<double>::infinity(),
                                    std::numeric_limits<double>::infinity());
    return lp_norm(inverse_transform(c, grid), std::numeric_limits<double>::infinity());
  };

  std::vector<FourierCoefficients> probes;
  // deterministic single-block matrix-coefficient probes: first dual index
  // of every dyadic band within the band limit
  std::set<int> seen;
  for (const auto& xi : dual) {
    int m = dyadic_band(xi);
    if (seen.insert(m).second) {
      FourierCoefficients c = zero_coefficients(group, lam);
      c.find(xi)->operator()(0, 0) = 1.0;
      probes.push_back(std::move(c));
    }
  }
  for (int p = 0; p < cfg.probe_count; ++p)
    probes.push_back(random_coefficients(group, derive_seed(cfg.seed, stream, 0x5eed, p), lam));

  double best = 0;
  for (const auto& c : probes) {
    double denom = probe_norm(c);
    if (denom < 1e-13) continue;
    FourierCoefficients ac = apply_multiplier(sigma, c);
    best = std::max(best, probe_norm(ac) / denom);
  }
  return best;
}

namespace {

void finalize_series(ReportSeries& series, double tol, bool one_sided = false) {
  std::vector<double> bands, norms;
  for (std::size_t i = 0; i < series.rows.size(); ++i) {
    bands.push_back(series.rows[i].band);
    norms.push_back(series.rows[i].norm_estimate);
    series.rows[i].slope_partial =
        fit_log_slope({bands.begin(), bands.end()}, {norms.begin(), norms.end()});
  }
  series.slope = series.rows.empty() ? 0.0 : series.rows.back().slope_partial;
  series.slope_ok = one_sided ? series.slope <= tol : std::abs(series.slope) <= tol;
}

void finalize_report(NormReport& report, std::size_t band_count) {
  report.pass = true;
  for (const auto& s : report.series) report.pass = report.pass && s.slope_ok;
  if (band_count >= 4)
    report.verdict = report.pass ? "pass" : "fail";
  else
    report.verdict = "no-verdict (fewer than 4 bands)";
}

}  // namespace

NormReport lemma_uniformity_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const Group group = group_from_tag(cfg.backend);
  const double n = group.dim();
  const double t = n / 2.0 * (1.0 - cfg.rho);

  NormReport report;
  report.config = cfg.to_json();
  report.config["experiment"] = "lemma-uniformity";

  ReportSeries series;
  series.name = "lemma";
  series.s = 0;
  double sup_c = 0;
  for (std::size_t bi = 0; bi < cfg.bands.size(); ++bi) {
    const double r = cfg.bands[bi];
    Symbol sigma = band_window_symbol(t, r);
    sigma.rho = cfg.rho;
    double est = estimate_operator_norm(group, sigma, 0.0, 2.0 * r, cfg, ProbeNorm::LInf,
                                        derive_seed(cfg.seed, 1, bi));
    ClassConstants cc = class_constants(group, sigma, cfg.rho, hoermander_k(group.dim()),
                                        2.0 * r, cfg.oversample);
    sup_c = std::max(sup_c, cc.sup());
    BandRow row;
    row.band = r;
    row.norm_estimate = est;
    row.ratio = cc.sup() > 0 ? est / cc.sup() : 0.0;
    series.rows.push_back(row);
    if (bi + 1 == cfg.bands.size())
      for (const auto& [w, c] : cc.constants)
        report.constants.emplace_back(word_string(w), c);
  }
  // The estimates are lower bounds and the exact L^inf norm of the window
  // symbol decays like R^{-n/2(1-rho)} up to logs for rho < 1, so only
  // growth falsifies the uniform bound; the check is one-sided here.
  finalize_series(series, report.slope_tolerance, true);
  report.sup_constant = sup_c;
  report.series.push_back(std::move(series));
  finalize_report(report, cfg.bands.size());
  return report;
}

NormReport theorem_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const Group group = group_from_tag(cfg.backend);
  const double n = group.dim();
  const double t = n / 2.0 * (1.0 - cfg.rho);
  Symbol sigma = weight_power_symbol(t);
  sigma.rho = cfg.rho;

  double lam_const = cfg.constants_lambda;
  if (lam_const <= 0)
    lam_const = group.backend == Backend::SO3 ? std::min(cfg.bands.back(), 8.0)
                                              : cfg.bands.back();

  NormReport report;
  report.config = cfg.to_json();
  report.config["experiment"] = "theorem-flatness";
  report.config["constants_lambda"] = lam_const;

  ClassConstants cc =
      class_constants(group, sigma, cfg.rho, hoermander_k(group.dim()), lam_const, cfg.oversample);
  for (const auto& [w, c] : cc.constants) report.constants.emplace_back(word_string(w), c);
  report.sup_constant = cc.sup();

  for (std::size_t si = 0; si < cfg.s_list.size(); ++si) {
    ReportSeries series;
    series.s = cfg.s_list[si];
    std::ostringstream name;
    name << "s=" << series.s;
    series.name = name.str();
    for (std::size_t bi = 0; bi < cfg.bands.size(); ++bi) {
      BandRow row;
      row.band = cfg.bands[bi];
      row.norm_estimate =
          estimate_operator_norm(group, sigma, series.s, cfg.bands[bi], cfg,
                                 ProbeNorm::BesovInfInf, derive_seed(cfg.seed, 2 + si, bi));
      row.ratio = report.sup_constant > 0 ? row.norm_estimate / report.sup_constant : 0.0;
      series.rows.push_back(row);
    }
    finalize_series(series, report.slope_tolerance);
    report.series.push_back(std::move(series));
  }
  finalize_report(report, cfg.bands.size());
  return report;
}

NormReport negative_control_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const Group group = group_from_tag(cfg.backend);

  // sign depends only on (seed, label), so it is consistent across bands
  const std::uint64_t seed = cfg.seed;
  Symbol sigma;
  sigma.kind = Symbol::Kind::Multiplier;
  sigma.rho = cfg.rho;
  sigma.eval = [seed](const double*, const DualIndex& xi) {
    std::uint64_t h = derive_seed(seed, 0x51674e5, std::uint64_t(std::int64_t(xi.label[0])) + 0x8000,
                                  xi.label.size() > 1 ? std::uint64_t(std::int64_t(xi.label[1])) + 0x8000 : 0);
    int d = dimension(xi);
    return Eigen::MatrixXcd(((h & 1) ? 1.0 : -1.0) * Eigen::MatrixXcd::Identity(d, d));
  };

  NormReport report;
  report.config = cfg.to_json();
  report.config["experiment"] = "negative-control";
  report.sup_constant = 0;

  for (std::size_t si = 0; si < cfg.s_list.size(); ++si) {
    ReportSeries series;
    series.s = cfg.s_list[si];
    std::ostringstream name;
    name << "negative-control s=" << series.s;
    series.name = name.str();
    for (std::size_t bi = 0; bi < cfg.bands.size(); ++bi) {
      BandRow row;
      row.band = cfg.bands[bi];
      row.norm_estimate =
          estimate_operator_norm(group, sigma, series.s, cfg.bands[bi], cfg,
                                 ProbeNorm::BesovInfInf, derive_seed(cfg.seed, 90 + si, bi));
      row.ratio = 0;
      series.rows.push_back(row);
    }
    finalize_series(series, report.slope_tolerance);
    report.series.push_back(std::move(series));
  }
  report.pass = true;
  report.verdict = "exploratory";
  return report;
}

bool corollary_reduction_check(double m, double rho, double delta, int ell, int n, double lam) {
  if (ell < 0 || n < 1) throw ConfigError("corollary_reduction_check: ell >= 0, n >= 1 required");
  const int k = hoermander_k(n);
  std::set<double> ws;
  for (const auto& xi : enumerate_dual(Backend::Torus, n, lam)) ws.insert(weight(xi));
  for (int a = 0; a <= k; ++a) {
    for (int b = 0; b <= ell; ++b) {
      for (double w : ws) {
        double lhs = std::pow(w, -m - rho * a + delta * b);
        double rhs = std::pow(w, -n / 2.0 * (1.0 - rho) - rho * a);
        if (lhs > rhs * (1.0 + 1e-9)) return false;
      }
    }
  }
  return true;
}

ordered_json NormReport::to_json() const {
  ordered_json j;
  j["schema"] = "liepdo-norm-report-v1";
  j["config"] = config;
  j["slope_tolerance"] = slope_tolerance;
  ordered_json jc = ordered_json::object();
  for (const auto& [w, c] : constants) jc[w] = c;
  j["class_constants"] = jc;
  j["sup_constant"] = sup_constant;
  j["series"] = ordered_json::array();
  for (const auto& s : series) {
    ordered_json js;
    js["name"] = s.name;
    js["s"] = s.s;
    js["rows"] = ordered_json::array();
    for (const auto& r : s.rows) {
      ordered_json jr;
      jr["band"] = r.band;
      jr["norm_estimate"] = r.norm_estimate;
      jr["ratio"] = r.ratio;
      jr["slope_partial"] = r.slope_partial;
      js["rows"].push_back(jr);
    }
    js["slope"] = s.slope;
    js["slope_ok"] = s.slope_ok;
    j["series"].push_back(js);
  }
  j["pass"] = pass;
  j["verdict"] = verdict;
  return j;
}

std::string NormReport::to_csv() const {
  std::ostringstream out;
  out.precision(17);
  out << "series,band,norm_estimate,ratio,slope_partial\n";
  for (const auto& s : series)
    for (const auto& r : s.rows)
      out << s.name << "," << r.band << "," << r.norm_estimate << "," << r.ratio << ","
          << r.slope_partial << "\n";
  return out.str();
}

void write_report(const NormReport& report, const std::string& path,
                  const std::string& format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + path);
  if (format == "csv")
    out << report.to_csv();
  else if (format == "json")
    out << report.to_json().dump(2) << "\n";
  else
    throw ConfigError("unknown report format: " + format);
}

}  // namespace liepdo
