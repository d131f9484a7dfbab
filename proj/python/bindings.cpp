#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>

#include "liepdo/besov.hpp"
#include "liepdo/harness.hpp"
#include "liepdo/parallel.hpp"
#include "liepdo/symbol.hpp"

namespace py = pybind11;
using namespace liepdo;

namespace {

DualIndex make_index(const Group& g, const std::vector<int>& label) {
  return DualIndex{g.backend, label};
}

// pybind11 cannot hold shared_ptr-to-const directly; hand out a thin handle
struct Grid {
  GridPtr p;
};

Eigen::MatrixXd grid_nodes(const QuadratureGrid& g) {
  const int d = g.group.backend == Backend::SO3 ? 3 : g.group.torus_dim;
  Eigen::MatrixXd out(g.size(), d);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (int j = 0; j < d; ++j) out(i, j) = g.node(i)[j];
  return out;
}

}  // namespace

PYBIND11_MODULE(_liepdo, m) {
  m.doc() = "global pseudo-differential calculus on T^n and SO(3)";

  py::register_exception<ConfigError>(m, "ConfigError");
  py::register_exception<BandLimitError>(m, "BandLimitError");

  py::class_<Group>(m, "Group")
      .def("dim", &Group::dim)
      .def("tag", &Group::tag)
      .def("enumerate_dual", &Group::enumerate_dual, py::arg("band"))
      .def("__repr__", [](const Group& g) { return "<Group " + g.tag() + ">"; });
  m.def("torus", &Group::torus, py::arg("n"));
  m.def("so3", &Group::so3);

  py::class_<DualIndex>(m, "DualIndex")
      .def_readonly("label", &DualIndex::label)
      .def("__repr__",
           [](const DualIndex& xi) { return "<DualIndex " + label_string(xi) + ">"; });
  m.def("index", &make_index, py::arg("group"), py::arg("label"));
  m.def("dimension", &dimension, py::arg("xi"));
  m.def("weight", &weight, py::arg("xi"));
  m.def("casimir_eigenvalue", &casimir_eigenvalue, py::arg("xi"));
  m.def("dyadic_band", &dyadic_band, py::arg("xi"));

  py::class_<Grid>(m, "QuadratureGrid")
      .def_property_readonly("size", [](const Grid& g) { return g.p->size(); })
      .def_property_readonly("exactness_band",
                             [](const Grid& g) { return g.p->exactness_band; })
      .def_property_readonly("weights", [](const Grid& g) { return g.p->weights; })
      .def("nodes", [](const Grid& g) { return grid_nodes(*g.p); });
  m.def("make_grid",
        [](const Group& g, double band, double oversample) {
          return Grid{make_grid(g, band, oversample)};
        },
        py::arg("group"), py::arg("band"), py::arg("oversample") = 2.0);

  py::class_<GroupFunction>(m, "GroupFunction")
      .def(py::init([](const Grid& grid, const Eigen::VectorXcd& values) {
             if (std::size_t(values.size()) != grid.p->size())
               throw ConfigError("values length must equal grid size");
             GroupFunction f;
             f.grid = grid.p;
             f.values = values;
             return f;
           }),
           py::arg("grid"), py::arg("values"))
      .def_property_readonly("grid", [](const GroupFunction& f) { return Grid{f.grid}; })
      .def_readwrite("values", &GroupFunction::values);

  py::class_<FourierCoefficients>(m, "FourierCoefficients")
      .def_readonly("indices", &FourierCoefficients::indices)
      .def("block",
           [](const FourierCoefficients& c, const std::vector<int>& label) {
             const auto* b = c.find(DualIndex{c.group.backend, label});
             if (!b) throw BandLimitError("label outside the stored band");
             return *b;
           })
      .def("set_block", [](FourierCoefficients& c, const std::vector<int>& label,
                           const Eigen::MatrixXcd& block) {
        auto* b = c.find(DualIndex{c.group.backend, label});
        if (!b) throw BandLimitError("label outside the stored band");
        if (b->rows() != block.rows() || b->cols() != block.cols())
          throw ConfigError("block shape mismatch");
        *b = block;
      });
  m.def("zero_coefficients", &zero_coefficients, py::arg("group"), py::arg("band"));

  m.def("forward_transform", &forward_transform, py::arg("f"), py::arg("band"));
  m.def("inverse_transform",
        [](const FourierCoefficients& c, const Grid& grid) {
          return inverse_transform(c, grid.p);
        },
        py::arg("coefficients"), py::arg("grid"));
  m.def("plancherel_norm", &plancherel_norm);
  m.def("truncate",
        [](FourierCoefficients& c, double threshold) { truncate(c, threshold); },
        py::arg("coefficients"), py::arg("threshold"));

  const double inf = std::numeric_limits<double>::infinity();
  m.def("lp_norm", &lp_norm, py::arg("f"), py::arg("p") = inf);
  m.def("besov_norm", &besov_norm, py::arg("f"), py::arg("s"), py::arg("p"), py::arg("q"),
        py::arg("band"));
  m.def("sobolev_norm", &sobolev_norm, py::arg("f"), py::arg("s"), py::arg("band"));
  m.def("dyadic_project", &dyadic_project, py::arg("f"), py::arg("m"), py::arg("band"));

  py::class_<Symbol>(m, "Symbol")
      .def_readonly("rho", &Symbol::rho)
      .def_readonly("order", &Symbol::order);
  m.def("identity_symbol", &identity_symbol);
  m.def("scalar_multiplier", &scalar_multiplier, py::arg("c"));
  m.def("weight_power_symbol", &weight_power_symbol, py::arg("t"));
  m.def("band_window_symbol", &band_window_symbol, py::arg("t"), py::arg("r"));
  m.def("eval_symbol",
        [](const Symbol& s, const DualIndex& xi) { return eval_symbol(s, nullptr, xi); },
        py::arg("symbol"), py::arg("xi"));
  m.def("difference_apply", &difference_apply, py::arg("group"), py::arg("symbol"),
        py::arg("word"), py::arg("band"), py::arg("oversample") = 2.0);
  m.def("canonical_generators", &canonical_generators, py::arg("group"));
  m.def("quantize_apply", &quantize_apply, py::arg("symbol"), py::arg("f"), py::arg("band"));
  m.def("apply_multiplier", &apply_multiplier, py::arg("symbol"), py::arg("coefficients"));

  py::class_<ClassConstants>(m, "ClassConstants")
      .def_readonly("rho", &ClassConstants::rho)
      .def_readonly("k", &ClassConstants::k)
      .def_readonly("band", &ClassConstants::lam)
      .def("sup", &ClassConstants::sup)
      .def("items", [](const ClassConstants& cc) {
        std::vector<std::pair<std::string, double>> out;
        for (const auto& [w, c] : cc.constants) out.emplace_back(word_string(w), c);
        return out;
      });
  m.def("class_constants", &class_constants, py::arg("group"), py::arg("symbol"),
        py::arg("rho"), py::arg("k"), py::arg("band"), py::arg("oversample") = 2.0);

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("backend", &ExperimentConfig::backend)
      .def_readwrite("s_list", &ExperimentConfig::s_list)
      .def_readwrite("rho", &ExperimentConfig::rho)
      .def_readwrite("bands", &ExperimentConfig::bands)
      .def_readwrite("probe_count", &ExperimentConfig::probe_count)
      .def_readwrite("seed", &ExperimentConfig::seed)
      .def_readwrite("oversample", &ExperimentConfig::oversample)
      .def_readwrite("constants_lambda", &ExperimentConfig::constants_lambda);

  py::class_<NormReport>(m, "NormReport")
      .def_readonly("pass_", &NormReport::pass)
      .def_readonly("verdict", &NormReport::verdict)
      .def_readonly("sup_constant", &NormReport::sup_constant)
      .def("to_json", [](const NormReport& r) { return r.to_json().dump(2); })
      .def("to_csv", &NormReport::to_csv);

  m.def("random_coefficients", &random_coefficients, py::arg("group"), py::arg("seed"),
        py::arg("band"), py::arg("profile") = std::function<double(double)>());
  m.def("random_bandlimited",
        [](const Group& g, const Grid& grid, std::uint64_t seed, double band,
           const std::function<double(double)>& profile) {
          return random_bandlimited(g, grid.p, seed, band, profile);
        },
        py::arg("group"), py::arg("grid"), py::arg("seed"), py::arg("band"),
        py::arg("profile") = std::function<double(double)>());
  m.def("estimate_operator_norm",
        [](const Group& g, const Symbol& sigma, double s, double lam,
           const ExperimentConfig& cfg, bool use_linf) {
          return estimate_operator_norm(g, sigma, s, lam, cfg,
                                        use_linf ? ProbeNorm::LInf : ProbeNorm::BesovInfInf);
        },
        py::arg("group"), py::arg("symbol"), py::arg("s"), py::arg("band"), py::arg("config"),
        py::arg("use_linf") = false);
  m.def("fit_log_slope", &fit_log_slope, py::arg("bands"), py::arg("norms"));
  m.def("lemma_uniformity_experiment", &lemma_uniformity_experiment, py::arg("config"));
  m.def("theorem_experiment", &theorem_experiment, py::arg("config"));
  m.def("negative_control_experiment", &negative_control_experiment, py::arg("config"));
  m.def("corollary_reduction_check", &corollary_reduction_check, py::arg("m"), py::arg("rho"),
        py::arg("delta"), py::arg("ell"), py::arg("n"), py::arg("band"));

  m.def("set_thread_count", &set_thread_count, py::arg("n"));
  m.def("thread_count", &thread_count);
}
