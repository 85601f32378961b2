#include "uregress/bench.hpp"
#include "uregress/dataset_io.hpp"
#include "uregress/fit.hpp"
#include "uregress/fixtures.hpp"

#include <nlohmann/json.hpp>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <sstream>

namespace py = pybind11;
using namespace uregress;

namespace {

QuadratureRule make_rule(const std::string& scheme, int nodes, int panels) {
    if (scheme == "gauss") return QuadratureRule::gauss_legendre(nodes, panels);
    if (scheme != "midpoint")
        throw ValidationError("scheme must be midpoint or gauss");
    return QuadratureRule::midpoint(nodes);
}

ModelSpec make_model(const std::string& name, int predictors) {
    if (name == "linear") return ModelSpec::linear(predictors);
    if (name == "mm") return ModelSpec::michaelis_menten();
    if (name == "gompertz") return ModelSpec::gompertz();
    throw ValidationError("unknown model \"" + name + "\"");
}

Loss make_loss(const std::string& name) {
    if (name == "lad") return Loss::lad();
    if (name == "ls") return Loss::ls();
    throw ValidationError("unknown loss \"" + name + "\"");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Least-absolute-deviations and least-squares regression for "
              "imprecisely observed data modeled as uncertain variables";

    py::register_exception<Error>(m, "UregressError", PyExc_RuntimeError);

    py::enum_<DistKind>(m, "DistKind")
        .value("linear", DistKind::Linear)
        .value("normal", DistKind::Normal)
        .value("point", DistKind::Point);

    py::class_<RegularDistribution>(m, "RegularDistribution")
        .def_static("linear", &RegularDistribution::linear, py::arg("a"), py::arg("b"))
        .def_static("normal", &RegularDistribution::normal, py::arg("e"), py::arg("sigma"))
        .def_static("point", &RegularDistribution::point, py::arg("c"))
        .def_property_readonly("kind", &RegularDistribution::kind)
        .def("inverse", &RegularDistribution::inverse, py::arg("alpha"))
        .def("cdf", &RegularDistribution::cdf, py::arg("x"))
        .def("__repr__", [](const RegularDistribution& d) {
            return dist_to_json(d).dump();
        });

    py::class_<QuadratureRule>(m, "QuadratureRule")
        .def_static("midpoint", &QuadratureRule::midpoint,
                    py::arg("nodes") = QuadratureRule::kDefaultNodes)
        .def_static("gauss_legendre", &QuadratureRule::gauss_legendre,
                    py::arg("points_per_panel"), py::arg("panels") = 1)
        .def_property_readonly("nodes", &QuadratureRule::nodes)
        .def_property_readonly("panels", &QuadratureRule::panels)
        .def_property_readonly("total_points", &QuadratureRule::total_points);

    m.def("integrate",
          [](const std::function<double(double)>& f, const QuadratureRule& q) {
              return integrate(f, q);
          },
          py::arg("f"), py::arg("rule"));
    m.def("expected_value", &expected_value, py::arg("dist"), py::arg("rule"));
    m.def("expected_abs", &expected_abs, py::arg("dist"), py::arg("rule"));
    m.def("expected_square", &expected_square, py::arg("dist"), py::arg("rule"));

    py::class_<Dataset>(m, "Dataset")
        .def(py::init([](int predictors,
                         const std::vector<std::pair<RegularDistribution,
                                                     std::vector<RegularDistribution>>>& rows) {
                 std::vector<Observation> obs;
                 obs.reserve(rows.size());
                 for (const auto& [y, x] : rows) obs.push_back(Observation{y, x});
                 return Dataset(predictors, std::move(obs));
             }),
             py::arg("predictors"), py::arg("observations"))
        .def_static("from_json",
                    [](const std::string& text) {
                        return dataset_from_json(nlohmann::json::parse(text));
                    },
                    py::arg("text"))
        .def_static("load", &parse_dataset, py::arg("path"))
        .def("to_json", [](const Dataset& d) { return dataset_to_json(d).dump(); })
        .def_property_readonly("predictors", &Dataset::predictor_count)
        .def("__len__", &Dataset::size);

    m.def("table1", &fixtures::table1);
    m.def("table2_model", &fixtures::table2_model, py::arg("j"));

    m.def(
        "objective_value",
        [](const Dataset& data, const std::string& model, const std::string& loss,
           const std::vector<double>& beta, const QuadratureRule& rule,
           bool strict_theorem_flip) {
            const ModelSpec spec = make_model(model, data.predictor_count());
            const auto obj = objective(data, spec, make_loss(loss), rule,
                                       strict_theorem_flip ? GompertzFlip::PrintedTheorem
                                                           : GompertzFlip::GeneralRule);
            return obj(beta);
        },
        py::arg("data"), py::arg("model"), py::arg("loss"), py::arg("beta"),
        py::arg("rule") = QuadratureRule::midpoint(), py::arg("strict_theorem_flip") = false);

    m.def("exact_linear_lad_objective",
          [](const Dataset& data, const std::vector<double>& beta) {
              return exact_linear_lad_objective(data, beta);
          },
          py::arg("data"), py::arg("beta"));

    m.def("predict_crisp",
          [](const std::string& model, const std::vector<double>& beta,
             const std::vector<double>& x) {
              return predict_crisp(make_model(model, static_cast<int>(x.size())), beta, x);
          },
          py::arg("model"), py::arg("beta"), py::arg("x"));

    m.def(
        "fit",
        [](const Dataset& data, const std::string& model, const std::string& loss,
           const QuadratureRule& rule, int starts, std::uint64_t seed, int max_iters,
           double xtol, double ftol, bool strict_theorem_flip) {
            const ModelSpec spec = make_model(model, data.predictor_count());
            OptimOptions opts;
            opts.starts = starts;
            opts.seed = seed;
            opts.max_iters = max_iters;
            opts.xtol = xtol;
            opts.ftol = ftol;
            const auto out = fit_dataset(data, spec, make_loss(loss), rule, opts,
                                         strict_theorem_flip ? GompertzFlip::PrintedTheorem
                                                             : GompertzFlip::GeneralRule);
            py::dict d;
            d["beta"] = out.estimate.beta;
            d["objective_value"] = out.estimate.objective_value;
            d["converged"] = out.estimate.converged;
            d["e_hat"] = out.moments.e_hat;
            d["sigma2_hat"] = out.moments.sigma2_hat;
            return d;
        },
        py::arg("data"), py::arg("model") = "linear", py::arg("loss") = "lad",
        py::arg("rule") = QuadratureRule::midpoint(), py::arg("starts") = 16,
        py::arg("seed") = 42, py::arg("max_iters") = 2000, py::arg("xtol") = 1e-8,
        py::arg("ftol") = 1e-10, py::arg("strict_theorem_flip") = false);

    m.def(
        "predict",
        [](const std::string& model, const std::vector<double>& beta,
           const std::vector<RegularDistribution>& x_new, double e_hat, double sigma2_hat,
           double level, std::optional<RegularDistribution> err_dist,
           const QuadratureRule& rule) {
            const ModelSpec spec = make_model(model, static_cast<int>(x_new.size()));
            const double mu = forecast_value(spec, beta, x_new, e_hat, rule);
            const RegularDistribution err =
                err_dist ? *err_dist
                         : RegularDistribution::normal(
                               e_hat, std::sqrt(std::max(sigma2_hat, 1e-300)));
            const auto psi = forecast_inverse(spec, beta, x_new, err);
            const ForecastResult r = prediction_interval(psi, mu, level);
            py::dict d;
            d["mu"] = r.mu;
            d["lo"] = r.lo;
            d["hi"] = r.hi;
            d["b"] = r.b;
            d["level"] = r.level;
            return d;
        },
        py::arg("model"), py::arg("beta"), py::arg("x_new"), py::arg("e_hat"),
        py::arg("sigma2_hat"), py::arg("level") = 0.95,
        py::arg("err_dist") = std::nullopt,
        py::arg("rule") = QuadratureRule::midpoint());

    m.def("bench_paper",
          [](const QuadratureRule& rule) {
              return bench_to_json(run_paper_benchmark(rule)).dump();
          },
          py::arg("rule") = QuadratureRule::midpoint());
}
