#include "uregress/bench.hpp"
#include "uregress/dataset_io.hpp"
#include "uregress/fit.hpp"
#include "uregress/fixtures.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace uregress;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitNoConvergence = 3;

struct CommonOpts {
    int quad_nodes = QuadratureRule::kDefaultNodes;
    std::string quad_scheme = "midpoint";
    int quad_panels = 32;
    int starts = 16;
    std::uint64_t seed = 42;
    int max_iters = 2000;
    double xtol = 1e-8;
    double ftol = 1e-10;
    std::string init_box;
    bool strict_theorem_flip = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--quad-nodes", o.quad_nodes, "Quadrature nodes (midpoint) or points per panel (gauss)")
        ->capture_default_str();
    cmd->add_option("--quad-scheme", o.quad_scheme, "Quadrature scheme: midpoint|gauss")
        ->check(CLI::IsMember({"midpoint", "gauss"}))
        ->capture_default_str();
    cmd->add_option("--quad-panels", o.quad_panels, "Panels for the gauss scheme")
        ->capture_default_str();
    cmd->add_option("--starts", o.starts, "Multi-start count")->capture_default_str();
    cmd->add_option("--seed", o.seed, "Start-sampling seed")->capture_default_str();
    cmd->add_option("--max-iters", o.max_iters, "Nelder-Mead iteration cap per start")
        ->capture_default_str();
    cmd->add_option("--xtol", o.xtol, "Simplex diameter tolerance")->capture_default_str();
    cmd->add_option("--ftol", o.ftol, "Objective spread tolerance")->capture_default_str();
    cmd->add_option("--init-box", o.init_box,
                    "Start sampling box, lo:hi[,lo:hi,...] (one interval per parameter, "
                    "or a single interval for all)");
    cmd->add_flag("--strict-theorem-flip", o.strict_theorem_flip,
                  "Use the printed Gompertz residual integrand (x inverse at alpha)");
}

QuadratureRule make_rule(const CommonOpts& o) {
    if (o.quad_scheme == "gauss")
        return QuadratureRule::gauss_legendre(o.quad_nodes, o.quad_panels);
    return QuadratureRule::midpoint(o.quad_nodes);
}

OptimOptions make_optim(const CommonOpts& o, int dim) {
    OptimOptions opts;
    opts.starts = o.starts;
    opts.seed = o.seed;
    opts.max_iters = o.max_iters;
    opts.xtol = o.xtol;
    opts.ftol = o.ftol;
    if (!o.init_box.empty()) {
        std::stringstream ss(o.init_box);
        std::string item;
        std::vector<std::pair<double, double>> box;
        while (std::getline(ss, item, ',')) {
            const auto colon = item.find(':');
            if (colon == std::string::npos)
                throw ValidationError("--init-box entries must look like lo:hi");
            box.emplace_back(std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1)));
        }
        if (box.size() == 1) box.assign(dim, box[0]);
        if (static_cast<int>(box.size()) != dim)
            throw ValidationError("--init-box needs one interval per parameter");
        opts.init_box = std::move(box);
    }
    return opts;
}

ModelSpec make_model(const std::string& name, int predictors) {
    if (name == "linear") return ModelSpec::linear(predictors);
    if (name == "mm") return ModelSpec::michaelis_menten();
    if (name == "gompertz") return ModelSpec::gompertz();
    throw ValidationError("unknown model \"" + name + "\" (expected linear|mm|gompertz)");
}

Dataset load_data(const std::string& path) {
    if (path.size() > 4 && path.substr(path.size() - 4) == ".csv")
        return parse_csv_dataset(path);
    return parse_dataset(path);
}

void write_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << j.dump(2) << "\n";
}

int run_fit(const std::string& data_path, const std::string& model_name,
            const std::string& loss_name, const CommonOpts& common,
            const std::string& out_path) {
    const Dataset data = load_data(data_path);
    const ModelSpec model = make_model(model_name, data.predictor_count());
    const Loss loss = loss_name == "ls" ? Loss::ls() : Loss::lad();
    const QuadratureRule rule = make_rule(common);
    const OptimOptions opts = make_optim(common, model.parameter_count());
    const GompertzFlip flip = common.strict_theorem_flip ? GompertzFlip::PrintedTheorem
                                                         : GompertzFlip::GeneralRule;

    const FitOutcome fit = fit_dataset(data, model, loss, rule, opts, flip);

    FitFile f;
    f.model = model.name();
    f.loss = loss.name();
    f.beta = fit.estimate.beta;
    f.objective_value = fit.estimate.objective_value;
    f.e_hat = fit.moments.e_hat;
    f.sigma2_hat = fit.moments.sigma2_hat;
    f.converged = fit.estimate.converged;
    f.quad_scheme = common.quad_scheme;
    f.quad_nodes = common.quad_nodes;
    f.quad_panels = rule.panels();
    f.optimizer = opts;
    f.seed = opts.seed;
    write_json(fit_to_json(f), out_path);

    std::cout << std::fixed << std::setprecision(4);
    std::cout << "model " << f.model << ", loss " << f.loss << ", n = " << data.size()
              << ", p = " << data.predictor_count() << "\n";
    std::cout << "beta = (";
    for (std::size_t j = 0; j < f.beta.size(); ++j)
        std::cout << (j ? ", " : "") << f.beta[j];
    std::cout << ")\nobjective = " << f.objective_value << "\ne_hat = " << f.e_hat
              << "\nsigma2_hat = " << f.sigma2_hat << "\nconverged = "
              << (f.converged ? "yes" : "no") << "\nwritten " << out_path << "\n";

    return f.converged ? kExitOk : kExitNoConvergence;
}

int run_predict(const std::string& fit_path, const std::vector<std::string>& x_literals,
                double level, const std::string& err_dist_json, const CommonOpts& common,
                const std::string& out_path) {
    if (!(level > 0.0 && level < 1.0))
        throw ValidationError("--level must lie in (0,1)");

    const FitFile f = parse_fit(fit_path);
    const int p = f.model == "linear" ? static_cast<int>(f.beta.size()) - 1 : 1;
    const ModelSpec model = make_model(f.model, p);

    if (static_cast<int>(x_literals.size()) != model.predictor_count())
        throw ValidationError("expected " + std::to_string(model.predictor_count()) +
                              " predictor literal(s), got " + std::to_string(x_literals.size()));
    std::vector<RegularDistribution> x_new;
    for (const auto& lit : x_literals) {
        json j;
        try {
            j = json::parse(lit);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("bad predictor literal: ") + e.what());
        }
        x_new.push_back(dist_from_json(j));
    }

    RegularDistribution err = err_dist_json.empty()
                                  ? RegularDistribution::normal(
                                        f.e_hat, std::sqrt(std::max(f.sigma2_hat, 1e-300)))
                                  : dist_from_json(json::parse(err_dist_json));

    const QuadratureRule rule = make_rule(common);
    const double mu = forecast_value(model, f.beta, x_new, f.e_hat, rule);
    const auto psi = forecast_inverse(model, f.beta, x_new, err);
    const ForecastResult r = prediction_interval(psi, mu, level);

    const json out{{"mu", r.mu},       {"level", r.level}, {"b", r.b},
                   {"lo", r.lo},       {"hi", r.hi},       {"model", f.model},
                   {"beta", f.beta},   {"e_hat", f.e_hat}, {"sigma2_hat", f.sigma2_hat}};
    if (!out_path.empty()) write_json(out, out_path);

    std::cout << std::fixed << std::setprecision(4);
    std::cout << "mu = " << r.mu << "\nlevel = " << r.level << "\nb = " << r.b
              << "\ninterval = [" << r.lo << ", " << r.hi << "]\n";
    return kExitOk;
}

int run_bench(const CommonOpts& common, const std::string& out_path) {
    const QuadratureRule rule = make_rule(common);
    OptimOptions opts;
    opts.starts = common.starts;
    opts.seed = common.seed;
    opts.max_iters = common.max_iters;
    opts.xtol = common.xtol;
    opts.ftol = common.ftol;

    const BenchReport rep = run_paper_benchmark(rule, opts);
    if (!out_path.empty()) write_json(bench_to_json(rep), out_path);
    print_bench_table(rep, std::cout);
    return rep.fit_error ? kExitNoConvergence : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Robust regression for imprecisely observed (uncertain) data"};
    app.require_subcommand(1);

    CommonOpts fit_common, pred_common, bench_common;

    auto* fit = app.add_subcommand("fit", "Estimate model parameters from a dataset");
    std::string data_path, fit_model = "linear", fit_loss = "lad", fit_out = "fit.json";
    fit->add_option("--data", data_path, "Dataset path (.json, or .csv for all-linear data)")
        ->required();
    fit->add_option("--model", fit_model, "Regression model: linear|mm|gompertz")
        ->check(CLI::IsMember({"linear", "mm", "gompertz"}))
        ->capture_default_str();
    fit->add_option("--loss", fit_loss, "Loss: lad|ls")
        ->check(CLI::IsMember({"lad", "ls"}))
        ->capture_default_str();
    fit->add_option("--out", fit_out, "Fit file path")->capture_default_str();
    add_common(fit, fit_common);

    auto* pred = app.add_subcommand("predict", "Forecast the response for new predictors");
    std::string fit_path, pred_out, err_dist;
    std::vector<std::string> x_literals;
    double level = 0.95;
    pred->add_option("--fit", fit_path, "Fit file from the fit command")->required();
    pred->add_option("--x", x_literals, "Predictor distribution literal (JSON), repeatable")
        ->required();
    pred->add_option("--level", level, "Prediction interval level in (0,1)")
        ->capture_default_str();
    pred->add_option("--err-dist", err_dist,
                     "Error distribution literal (default: normal(e_hat, sqrt(sigma2_hat)))");
    pred->add_option("--out", pred_out, "Write the forecast as JSON");
    add_common(pred, pred_common);

    auto* bench = app.add_subcommand("bench-paper",
                                     "Reproduce the published tables from embedded fixtures");
    std::string bench_out;
    bench->add_option("--out", bench_out, "Write the report as JSON");
    add_common(bench, bench_common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (fit->parsed()) return run_fit(data_path, fit_model, fit_loss, fit_common, fit_out);
        if (pred->parsed())
            return run_predict(fit_path, x_literals, level, err_dist, pred_common, pred_out);
        return run_bench(bench_common, bench_out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
