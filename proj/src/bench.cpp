#include "uregress/bench.hpp"

#include "uregress/errors.hpp"
#include "uregress/fixtures.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>

namespace uregress {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

BenchRow compare(std::string name, std::vector<double> measured,
                 std::vector<double> expected, double tol, std::string note = "") {
    BenchRow row;
    row.name = std::move(name);
    row.measured = std::move(measured);
    row.expected = std::move(expected);
    row.tol = tol;
    row.note = std::move(note);
    row.pass = true;
    for (std::size_t i = 0; i < row.expected.size(); ++i)
        row.pass = row.pass && std::abs(row.measured[i] - row.expected[i]) <= tol;
    return row;
}

BenchRow info(std::string name, std::vector<double> measured, std::string note) {
    BenchRow row;
    row.name = std::move(name);
    row.measured = std::move(measured);
    row.scored = false;
    row.note = std::move(note);
    return row;
}

} // namespace

bool BenchReport::all_scored_pass() const {
    for (const auto& r : rows)
        if (r.scored && !r.pass) return false;
    return true;
}

BenchReport run_paper_benchmark(const QuadratureRule& rule, const OptimOptions& opts) {
    BenchReport rep;
    const ModelSpec model = ModelSpec::linear(1);

    auto fit = [&](const Dataset& data, const Loss& loss) -> FitOutcome {
        return fit_dataset(data, model, loss, rule, opts);
    };

    const auto t0 = Clock::now();

    // Published estimates on the full simulated datasets.
    const std::vector<double> ls_expected[3] = {
        {10.0479, 1.995}, {12.3695, 1.8898}, {19.5837, 0.9323}};
    try {
        for (int j = 1; j <= 3; ++j) {
            const Dataset data = fixtures::table2_model(j);
            const auto lad = fit(data, Loss::lad());
            const auto ls = fit(data, Loss::ls());
            const std::string base = "table3.model" + std::to_string(j);
            rep.rows.push_back(compare(base + ".lad.beta", lad.estimate.beta, {10.0, 2.0}, 0.02));
            rep.rows.push_back(compare(base + ".ls.beta", ls.estimate.beta, ls_expected[j - 1], 0.01));
            rep.fit_error = rep.fit_error || !lad.estimate.converged || !ls.estimate.converged;
        }
    } catch (const Error& e) {
        rep.fit_error = true;
        rep.rows.push_back(info("table3.error", {}, e.what()));
    }
    rep.seconds_table3 = seconds_since(t0);

    // Outlier-deletion rerun. The published text deletes observations 2 and 9
    // from model 2; for model 3 the narrative identifies observations 3 and
    // 10 as the outliers while the deletion sentence says 3 and 9 — both
    // variants are computed, with the outlier reading scored.
    try {
        const Dataset m2 = fixtures::table2_model_without(2, {2, 9});
        const auto lad2 = fit(m2, Loss::lad());
        const auto ls2 = fit(m2, Loss::ls());
        rep.rows.push_back(compare("table4.model2.lad.beta", lad2.estimate.beta, {10.0, 2.0}, 0.02));
        rep.rows.push_back(compare("table4.model2.ls.beta", ls2.estimate.beta, {10.1089, 1.9885}, 0.01));

        const Dataset m3 = fixtures::table2_model_without(3, {3, 10});
        const auto lad3 = fit(m3, Loss::lad());
        const auto ls3 = fit(m3, Loss::ls());
        rep.rows.push_back(compare("table4.model3.lad.beta", lad3.estimate.beta, {10.16, 1.9821}, 0.02,
                                   "deletes observations 3 and 10 (the identified outliers)"));
        rep.rows.push_back(compare("table4.model3.ls.beta", ls3.estimate.beta, {10.1078, 1.9880}, 0.01,
                                   "deletes observations 3 and 10 (the identified outliers)"));

        const Dataset m3b = fixtures::table2_model_without(3, {3, 9});
        const auto lad3b = fit(m3b, Loss::lad());
        const auto ls3b = fit(m3b, Loss::ls());
        rep.rows.push_back(info("table4.model3-alt.lad.beta", lad3b.estimate.beta,
                                "alternate reading: deletes observations 3 and 9 as printed; "
                                "no published value"));
        rep.rows.push_back(info("table4.model3-alt.ls.beta", ls3b.estimate.beta,
                                "alternate reading: deletes observations 3 and 9 as printed; "
                                "no published value"));
    } catch (const Error& e) {
        rep.fit_error = true;
        rep.rows.push_back(info("table4.error", {}, e.what()));
    }

    // Worked example: fit, error moments, forecast, 90% interval.
    try {
        const Dataset t1 = fixtures::table1();
        const auto lad = fit(t1, Loss::lad());
        rep.rows.push_back(compare("example.lad.beta", lad.estimate.beta, {2.4016, 2.9344}, 0.01));
        rep.rows.push_back(compare("example.e_hat", {lad.moments.e_hat}, {-0.0548}, 0.005));
        rep.rows.push_back(compare("example.sigma2_hat", {lad.moments.sigma2_hat}, {1.3689}, 0.01));

        const std::vector<RegularDistribution> x_new{RegularDistribution::linear(5, 6)};
        const double mu = forecast_value(model, lad.estimate.beta, x_new, lad.moments.e_hat, rule);
        rep.rows.push_back(compare("example.mu", {mu}, {18.485}, 0.01));

        const auto err = RegularDistribution::normal(
            lad.moments.e_hat, std::sqrt(std::max(lad.moments.sigma2_hat, 1e-300)));
        const auto psi = forecast_inverse(model, lad.estimate.beta, x_new, err);
        const auto interval = prediction_interval(psi, mu, 0.90);
        rep.rows.push_back(compare("example.b", {interval.b}, {3.2198}, 0.01));
        rep.rows.push_back(compare("example.interval", {interval.lo, interval.hi},
                                   {15.2652, 21.7948}, 0.01,
                                   "published endpoints are inconsistent with the published "
                                   "mu and b (18.485 + 3.2198 = 21.7048)"));
        rep.fit_error = rep.fit_error || !lad.estimate.converged;
    } catch (const Error& e) {
        rep.fit_error = true;
        rep.rows.push_back(info("example.error", {}, e.what()));
    }

    rep.seconds_total = seconds_since(t0);
    return rep;
}

nlohmann::json bench_to_json(const BenchReport& rep) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : rep.rows) {
        nlohmann::json row{{"name", r.name}, {"measured", r.measured}};
        if (r.scored) {
            row["expected"] = r.expected;
            row["tol"] = r.tol;
            row["pass"] = r.pass;
        }
        if (!r.note.empty()) row["note"] = r.note;
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"rows", rows},
                          {"fit_error", rep.fit_error},
                          {"seconds_table3", rep.seconds_table3},
                          {"seconds_total", rep.seconds_total},
                          {"all_scored_pass", rep.all_scored_pass()}};
}

void print_bench_table(const BenchReport& rep, std::ostream& os) {
    os << std::fixed << std::setprecision(4);
    for (const auto& r : rep.rows) {
        os << (r.scored ? (r.pass ? "[pass] " : "[FAIL] ") : "[info] ")
           << std::left << std::setw(28) << r.name << std::right << " measured (";
        for (std::size_t i = 0; i < r.measured.size(); ++i)
            os << (i ? ", " : "") << r.measured[i];
        os << ")";
        if (r.scored) {
            os << " expected (";
            for (std::size_t i = 0; i < r.expected.size(); ++i)
                os << (i ? ", " : "") << r.expected[i];
            os << ") tol " << r.tol;
        }
        if (!r.note.empty()) os << "  -- " << r.note;
        os << "\n";
    }
    os << (rep.all_scored_pass() ? "all scored rows pass" : "some scored rows FAIL")
       << "; table3 wall time " << rep.seconds_table3 << " s, total "
       << rep.seconds_total << " s\n";
}

} // namespace uregress
