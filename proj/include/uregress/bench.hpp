#pragma once

#include "uregress/fit.hpp"
#include "uregress/quad.hpp"

#include <nlohmann/json_fwd.hpp>
#include <iosfwd>
#include <string>
#include <vector>

namespace uregress {

/// One benchmark comparison: a measured quantity vs the published value at
/// a tolerance. Rows with scored=false are informational (no published
/// counterpart or a flagged ambiguity).
struct BenchRow {
    std::string name;
    std::vector<double> measured;
    std::vector<double> expected; // empty when unscored
    double tol = 0.0;
    bool scored = true;
    bool pass = false;
    std::string note;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    bool fit_error = false;     // a sub-fit raised / failed to converge
    double seconds_table3 = 0.0;
    double seconds_total = 0.0;

    bool all_scored_pass() const;
};

/// Reproduces the published simulation study from embedded fixtures:
/// LAD/LS fits of the three simulated models, the outlier-deletion rerun
/// (including both readings of the ambiguous model-3 deletion), and the
/// full worked-example pipeline (fit, error moments, forecast, 90%
/// prediction interval).
BenchReport run_paper_benchmark(const QuadratureRule& rule,
                                const OptimOptions& opts = {});

nlohmann::json bench_to_json(const BenchReport& report);
void print_bench_table(const BenchReport& report, std::ostream& os);

} // namespace uregress
