#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace uregress {

struct OptimOptions {
    int starts = 16;
    std::uint64_t seed = 42;
    int max_iters = 2000;
    double xtol = 1e-8;
    double ftol = 1e-10;
    /// Per-parameter sampling interval for the multi-start initial points.
    /// Empty selects the defaults: [-50, 50] for unconstrained parameters,
    /// [lb+1e-3, lb+100] sampled log-uniformly for bounded ones.
    std::vector<std::pair<double, double>> init_box;
};

struct ParamEstimate {
    std::vector<double> beta;
    double objective_value = 0.0;
    bool converged = false;
    int starts_used = 0;
};

using ObjectiveFn = std::function<double(std::span<const double>)>;

/// Multi-start Nelder-Mead minimization. Parameters with an exclusive lower
/// bound are searched in log space (beta = lb + exp(t)), so every probe is
/// strictly feasible. Start points are drawn deterministically from the
/// seed; runs execute in start order and ties keep the lowest start index.
/// converged reflects the best start: simplex diameter < xtol and objective
/// spread < ftol at its termination.
///
/// InfeasibleError if every start saw only +infinity; NumericError (with the
/// offending beta) if the objective returns NaN.
ParamEstimate minimize(const ObjectiveFn& obj, int dim,
                       const std::vector<std::optional<double>>& lower_bounds,
                       const OptimOptions& opts = {});

/// Single Nelder-Mead run restarted from beta0 with a shrunk initial
/// simplex (scale 1e-3 * max(1, |beta0_j|)); the result never exceeds
/// obj(beta0) + ftol. InfeasibleError if beta0 itself is infeasible.
ParamEstimate polish(const ObjectiveFn& obj, std::span<const double> beta0,
                     const std::vector<std::optional<double>>& lower_bounds,
                     const OptimOptions& opts = {});

} // namespace uregress
