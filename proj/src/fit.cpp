#include "uregress/fit.hpp"

namespace uregress {

FitOutcome fit_dataset(const Dataset& data, const ModelSpec& model,
                       const Loss& loss, const QuadratureRule& rule,
                       const OptimOptions& opts, GompertzFlip flip) {
    const ObjectiveFunction obj = objective(data, model, loss, rule, flip);
    const ObjectiveFn fn = [&obj](std::span<const double> b) { return obj(b); };

    ParamEstimate est = minimize(fn, model.parameter_count(), model.lower_bounds(), opts);
    const ParamEstimate refined = polish(fn, est.beta, model.lower_bounds(), opts);
    if (refined.objective_value < est.objective_value) {
        est.beta = refined.beta;
        est.objective_value = refined.objective_value;
    }

    FitOutcome out;
    out.moments = error_moments(data, model, est.beta, rule, flip);
    out.estimate = std::move(est);
    return out;
}

} // namespace uregress
