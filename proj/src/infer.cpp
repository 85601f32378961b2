#include "uregress/infer.hpp"

#include "uregress/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace uregress {

ErrorMoments error_moments(const Dataset& data, const ModelSpec& model,
                           std::span<const double> beta, const QuadratureRule& q,
                           GompertzFlip flip) {
    if (model.predictor_count() != data.predictor_count())
        throw ContractError("error_moments: model/dataset predictor mismatch");
    if (!model.feasible(beta))
        throw ConstraintError("error_moments: beta violates the model constraints");

    const std::vector<double> b(beta.begin(), beta.end());
    const int n = data.size();
    std::vector<CompositeInverse> res;
    res.reserve(n);
    for (int i = 0; i < n; ++i)
        res.push_back(residual_inverse(data[i].y, data[i].x, model, b, flip));

    double mean = 0.0;
    for (int i = 0; i < n; ++i)
        mean += integrate([&](double a) { return res[i](a); }, q);
    mean /= n;

    double var = 0.0;
    for (int i = 0; i < n; ++i)
        var += integrate(
            [&](double a) {
                const double r = res[i](a) - mean;
                return r * r;
            },
            q);
    var /= n;
    if (var < 0.0) {
        if (var < -1e-12)
            throw NumericError("error_moments: variance integral came out negative");
        var = 0.0;
    }
    return {mean, var};
}

namespace {

CompositeInverse model_inverse(const ModelSpec& model, std::span<const double> beta,
                               const std::vector<RegularDistribution>& x_new) {
    if (static_cast<int>(x_new.size()) != model.predictor_count())
        throw ContractError("forecast: predictor count mismatch");
    if (!model.feasible(beta))
        throw ConstraintError("forecast: beta violates the model constraints");
    const std::vector<double> b(beta.begin(), beta.end());
    MonotoneSignature sig{model.directions(b)};
    return compose_inverse(
        [model, b](std::span<const double> x) { return model.eval(x, b); }, x_new,
        std::move(sig));
}

} // namespace

double forecast_value(const ModelSpec& model, std::span<const double> beta,
                      const std::vector<RegularDistribution>& x_new, double e_hat,
                      const QuadratureRule& q) {
    const CompositeInverse g_inv = model_inverse(model, beta, x_new);
    return integrate([&](double a) { return g_inv(a); }, q) + e_hat;
}

CompositeInverse forecast_inverse(const ModelSpec& model,
                                  std::span<const double> beta,
                                  const std::vector<RegularDistribution>& x_new,
                                  const RegularDistribution& err_dist) {
    CompositeInverse g_inv = model_inverse(model, beta, x_new);
    return CompositeInverse([g_inv = std::move(g_inv), err_dist](double alpha) {
        return g_inv(alpha) + err_dist.inverse(alpha);
    });
}

ForecastResult prediction_interval(const CompositeInverse& psi_inv, double mu,
                                   double level) {
    if (!(level > 0.0 && level < 1.0))
        throw DomainError("prediction interval level must lie in (0,1), got " +
                          std::to_string(level));
    if (!std::isfinite(mu))
        throw DomainError("prediction interval requires a finite forecast value");

    // Grid check: the supplied inverse may not decrease.
    double prev = psi_inv(0.01);
    for (int k = 2; k <= 99; ++k) {
        const double cur = psi_inv(k / 100.0);
        if (cur < prev - 1e-9)
            throw ContractError("prediction_interval: psi_inv is not nondecreasing");
        prev = cur;
    }

    const auto coverage = [&](double b) {
        return composite_cdf(psi_inv, mu + b) - composite_cdf(psi_inv, mu - b);
    };

    constexpr double kMaxHalfWidth = 1e9;
    double hi = 1.0;
    while (coverage(hi) < level) {
        hi *= 2.0;
        if (hi > kMaxHalfWidth)
            throw InfeasibleError("prediction_interval: level " + std::to_string(level) +
                                  " is not attainable within half-width 1e9");
    }
    double lo = 0.0;
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        if (coverage(mid) >= level)
            hi = mid;
        else
            lo = mid;
    }
    return {mu, mu - hi, mu + hi, level, hi};
}

} // namespace uregress
