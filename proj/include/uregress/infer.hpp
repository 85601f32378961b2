#pragma once

#include "uregress/regress.hpp"

namespace uregress {

/// Estimated moments of the uncertain error term.
struct ErrorMoments {
    double e_hat = 0.0;
    double sigma2_hat = 0.0; // clamped at 0 from below (1e-12 numeric slack)
};

struct ForecastResult {
    double mu = 0.0;
    double lo = 0.0; // mu - b
    double hi = 0.0; // mu + b
    double level = 0.0;
    double b = 0.0;
};

/// e_hat = (1/n) sum_i integral F_i^-1(alpha) d(alpha);
/// sigma2_hat = (1/n) sum_i integral (F_i^-1(alpha) - e_hat)^2 d(alpha),
/// with F_i^-1 the residual inverse at beta.
ErrorMoments error_moments(const Dataset& data, const ModelSpec& model,
                           std::span<const double> beta,
                           const QuadratureRule& q,
                           GompertzFlip flip = GompertzFlip::GeneralRule);

/// Forecast value mu = E[g(x_1,...,x_p | beta)] + e_hat for new predictor
/// distributions independent of the error term.
double forecast_value(const ModelSpec& model, std::span<const double> beta,
                      const std::vector<RegularDistribution>& x_new,
                      double e_hat, const QuadratureRule& q);

/// Inverse distribution of the forecast variable g(x|beta) + err:
/// alpha -> g(Phi_1^-1*(alpha), ...) + Upsilon^-1(alpha), with increasing
/// arguments of g entering at alpha (no flip) per the composition rule.
CompositeInverse forecast_inverse(const ModelSpec& model,
                                  std::span<const double> beta,
                                  const std::vector<RegularDistribution>& x_new,
                                  const RegularDistribution& err_dist);

/// Minimal b >= 0 with Psi(mu+b) - Psi(mu-b) >= level, where Psi is
/// evaluated from psi_inv by bisection (1e-12 on alpha). The search grows
/// an upper bracket geometrically, then bisects b to 1e-6; InfeasibleError
/// if no bracket below 1e9 covers the level. psi_inv must be nondecreasing
/// (grid-checked).
ForecastResult prediction_interval(const CompositeInverse& psi_inv, double mu,
                                   double level);

} // namespace uregress
