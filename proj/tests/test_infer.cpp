#include "uregress/errors.hpp"
#include "uregress/fit.hpp"
#include "uregress/fixtures.hpp"
#include "uregress/infer.hpp"

#include <doctest.h>

#include <cmath>

using namespace uregress;

namespace {

const std::vector<double> kFitBeta{2.26257218, 2.94023749};   // grid-oracle minimizer
const std::vector<double> kPrintedBeta{2.4016, 2.9344};       // published fit

// Segment-exact moments for the single-predictor linear model on all-linear
// data with v >= 0 (independent of the quadrature path).
ErrorMoments exact_moments(const Dataset& data, double u, double v) {
    const int n = data.size();
    std::vector<double> c(n), d(n);
    for (int i = 0; i < n; ++i) {
        const auto& y = data[i].y;
        const auto& x = data[i].x[0];
        c[i] = y.lower() - u - v * x.upper();
        d[i] = (y.upper() - y.lower()) + v * (x.upper() - x.lower());
    }
    double mean = 0.0;
    for (int i = 0; i < n; ++i) mean += c[i] + 0.5 * d[i];
    mean /= n;
    double var = 0.0;
    for (int i = 0; i < n; ++i) {
        const double cc = c[i] - mean;
        var += cc * cc + cc * d[i] + d[i] * d[i] / 3.0;
    }
    return {mean, var / n};
}

} // namespace

TEST_CASE("error moments on the worked example") {
    const auto data = fixtures::table1();
    const auto model = ModelSpec::linear(1);
    const auto rule = QuadratureRule::midpoint(2001);

    const auto at_fit = error_moments(data, model, kFitBeta, rule);
    const auto oracle_fit = exact_moments(data, kFitBeta[0], kFitBeta[1]);
    CHECK(at_fit.e_hat == doctest::Approx(oracle_fit.e_hat).epsilon(1e-9));
    // Midpoint error on the quadratic integrand is d^2/(12 N^2) per term.
    CHECK(at_fit.sigma2_hat == doctest::Approx(oracle_fit.sigma2_hat).epsilon(1e-6));
    // At an interior-kink LAD optimum the mean residual expectation vanishes.
    CHECK(std::abs(at_fit.e_hat) < 1e-6);
    CHECK(at_fit.sigma2_hat == doctest::Approx(2.01669716).epsilon(1e-6));

    const auto at_printed = error_moments(data, model, kPrintedBeta, rule);
    CHECK(at_printed.e_hat == doctest::Approx(-0.054773).epsilon(1e-4));
    CHECK(at_printed.sigma2_hat == doctest::Approx(2.021028).epsilon(1e-6));
}

TEST_CASE("error moments degenerate cases") {
    const auto rule = QuadratureRule::midpoint(101);
    // Perfect crisp fit: zero moments.
    std::vector<Observation> obs;
    for (int i = 0; i < 4; ++i)
        obs.push_back(Observation{RegularDistribution::point(2.0 + 3.0 * i),
                                  {RegularDistribution::point(static_cast<double>(i))}});
    const Dataset fitdata(1, std::move(obs));
    const auto m0 = error_moments(fitdata, ModelSpec::linear(1),
                                  std::vector<double>{2.0, 3.0}, rule);
    CHECK(m0.e_hat == 0.0);
    CHECK(m0.sigma2_hat == 0.0);

    // Residual identically a crisp constant c: e_hat = c, variance 0.
    const Dataset one(1, {Observation{RegularDistribution::point(5.0),
                                      {RegularDistribution::point(1.0)}}});
    const auto m1 =
        error_moments(one, ModelSpec::linear(1), std::vector<double>{2.0, 2.0}, rule);
    CHECK(m1.e_hat == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m1.sigma2_hat == doctest::Approx(0.0));

    CHECK_THROWS_AS(error_moments(one, ModelSpec::michaelis_menten(),
                                  std::vector<double>{-1.0, 1.0}, rule),
                    ConstraintError);
}

TEST_CASE("variance expansion identity") {
    const auto data = fixtures::table1();
    const auto model = ModelSpec::linear(1);
    const auto rule = QuadratureRule::midpoint(2001);
    const std::vector<double> beta{2.0, 3.1};

    const auto m = error_moments(data, model, beta, rule);
    double mean_sq = 0.0, mean_lin = 0.0;
    for (int i = 0; i < data.size(); ++i) {
        const auto inv = residual_inverse(data[i].y, data[i].x, model, beta);
        mean_sq += integrate([&](double a) { const double r = inv(a); return r * r; }, rule);
        mean_lin += integrate([&](double a) { return inv(a); }, rule);
    }
    mean_sq /= data.size();
    mean_lin /= data.size();
    const double expanded = mean_sq - 2 * m.e_hat * mean_lin + m.e_hat * m.e_hat;
    CHECK(std::abs(m.sigma2_hat - expanded) < 1e-9);
}

TEST_CASE("error moments run identically for the LS fit") {
    const auto data = fixtures::table1();
    const std::vector<double> ls_beta{2.25234924, 2.94094578};
    const auto m = error_moments(data, ModelSpec::linear(1), ls_beta,
                                 QuadratureRule::midpoint(2001));
    const auto oracle = exact_moments(data, ls_beta[0], ls_beta[1]);
    CHECK(m.e_hat == doctest::Approx(oracle.e_hat).epsilon(1e-9));
    CHECK(m.sigma2_hat == doctest::Approx(oracle.sigma2_hat).epsilon(1e-6));
}

TEST_CASE("forecast value") {
    const auto model = ModelSpec::linear(1);
    const auto rule = QuadratureRule::midpoint(2001);
    const std::vector<RegularDistribution> x_new{RegularDistribution::linear(5, 6)};

    // At the published parameters: 2.4016 + 2.9344 * 5.5 - 0.0548.
    CHECK(forecast_value(model, kPrintedBeta, x_new, -0.0548, rule) ==
          doctest::Approx(18.486).epsilon(1e-4));
    // At the oracle fit.
    CHECK(forecast_value(model, kFitBeta, x_new, 0.0, rule) ==
          doctest::Approx(18.43388).epsilon(1e-4));

    CHECK(forecast_value(model, std::vector<double>{0.0, 0.0}, x_new, 0.0, rule) ==
          doctest::Approx(0.0));
    CHECK(forecast_value(model, std::vector<double>{1.0, 2.0},
                         {RegularDistribution::point(3.0)}, 0.25, rule) ==
          doctest::Approx(7.25).epsilon(1e-12));
}

TEST_CASE("forecast inverse composition") {
    const auto model = ModelSpec::linear(1);
    const std::vector<RegularDistribution> x_new{RegularDistribution::linear(5, 6)};
    const auto ups = RegularDistribution::normal(-0.0548, 1.17);

    // Increasing argument enters at alpha in the forecast composition.
    const auto psi = forecast_inverse(model, kPrintedBeta, x_new, ups);
    for (double a : {0.1, 0.5, 0.95}) {
        const double expect =
            2.4016 + 2.9344 * (5 * (1 - a) + 6 * a) + ups.inverse(a);
        CHECK(psi(a) == doctest::Approx(expect).epsilon(1e-12));
    }

    // Point error and point predictor: constant forecast inverse.
    const auto flat = forecast_inverse(model, std::vector<double>{1.0, 2.0},
                                       {RegularDistribution::point(3.0)},
                                       RegularDistribution::point(0.0));
    CHECK(flat(0.2) == doctest::Approx(7.0));
    CHECK(flat(0.9) == doctest::Approx(7.0));

    // Slope zero: the predictor drops out, leaving beta0 + error inverse.
    const auto shifted = forecast_inverse(model, std::vector<double>{1.5, 0.0}, x_new, ups);
    for (double a : {0.2, 0.7})
        CHECK(shifted(a) == doctest::Approx(1.5 + ups.inverse(a)).epsilon(1e-12));
}

TEST_CASE("prediction interval on the worked-example setup") {
    const auto model = ModelSpec::linear(1);
    const std::vector<RegularDistribution> x_new{RegularDistribution::linear(5, 6)};
    const auto rule = QuadratureRule::midpoint(2001);

    // Published setup: printed fit, e=-0.0548, sigma=1.17.
    const auto ups = RegularDistribution::normal(-0.0548, 1.17);
    const auto psi = forecast_inverse(model, kPrintedBeta, x_new, ups);
    const double mu = forecast_value(model, kPrintedBeta, x_new, -0.0548, rule);

    const auto r = prediction_interval(psi, mu, 0.90);
    // Closed form by symmetry: b = 2.9344*0.45 + 1.17*sqrt(3)/pi*ln(19).
    const double b_exact =
        2.9344 * 0.45 + 1.17 * std::sqrt(3.0) / std::acos(-1.0) * std::log(19.0);
    CHECK(r.b == doctest::Approx(b_exact).epsilon(1e-5));
    CHECK(r.b == doctest::Approx(3.2198).epsilon(1e-4));
    CHECK(r.lo == doctest::Approx(mu - r.b));
    CHECK(r.hi == doctest::Approx(mu + r.b));

    // Validity and minimality witness.
    const double cov = composite_cdf(psi, r.hi) - composite_cdf(psi, r.lo);
    CHECK(cov >= 0.90 - 1e-9);
    CHECK(cov <= 0.90 + 2e-6);
    const double shaved =
        composite_cdf(psi, r.hi - 1e-4) - composite_cdf(psi, r.lo + 1e-4);
    CHECK(shaved < 0.90);

    // Symmetric distribution: coverage(b) = 2 Psi(mu+b) - 1 on a b grid.
    for (double b : {0.5, 1.0, 2.0, 3.0}) {
        const double lhs = composite_cdf(psi, mu + b) - composite_cdf(psi, mu - b);
        const double rhs = 2 * composite_cdf(psi, mu + b) - 1;
        CHECK(std::abs(lhs - rhs) < 1e-9);
    }

    // Brute-force grid over b at resolution 1e-4 agrees with the bisection.
    double b_grid = 0.0;
    for (double b = 0.0; b <= 5.0; b += 1e-4) {
        if (composite_cdf(psi, mu + b) - composite_cdf(psi, mu - b) >= 0.90) {
            b_grid = b;
            break;
        }
    }
    CHECK(std::abs(b_grid - r.b) <= 1e-4 + 1e-9);

    // Coverage monotonicity in the level.
    double prev_b = -1.0;
    for (double level : {0.5, 0.8, 0.9, 0.95, 0.99}) {
        const double bl = prediction_interval(psi, mu, level).b;
        CHECK(bl >= prev_b);
        prev_b = bl;
    }
}

TEST_CASE("prediction interval edge cases") {
    // Degenerate point forecast: minimal b collapses to ~0 at any level < 1.
    const CompositeInverse step([](double) { return 4.0; });
    const auto r = prediction_interval(step, 4.0, 0.95);
    CHECK(r.b <= 2e-6);
    CHECK(composite_cdf(step, r.hi) - composite_cdf(step, r.lo) >= 0.95);

    // Tiny level: b shrinks toward zero.
    const auto ups = RegularDistribution::normal(0, 1);
    const CompositeInverse psi([&ups](double a) { return ups.inverse(a); });
    CHECK(prediction_interval(psi, 0.0, 1e-6).b < 1e-4);

    CHECK_THROWS_AS(prediction_interval(psi, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(prediction_interval(psi, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(prediction_interval(psi, std::nan(""), 0.9), DomainError);

    // Needed half-width beyond 1e9: surfaced as infeasible.
    const auto wide = RegularDistribution::normal(0, 1e10);
    const CompositeInverse psiw([&wide](double a) { return wide.inverse(a); });
    CHECK_THROWS_AS(prediction_interval(psiw, 0.0, 0.999999), InfeasibleError);

    // A decreasing inverse is rejected by the grid check.
    const CompositeInverse bad([](double a) { return -a; });
    CHECK_THROWS_AS(prediction_interval(bad, 0.0, 0.9), ContractError);
}

TEST_CASE("fit_dataset end to end on the worked example") {
    const auto out = fit_dataset(fixtures::table1(), ModelSpec::linear(1), Loss::lad(),
                                 QuadratureRule::midpoint(2001));
    CHECK(out.estimate.converged);
    CHECK(out.estimate.beta[0] == doctest::Approx(2.26257218).epsilon(2e-3));
    CHECK(out.estimate.beta[1] == doctest::Approx(2.94023749).epsilon(2e-3));
    CHECK(out.estimate.objective_value == doctest::Approx(17.5279120113).epsilon(1e-6));
    CHECK(std::abs(out.moments.e_hat) < 5e-4);
    CHECK(out.moments.sigma2_hat == doctest::Approx(2.0167).epsilon(1e-3));
}
