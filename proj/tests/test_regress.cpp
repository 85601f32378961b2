#include "uregress/errors.hpp"
#include "uregress/fixtures.hpp"
#include "uregress/regress.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace uregress;

namespace {

// Crisp dataset on a dyadic lattice (values k/16), so the quadrature,
// oracle, and brute-force sums are all exactly representable.
Dataset dyadic_crisp(std::mt19937_64& rng, int n, int p) {
    auto lattice = [&rng] { return static_cast<double>(static_cast<int>(rng() % 641) - 320) / 16.0; };
    std::vector<Observation> obs;
    for (int i = 0; i < n; ++i) {
        Observation o{RegularDistribution::point(lattice()), {}};
        for (int j = 0; j < p; ++j) o.x.push_back(RegularDistribution::point(lattice()));
        obs.push_back(std::move(o));
    }
    return Dataset(p, std::move(obs));
}

std::vector<double> dyadic_beta(std::mt19937_64& rng, int dim) {
    std::vector<double> b(dim);
    for (auto& v : b) v = static_cast<double>(static_cast<int>(rng() % 161) - 80) / 16.0;
    return b;
}

} // namespace

TEST_CASE("dataset validation") {
    CHECK_THROWS_AS(Dataset(1, {}), ValidationError);
    const auto y = RegularDistribution::linear(0, 1);
    CHECK_THROWS_AS(Dataset(2, {Observation{y, {y}}}), ValidationError);
    try {
        Dataset(2, {Observation{y, {y, y}}, Observation{y, {y}}});
        CHECK(false);
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("observation 2") != std::string::npos);
    }
}

TEST_CASE("objective matches the closed-form segment oracle on the worked example") {
    const auto data = fixtures::table1();
    const auto model = ModelSpec::linear(1);
    // Fine midpoint rule: the kink panels contribute ~|d| h^2/4 each, so the
    // default 2001-node rule sits exactly at the 1e-6 comparison scale.
    const auto rule = QuadratureRule::midpoint(1 << 18);
    const auto obj = objective(data, model, Loss::lad(), rule);

    const std::vector<double> printed{2.4016, 2.9344};
    CHECK(std::abs(obj(printed) - exact_linear_lad_objective(data, printed)) < 1e-6);

    std::mt19937_64 rng(123);
    auto unit = [&rng] { return (rng() >> 11) * 0x1.0p-53; };
    for (int t = 0; t < 50; ++t) {
        const std::vector<double> beta{-20 + 40 * unit(), -5 + 10 * unit()};
        CHECK(std::abs(obj(beta) - exact_linear_lad_objective(data, beta)) < 1e-6);
    }
}

TEST_CASE("crisp degeneration is exact") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 20; ++t) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const int p = 1 + static_cast<int>(rng() % 2);
        const auto data = dyadic_crisp(rng, n, p);
        const auto model = ModelSpec::linear(p);
        const auto beta = dyadic_beta(rng, p + 1);
        const auto rule = QuadratureRule::midpoint(2001);

        const double lad = objective(data, model, Loss::lad(), rule)(beta);
        const double ls = objective(data, model, Loss::ls(), rule)(beta);
        CHECK(lad == oracles::crisp_lad(data, model, beta));
        CHECK(ls == oracles::crisp_ls(data, model, beta));
        CHECK(lad == exact_linear_lad_objective(data, beta));
    }
}

TEST_CASE("zero residuals give a zero objective") {
    std::vector<Observation> obs;
    for (int i = 0; i < 5; ++i)
        obs.push_back(Observation{RegularDistribution::point(1.5 + 2.0 * i),
                                  {RegularDistribution::point(static_cast<double>(i))}});
    const Dataset data(1, std::move(obs));
    const auto obj = objective(data, ModelSpec::linear(1), Loss::lad(),
                               QuadratureRule::midpoint(2001));
    CHECK(obj(std::vector<double>{1.5, 2.0}) == 0.0);
}

TEST_CASE("exact_linear_lad_objective worked values") {
    // Single response, no predictors: reduces to E|y|.
    const Dataset d0(0, {Observation{RegularDistribution::linear(-1, 1), {}}});
    CHECK(exact_linear_lad_objective(d0, std::vector<double>{0.0}) ==
          doctest::Approx(0.5).epsilon(1e-15));

    // Residual inverse (2+a) - (1-a) = 1 + 2a, positive on (0,1).
    const Dataset d1(1, {Observation{RegularDistribution::linear(2, 3),
                                     {RegularDistribution::linear(0, 1)}}});
    CHECK(exact_linear_lad_objective(d1, std::vector<double>{0.0, 1.0}) ==
          doctest::Approx(2.0).epsilon(1e-15));

    const Dataset dn(1, {Observation{RegularDistribution::normal(0, 1),
                                     {RegularDistribution::linear(0, 1)}}});
    CHECK_THROWS_AS(exact_linear_lad_objective(dn, std::vector<double>{0.0, 1.0}),
                    ContractError);
    CHECK_THROWS_AS(exact_linear_lad_objective(d1, std::vector<double>{0.0}), ContractError);
}

TEST_CASE("predict_crisp") {
    const std::vector<double> beta{2.4016, 2.9344};
    CHECK(predict_crisp(ModelSpec::linear(1), beta, std::vector<double>{5.5}) ==
          doctest::Approx(18.5408).epsilon(1e-12));
    CHECK(predict_crisp(ModelSpec::michaelis_menten(), std::vector<double>{1.0, 1.0},
                        std::vector<double>{1.0}) == doctest::Approx(0.5));
    // Saturation toward the asymptote b1.
    CHECK(predict_crisp(ModelSpec::gompertz(), std::vector<double>{1.0, 1.0, 1.0},
                        std::vector<double>{50.0}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(predict_crisp(ModelSpec::michaelis_menten(),
                                  std::vector<double>{-1.0, 1.0}, std::vector<double>{1.0}),
                    ConstraintError);
}

TEST_CASE("objective contract and constraint handling") {
    const auto data = fixtures::table1();
    CHECK_THROWS_AS(objective(data, ModelSpec::linear(2), Loss::lad(),
                              QuadratureRule::midpoint(2001)),
                    ContractError);

    const auto obj = objective(data, ModelSpec::michaelis_menten(), Loss::lad(),
                               QuadratureRule::midpoint(101));
    CHECK(std::isinf(obj(std::vector<double>{-1.0, 1.0})));
    CHECK(std::isinf(obj(std::vector<double>{1.0, 0.0})));
    CHECK(std::isfinite(obj(std::vector<double>{1.0, 1.0})));

    CHECK_THROWS_AS(obj(std::vector<double>{1.0, 1.0, 1.0}), ContractError);
}

TEST_CASE("sign-boundary continuity of the linear objective") {
    const auto data = fixtures::table1();
    const auto obj = objective(data, ModelSpec::linear(1), Loss::lad(),
                               QuadratureRule::midpoint(2001));
    for (double u : {0.0, 2.26}) {
        const double plus = obj(std::vector<double>{u, 1e-12});
        const double minus = obj(std::vector<double>{u, -1e-12});
        CHECK(std::abs(plus - minus) < 1e-9);
    }
}

TEST_CASE("LS objective with point data equals the residual sum of squares") {
    std::mt19937_64 rng(2024);
    const auto data = dyadic_crisp(rng, 8, 1);
    const auto model = ModelSpec::linear(1);
    const auto beta = dyadic_beta(rng, 2);
    const double q =
        objective(data, model, Loss::ls(), QuadratureRule::midpoint(2001))(beta);
    CHECK(q == oracles::crisp_ls(data, model, beta));
}

TEST_CASE("pointwise domination implies objective dominance") {
    // Two crisp observations: per-observation |residual| dominated at beta
    // implies the summed objective is dominated.
    const Dataset data(1, {Observation{RegularDistribution::point(1.0),
                                       {RegularDistribution::point(1.0)}},
                           Observation{RegularDistribution::point(3.0),
                                       {RegularDistribution::point(2.0)}}});
    const auto model = ModelSpec::linear(1);
    const auto obj =
        objective(data, model, Loss::lad(), QuadratureRule::midpoint(101));
    const std::vector<double> good{0.0, 1.2}; // residuals (-0.2, 0.6)
    const std::vector<double> bad{0.0, 0.8};  // residuals (0.2, 1.4)
    const double r1g = std::abs(1.0 - (0.0 + 1.2 * 1.0));
    const double r2g = std::abs(3.0 - (0.0 + 1.2 * 2.0));
    const double r1b = std::abs(1.0 - (0.0 + 0.8 * 1.0));
    const double r2b = std::abs(3.0 - (0.0 + 0.8 * 2.0));
    REQUIRE(r1g <= r1b);
    REQUIRE(r2g <= r2b);
    CHECK(obj(good) <= obj(bad));
}

TEST_CASE("custom loss registration enforces the loss properties") {
    // A bounded even loss is accepted.
    const auto huberish = Loss::custom("atan2sq", [](double r) { return std::atan(r * r); });
    const auto data = fixtures::table1();
    const auto obj = objective(data, ModelSpec::linear(1), huberish,
                               QuadratureRule::midpoint(101));
    CHECK(std::isfinite(obj(std::vector<double>{2.26, 2.94})));

    CHECK_THROWS_AS(Loss::custom("offset", [](double r) { return r * r + 1.0; }),
                    ValidationError);
    CHECK_THROWS_AS(Loss::custom("odd", [](double r) { return r; }), ValidationError);
    CHECK_THROWS_AS(Loss::custom("dip", [](double r) { return std::cos(r) - 1.0; }),
                    ValidationError);
}
