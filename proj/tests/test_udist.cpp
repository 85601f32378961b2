#include "uregress/errors.hpp"
#include "uregress/fixtures.hpp"
#include "uregress/udist.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace uregress;

TEST_CASE("construction validation") {
    CHECK_THROWS_AS(RegularDistribution::linear(3, 2), ValidationError);
    CHECK_THROWS_AS(RegularDistribution::linear(2, 2), ValidationError);
    CHECK_THROWS_AS(RegularDistribution::linear(0, std::nan("")), ValidationError);
    CHECK_THROWS_AS(RegularDistribution::normal(0, 0), ValidationError);
    CHECK_THROWS_AS(RegularDistribution::normal(0, -1), ValidationError);
    CHECK_NOTHROW(RegularDistribution::point(7));
}

TEST_CASE("inverse formulas") {
    const auto l01 = RegularDistribution::linear(0, 1);
    CHECK(l01.inverse(0.5) == doctest::Approx(0.5).epsilon(1e-15));

    const auto l56 = RegularDistribution::linear(5, 6);
    for (double a : {0.05, 0.3, 0.5, 0.77, 0.99})
        CHECK(l56.inverse(a) == doctest::Approx(5 * (1 - a) + 6 * a).epsilon(1e-15));

    const auto n01 = RegularDistribution::normal(0, 1);
    CHECK(n01.inverse(0.5) == doctest::Approx(0.0));
    const double s3pi = std::sqrt(3.0) / std::acos(-1.0);
    CHECK(n01.inverse(0.9) == doctest::Approx(s3pi * std::log(9.0)).epsilon(1e-12));

    const auto p = RegularDistribution::point(3.25);
    CHECK(p.inverse(0.5) == 3.25);
    CHECK(p.inverse(-2.0) == 3.25); // point accepts any alpha

    CHECK_THROWS_AS(l01.inverse(0.0), DomainError);
    CHECK_THROWS_AS(l01.inverse(1.0), DomainError);
    CHECK_THROWS_AS(n01.inverse(-0.1), DomainError);
    CHECK_THROWS_AS(n01.inverse(1.5), DomainError);
}

TEST_CASE("cdf by bisection") {
    CHECK(RegularDistribution::linear(0, 1).cdf(0.25) == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(RegularDistribution::normal(0, 1).cdf(0.0) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(RegularDistribution::linear(2, 3).cdf(1.0) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(RegularDistribution::linear(2, 3).cdf(5.0) == doctest::Approx(1.0).epsilon(1e-10));

    const auto p = RegularDistribution::point(2.0);
    CHECK(p.cdf(1.999) == 0.0);
    CHECK(p.cdf(2.0) == 1.0);
    CHECK(p.cdf(2.5) == 1.0);

    CHECK_THROWS_AS(p.cdf(std::numeric_limits<double>::infinity()), DomainError);
    CHECK_THROWS_AS(RegularDistribution::linear(0, 1).cdf(std::nan("")), DomainError);
}

TEST_CASE("moments") {
    const auto q = QuadratureRule::midpoint();

    CHECK(expected_value(RegularDistribution::linear(2, 3), q) ==
          doctest::Approx(2.5).epsilon(1e-12));
    CHECK(std::abs(expected_value(RegularDistribution::normal(1.5, 2.0), q) - 1.5) < 1e-12);

    // Closed form for a general linear distribution: (a+b)/2.
    for (auto [a, b] : {std::pair{-3.0, 1.0}, {0.25, 9.5}, {-11.0, -4.0}})
        CHECK(expected_value(RegularDistribution::linear(a, b), q) ==
              doctest::Approx((a + b) / 2).epsilon(1e-12));

    CHECK(std::abs(expected_abs(RegularDistribution::linear(-1, 1), q) - 0.5) < 1e-6);
    CHECK(expected_abs(RegularDistribution::linear(2, 3), q) ==
          doctest::Approx(2.5).epsilon(1e-12));
    // Piecewise closed form, kink at alpha = 3/4.
    CHECK(std::abs(expected_abs(RegularDistribution::linear(-3, 1), q) - 1.25) < 1e-6);

    // Midpoint error on the quadratic integrand is d^2/(12 N^2), ~2e-8 here.
    CHECK(std::abs(expected_square(RegularDistribution::linear(0, 1), q) - 1.0 / 3) < 1e-6);
    CHECK(expected_square(RegularDistribution::point(-2.5), q) ==
          doctest::Approx(6.25).epsilon(1e-12));
    CHECK(std::abs(expected_square(RegularDistribution::linear(-1, 1), q) - 1.0 / 3) < 1e-6);
}

TEST_CASE("inverse is strictly increasing and cdf inverts it") {
    const RegularDistribution dists[] = {
        RegularDistribution::linear(0, 1), RegularDistribution::linear(-7, -2),
        RegularDistribution::normal(0, 1), RegularDistribution::normal(3, 0.25)};
    for (const auto& d : dists) {
        double prev = -std::numeric_limits<double>::infinity();
        for (int k = 1; k <= 99; ++k) {
            const double v = d.inverse(k / 100.0);
            CHECK(v > prev);
            prev = v;
        }
        for (int k = 1; k <= 99; ++k) {
            const double a = 0.01 + 0.98 * (k - 1) / 98.0;
            CHECK(std::abs(d.cdf(d.inverse(a)) - a) < 1e-9);
        }
    }
}

TEST_CASE("moment inequalities on a sampled family") {
    const auto q = QuadratureRule::midpoint();
    std::mt19937_64 rng(7);
    auto unit = [&rng] { return (rng() >> 11) * 0x1.0p-53; };
    for (int t = 0; t < 40; ++t) {
        RegularDistribution d = RegularDistribution::point(0);
        switch (t % 3) {
        case 0: {
            const double a = -5 + 10 * unit();
            d = RegularDistribution::linear(a, a + 0.1 + 5 * unit());
            break;
        }
        case 1:
            d = RegularDistribution::normal(-5 + 10 * unit(), 0.1 + 3 * unit());
            break;
        default:
            d = RegularDistribution::point(-5 + 10 * unit());
        }
        const double ev = expected_value(d, q);
        CHECK(expected_abs(d, q) >= std::abs(ev) - 1e-9);
        CHECK(expected_square(d, q) >= ev * ev - 1e-9);
    }
}

TEST_CASE("doubling nodes moves the worked-example moments by less than 1e-6") {
    const auto data = fixtures::table1();
    const auto q1 = QuadratureRule::midpoint(2001);
    const auto q2 = QuadratureRule::midpoint(4002);
    auto check = [&](const RegularDistribution& d) {
        CHECK(std::abs(expected_value(d, q1) - expected_value(d, q2)) < 1e-6);
        CHECK(std::abs(expected_abs(d, q1) - expected_abs(d, q2)) < 1e-6);
        CHECK(std::abs(expected_square(d, q1) - expected_square(d, q2)) < 1e-6);
    };
    for (int i = 0; i < data.size(); ++i) {
        check(data[i].y);
        check(data[i].x[0]);
    }
}

TEST_CASE("kind-checked accessors") {
    const auto l = RegularDistribution::linear(1, 2);
    CHECK(l.lower() == 1.0);
    CHECK(l.upper() == 2.0);
    CHECK_THROWS_AS(l.value(), ContractError);
    CHECK_THROWS_AS(l.scale(), ContractError);
    const auto n = RegularDistribution::normal(0.5, 2.0);
    CHECK(n.location() == 0.5);
    CHECK(n.scale() == 2.0);
    CHECK_THROWS_AS(n.lower(), ContractError);
}
