#include "uregress/udist.hpp"

#include "uregress/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace uregress {

namespace {

constexpr double kSqrt3OverPi = 0.55132889542179204; // sqrt(3)/pi

void require_finite(double v, const char* what) {
    if (!std::isfinite(v))
        throw ValidationError(std::string("non-finite ") + what);
}

} // namespace

RegularDistribution RegularDistribution::linear(double a, double b) {
    require_finite(a, "linear bound a");
    require_finite(b, "linear bound b");
    if (!(a < b))
        throw ValidationError("linear distribution requires a < b (got a=" +
                              std::to_string(a) + ", b=" + std::to_string(b) +
                              "); write a point distribution for a crisp value");
    return RegularDistribution(DistKind::Linear, a, b);
}

RegularDistribution RegularDistribution::normal(double e, double sigma) {
    require_finite(e, "normal location e");
    require_finite(sigma, "normal scale sigma");
    if (!(sigma > 0.0))
        throw ValidationError("normal distribution requires sigma > 0 (got " +
                              std::to_string(sigma) + ")");
    return RegularDistribution(DistKind::Normal, e, sigma);
}

RegularDistribution RegularDistribution::point(double c) {
    require_finite(c, "point value c");
    return RegularDistribution(DistKind::Point, c, 0.0);
}

double RegularDistribution::inverse(double alpha) const {
    if (kind_ == DistKind::Point) return p0_;
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("inverse distribution requires alpha in (0,1), got " +
                          std::to_string(alpha));
    if (kind_ == DistKind::Linear) return (1.0 - alpha) * p0_ + alpha * p1_;
    return p0_ + p1_ * kSqrt3OverPi * std::log(alpha / (1.0 - alpha));
}

double RegularDistribution::cdf(double x) const {
    if (!std::isfinite(x))
        throw DomainError("cdf requires a finite argument");
    if (kind_ == DistKind::Point) return x >= p0_ ? 1.0 : 0.0;
    return detail::invert_nondecreasing(
        [this](double a) { return inverse(a); }, x);
}

double RegularDistribution::lower() const {
    if (kind_ != DistKind::Linear) throw ContractError("lower(): not a linear distribution");
    return p0_;
}

double RegularDistribution::upper() const {
    if (kind_ != DistKind::Linear) throw ContractError("upper(): not a linear distribution");
    return p1_;
}

double RegularDistribution::location() const {
    if (kind_ != DistKind::Normal) throw ContractError("location(): not a normal distribution");
    return p0_;
}

double RegularDistribution::scale() const {
    if (kind_ != DistKind::Normal) throw ContractError("scale(): not a normal distribution");
    return p1_;
}

double RegularDistribution::value() const {
    if (kind_ != DistKind::Point) throw ContractError("value(): not a point distribution");
    return p0_;
}

double expected_value(const RegularDistribution& d, const QuadratureRule& q) {
    return integrate([&d](double a) { return d.inverse(a); }, q);
}

double expected_abs(const RegularDistribution& d, const QuadratureRule& q) {
    return integrate([&d](double a) { return std::abs(d.inverse(a)); }, q);
}

double expected_square(const RegularDistribution& d, const QuadratureRule& q) {
    return integrate(
        [&d](double a) {
            const double v = d.inverse(a);
            return v * v;
        },
        q);
}

namespace detail {

double invert_nondecreasing(const std::function<double(double)>& inv, double x) {
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (inv(mid) <= x)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace detail

} // namespace uregress
