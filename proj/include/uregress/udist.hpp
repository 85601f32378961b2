#pragma once

#include "uregress/quad.hpp"

namespace uregress {

enum class DistKind { Linear, Normal, Point };

/// Regular uncertainty distribution, queried through its inverse.
///
///   linear(a,b):     inverse(alpha) = (1-alpha)a + alpha*b,  a < b
///   normal(e,sigma): inverse(alpha) = e + (sigma*sqrt(3)/pi) ln(alpha/(1-alpha))
///   point(c):        inverse(alpha) = c   (degenerate crisp value)
///
/// Point distributions are admitted so that classic crisp regression falls
/// out as a special case; they accept any alpha.
class RegularDistribution {
public:
    static RegularDistribution linear(double a, double b);
    static RegularDistribution normal(double e, double sigma);
    static RegularDistribution point(double c);

    DistKind kind() const { return kind_; }

    /// Inverse uncertainty distribution. alpha must lie in (0,1) for linear
    /// and normal kinds; DomainError names the offending value.
    double inverse(double alpha) const;

    /// Uncertainty distribution, i.e. the alpha with inverse(alpha) = x,
    /// clamped to [0,1] outside the support. Bisection on alpha to 1e-12.
    /// Point kinds are the step function 1{x >= c}.
    double cdf(double x) const;

    // Kind-specific parameter access; ContractError on a kind mismatch.
    double lower() const;    // linear a
    double upper() const;    // linear b
    double location() const; // normal e
    double scale() const;    // normal sigma
    double value() const;    // point c

    bool operator==(const RegularDistribution&) const = default;

private:
    RegularDistribution(DistKind kind, double p0, double p1)
        : kind_(kind), p0_(p0), p1_(p1) {}

    DistKind kind_;
    double p0_;
    double p1_;
};

/// E[xi] = integral_0^1 inverse(alpha) d(alpha) under rule q.
double expected_value(const RegularDistribution& d, const QuadratureRule& q);

/// E|xi| = integral_0^1 |inverse(alpha)| d(alpha).
double expected_abs(const RegularDistribution& d, const QuadratureRule& q);

/// E[xi^2] = integral_0^1 inverse(alpha)^2 d(alpha).
double expected_square(const RegularDistribution& d, const QuadratureRule& q);

namespace detail {
/// Bisection on alpha in [0,1] for a nondecreasing inverse; |hi-lo| <= 1e-12.
double invert_nondecreasing(const std::function<double(double)>& inv, double x);
} // namespace detail

} // namespace uregress
