#pragma once

#include "uregress/errors.hpp"

#include <functional>
#include <vector>

namespace uregress {

enum class QuadScheme { Midpoint, GaussLegendre };

/// Deterministic quadrature over the open interval (0,1).
///
/// Every evaluation point is strictly interior, so integrands built from
/// inverse distributions may diverge at the endpoints and still integrate.
/// Composite midpoint with N nodes evaluates at (k-1/2)/N, k=1..N, each with
/// weight 1/N. The Gauss-Legendre variant places `nodes` points on each of
/// `panels` equal subintervals.
class QuadratureRule {
public:
    static constexpr int kDefaultNodes = 2001;
    static constexpr long kNodeCap = 1L << 20;

    static QuadratureRule midpoint(int nodes = kDefaultNodes);
    static QuadratureRule gauss_legendre(int points_per_panel, int panels = 1);

    QuadScheme scheme() const { return scheme_; }
    int nodes() const { return nodes_; }
    int panels() const { return panels_; }
    long total_points() const;

    /// Evaluation points (ascending) and matching weights; weights sum to 1.
    const std::vector<double>& points() const { return points_; }
    const std::vector<double>& weights() const { return weights_; }

    /// Same scheme with twice the evaluation points (midpoint: 2N nodes;
    /// Gauss: 2x panels).
    QuadratureRule doubled() const;

private:
    QuadratureRule(QuadScheme scheme, int nodes, int panels);

    QuadScheme scheme_;
    int nodes_;
    int panels_;
    std::vector<double> points_;
    std::vector<double> weights_;
};

/// Weighted sum of f over the rule's points, accumulated in ascending node
/// order. A non-finite f value raises NumericError naming the node.
double integrate(const std::function<double(double)>& f, const QuadratureRule& q);

/// Doubles the rule until successive estimates differ by less than tol or
/// the node cap (2^20 points) is reached; returns the last estimate.
/// Raises ConvergenceError carrying the last delta if the cap is hit first.
double integrate_adaptive(const std::function<double(double)>& f,
                          const QuadratureRule& base, double tol);

} // namespace uregress
