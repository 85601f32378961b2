#include "uregress/quad.hpp"

#include "uregress/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace uregress {

namespace {

// Gauss-Legendre nodes/weights on (-1,1) by Newton iteration on P_n.
void legendre_points(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

} // namespace

QuadratureRule::QuadratureRule(QuadScheme scheme, int nodes, int panels)
    : scheme_(scheme), nodes_(nodes), panels_(panels) {
    if (nodes < 1 || panels < 1)
        throw ValidationError("quadrature rule requires positive nodes and panels");
    if (total_points() < 16)
        throw ValidationError("quadrature rule requires at least 16 evaluation points (got " +
                              std::to_string(total_points()) + ")");
    if (total_points() > kNodeCap)
        throw ValidationError("quadrature rule exceeds the node cap 2^20");

    if (scheme == QuadScheme::Midpoint) {
        points_.resize(nodes);
        weights_.assign(nodes, 1.0 / nodes);
        for (int k = 0; k < nodes; ++k)
            points_[k] = (k + 0.5) / nodes;
    } else {
        std::vector<double> xg, wg;
        legendre_points(nodes, xg, wg);
        points_.reserve(static_cast<std::size_t>(nodes) * panels);
        weights_.reserve(static_cast<std::size_t>(nodes) * panels);
        for (int p = 0; p < panels; ++p) {
            const double lo = static_cast<double>(p) / panels;
            const double hi = static_cast<double>(p + 1) / panels;
            const double mid = 0.5 * (lo + hi);
            const double half = 0.5 * (hi - lo);
            for (int k = 0; k < nodes; ++k) {
                points_.push_back(mid + half * xg[k]);
                weights_.push_back(0.5 * wg[k] / panels);
            }
        }
    }
}

QuadratureRule QuadratureRule::midpoint(int nodes) {
    return QuadratureRule(QuadScheme::Midpoint, nodes, 1);
}

QuadratureRule QuadratureRule::gauss_legendre(int points_per_panel, int panels) {
    return QuadratureRule(QuadScheme::GaussLegendre, points_per_panel, panels);
}

long QuadratureRule::total_points() const {
    return scheme_ == QuadScheme::Midpoint
               ? nodes_
               : static_cast<long>(nodes_) * panels_;
}

QuadratureRule QuadratureRule::doubled() const {
    if (scheme_ == QuadScheme::Midpoint)
        return QuadratureRule(scheme_, nodes_ * 2, 1);
    return QuadratureRule(scheme_, nodes_, panels_ * 2);
}

double integrate(const std::function<double(double)>& f, const QuadratureRule& q) {
    const auto& pts = q.points();
    const auto& wts = q.weights();
    double acc = 0.0;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const double v = f(pts[k]);
        if (!std::isfinite(v))
            throw NumericError("non-finite integrand value at alpha = " +
                               std::to_string(pts[k]));
        if (q.scheme() == QuadScheme::Midpoint)
            acc += v;
        else
            acc += wts[k] * v;
    }
    return q.scheme() == QuadScheme::Midpoint ? acc / q.nodes() : acc;
}

double integrate_adaptive(const std::function<double(double)>& f,
                          const QuadratureRule& base, double tol) {
    if (!(tol > 0.0)) throw DomainError("integrate_adaptive requires tol > 0");

    QuadratureRule rule = base;
    double prev = integrate(f, rule);
    double delta = 0.0;
    while (rule.total_points() * 2 <= QuadratureRule::kNodeCap) {
        rule = rule.doubled();
        const double cur = integrate(f, rule);
        delta = std::abs(cur - prev);
        prev = cur;
        if (delta < tol) return cur;
    }
    throw ConvergenceError("adaptive quadrature hit the 2^20 node cap; last delta = " +
                           std::to_string(delta) + " (tol " + std::to_string(tol) + ")");
}

} // namespace uregress
