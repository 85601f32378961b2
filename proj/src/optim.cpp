#include "uregress/optim.hpp"

#include "uregress/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <string>

namespace uregress {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_beta(std::span<const double> beta) {
    std::ostringstream os;
    os << "(";
    for (std::size_t j = 0; j < beta.size(); ++j)
        os << (j ? ", " : "") << beta[j];
    os << ")";
    return os.str();
}

// Search-space transform: bounded parameters are optimized as
// t = log(beta - lb), so probes stay strictly feasible.
struct Transform {
    const std::vector<std::optional<double>>& lb;

    std::vector<double> to_search(std::span<const double> beta) const {
        std::vector<double> t(beta.size());
        for (std::size_t j = 0; j < beta.size(); ++j)
            t[j] = lb[j] ? std::log(beta[j] - *lb[j]) : beta[j];
        return t;
    }

    std::vector<double> to_model(std::span<const double> t) const {
        std::vector<double> beta(t.size());
        for (std::size_t j = 0; j < t.size(); ++j)
            beta[j] = lb[j] ? *lb[j] + std::exp(t[j]) : t[j];
        return beta;
    }
};

struct Evaluator {
    const ObjectiveFn& obj;
    const Transform& tf;

    double operator()(std::span<const double> t) const {
        const auto beta = tf.to_model(t);
        const double v = obj(beta);
        if (std::isnan(v))
            throw NumericError("objective returned NaN at beta = " + format_beta(beta));
        return v;
    }
};

struct NmResult {
    std::vector<double> t;
    double value = kInf;
    bool converged = false;
    bool saw_finite = false;
};

// Nelder-Mead with the standard coefficients (reflect 1, expand 2,
// contract 1/2, shrink 1/2), simplex built from x0 + step_j * e_j.
NmResult nelder_mead(const Evaluator& eval, std::vector<double> x0,
                     const std::vector<double>& steps, int max_iters,
                     double xtol, double ftol) {
    const int dim = static_cast<int>(x0.size());
    const int nv = dim + 1;
    std::vector<std::vector<double>> vx(nv, x0);
    std::vector<double> vf(nv);
    for (int j = 0; j < dim; ++j) vx[j + 1][j] += steps[j];
    for (int v = 0; v < nv; ++v) vf[v] = eval(vx[v]);

    std::vector<int> order(nv);
    auto sort_order = [&] {
        for (int v = 0; v < nv; ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return vf[a] < vf[b]; });
    };

    NmResult res;
    std::vector<double> centroid(dim), xr(dim), xe(dim), xc(dim);
    for (int it = 0; it < max_iters; ++it) {
        sort_order();
        const int best = order[0], worst = order[nv - 1], second = order[nv - 2];

        if (std::isfinite(vf[best])) res.saw_finite = true;

        double diam = 0.0;
        for (int v = 0; v < nv; ++v)
            for (int j = 0; j < dim; ++j)
                diam = std::max(diam, std::abs(vx[v][j] - vx[best][j]));
        const double spread = vf[worst] - vf[best];
        if (diam < xtol && spread < ftol) {
            res.converged = true;
            break;
        }
        if (!res.saw_finite) break; // nothing to reflect against

        for (int j = 0; j < dim; ++j) {
            double c = 0.0;
            for (int v = 0; v < nv; ++v)
                if (v != worst) c += vx[v][j];
            centroid[j] = c / dim;
        }

        for (int j = 0; j < dim; ++j) xr[j] = centroid[j] + (centroid[j] - vx[worst][j]);
        const double fr = eval(xr);

        if (fr < vf[best]) {
            for (int j = 0; j < dim; ++j)
                xe[j] = centroid[j] + 2.0 * (centroid[j] - vx[worst][j]);
            const double fe = eval(xe);
            if (fe < fr) {
                vx[worst] = xe;
                vf[worst] = fe;
            } else {
                vx[worst] = xr;
                vf[worst] = fr;
            }
        } else if (fr < vf[second]) {
            vx[worst] = xr;
            vf[worst] = fr;
        } else {
            if (fr < vf[worst]) {
                for (int j = 0; j < dim; ++j)
                    xc[j] = centroid[j] + 0.5 * (xr[j] - centroid[j]);
                const double fc = eval(xc);
                if (fc <= fr) {
                    vx[worst] = xc;
                    vf[worst] = fc;
                    continue;
                }
            } else {
                for (int j = 0; j < dim; ++j)
                    xc[j] = centroid[j] - 0.5 * (centroid[j] - vx[worst][j]);
                const double fc = eval(xc);
                if (fc < vf[worst]) {
                    vx[worst] = xc;
                    vf[worst] = fc;
                    continue;
                }
            }
            for (int v = 0; v < nv; ++v) {
                if (v == best) continue;
                for (int j = 0; j < dim; ++j)
                    vx[v][j] = vx[best][j] + 0.5 * (vx[v][j] - vx[best][j]);
                vf[v] = eval(vx[v]);
            }
        }
    }

    sort_order();
    res.t = vx[order[0]];
    res.value = vf[order[0]];
    return res;
}

// Deterministic uniform in [0,1) from the raw engine output.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

ParamEstimate minimize(const ObjectiveFn& obj, int dim,
                       const std::vector<std::optional<double>>& lower_bounds,
                       const OptimOptions& opts) {
    if (dim < 1) throw ContractError("minimize: dim must be positive");
    if (static_cast<int>(lower_bounds.size()) != dim)
        throw ContractError("minimize: one lower bound entry per parameter");
    if (opts.starts < 1) throw ContractError("minimize: starts must be >= 1");
    if (!(opts.xtol > 0.0) || !(opts.ftol > 0.0))
        throw ContractError("minimize: tolerances must be positive");
    if (!opts.init_box.empty() && static_cast<int>(opts.init_box.size()) != dim)
        throw ContractError("minimize: init_box must have one interval per parameter");

    const Transform tf{lower_bounds};
    const Evaluator eval{obj, tf};

    // Sampling intervals in search space.
    std::vector<std::pair<double, double>> box(dim);
    for (int j = 0; j < dim; ++j) {
        if (!opts.init_box.empty()) {
            const auto [lo, hi] = opts.init_box[j];
            if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi))
                throw ContractError("minimize: init_box interval must be finite and ordered");
            if (lower_bounds[j]) {
                if (!(lo > *lower_bounds[j]))
                    throw ContractError("minimize: init_box must lie above the lower bound");
                box[j] = {std::log(lo - *lower_bounds[j]), std::log(hi - *lower_bounds[j])};
            } else {
                box[j] = {lo, hi};
            }
        } else if (lower_bounds[j]) {
            box[j] = {std::log(1e-3), std::log(100.0)}; // log-uniform over [lb+1e-3, lb+100]
        } else {
            box[j] = {-50.0, 50.0};
        }
    }

    std::mt19937_64 rng(opts.seed);
    ParamEstimate best;
    bool have_best = false;
    bool any_finite = false;

    for (int s = 0; s < opts.starts; ++s) {
        std::vector<double> t0(dim), steps(dim);
        for (int j = 0; j < dim; ++j) {
            const auto [lo, hi] = box[j];
            t0[j] = lo + (hi - lo) * next_unit(rng);
            steps[j] = 0.05 * std::max(1.0, std::abs(t0[j]));
        }
        const NmResult r = nelder_mead(eval, t0, steps, opts.max_iters, opts.xtol, opts.ftol);
        if (!r.saw_finite) continue;
        any_finite = true;
        if (!have_best || r.value < best.objective_value) {
            best.beta = tf.to_model(r.t);
            best.objective_value = r.value;
            best.converged = r.converged;
            have_best = true;
        }
    }

    if (!any_finite)
        throw InfeasibleError("minimize: objective was +inf at every probed point; "
                              "check constraints and init_box");
    best.starts_used = opts.starts;
    return best;
}

ParamEstimate polish(const ObjectiveFn& obj, std::span<const double> beta0,
                     const std::vector<std::optional<double>>& lower_bounds,
                     const OptimOptions& opts) {
    const int dim = static_cast<int>(beta0.size());
    if (dim < 1) throw ContractError("polish: empty starting point");
    if (static_cast<int>(lower_bounds.size()) != dim)
        throw ContractError("polish: one lower bound entry per parameter");

    for (int j = 0; j < dim; ++j) {
        if (!std::isfinite(beta0[j]) ||
            (lower_bounds[j] && !(beta0[j] > *lower_bounds[j])))
            throw InfeasibleError("polish: starting point is infeasible");
    }
    const double f0 = obj(beta0);
    if (std::isnan(f0))
        throw NumericError("polish: objective is NaN at the starting point");
    if (std::isinf(f0))
        throw InfeasibleError("polish: objective is +inf at the starting point");

    const Transform tf{lower_bounds};
    const Evaluator eval{obj, tf};
    auto t0 = tf.to_search(beta0);
    std::vector<double> steps(dim);
    for (int j = 0; j < dim; ++j)
        steps[j] = 1e-3 * std::max(1.0, std::abs(t0[j]));

    const NmResult r = nelder_mead(eval, t0, steps, opts.max_iters, opts.xtol, opts.ftol);
    ParamEstimate out;
    out.beta = tf.to_model(r.t);
    out.objective_value = r.value;
    out.converged = r.converged;
    out.starts_used = 1;
    return out;
}

} // namespace uregress
