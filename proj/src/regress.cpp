#include "uregress/regress.hpp"

#include "uregress/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace uregress {

Dataset::Dataset(int predictors, std::vector<Observation> observations)
    : predictors_(predictors), observations_(std::move(observations)) {
    if (predictors_ < 0) throw ValidationError("negative predictor count");
    if (observations_.empty()) throw ValidationError("dataset requires at least one observation");
    for (std::size_t i = 0; i < observations_.size(); ++i) {
        if (static_cast<int>(observations_[i].x.size()) != predictors_)
            throw ValidationError("observation " + std::to_string(i + 1) + " has " +
                                  std::to_string(observations_[i].x.size()) +
                                  " predictors, expected " + std::to_string(predictors_));
    }
}

ObjectiveFunction::ObjectiveFunction(const Dataset& data, const ModelSpec& model,
                                     Loss loss, const QuadratureRule& rule,
                                     GompertzFlip flip)
    : model_(model), loss_(std::move(loss)), flip_(flip), n_(data.size()),
      p_(data.predictor_count()) {
    if (model.predictor_count() != data.predictor_count())
        throw ContractError("objective: model expects " +
                            std::to_string(model.predictor_count()) +
                            " predictors, dataset has " +
                            std::to_string(data.predictor_count()));

    weights_ = rule.weights();
    npts_ = static_cast<int>(rule.points().size());
    midpoint_ = rule.scheme() == QuadScheme::Midpoint;
    const auto& pts = rule.points();

    y_inv_.resize(static_cast<std::size_t>(n_) * npts_);
    x_inv_at_.resize(static_cast<std::size_t>(n_) * p_ * npts_);
    x_inv_flip_.resize(static_cast<std::size_t>(n_) * p_ * npts_);
    for (int i = 0; i < n_; ++i) {
        const Observation& obs = data[i];
        for (int k = 0; k < npts_; ++k)
            y_inv_[static_cast<std::size_t>(i) * npts_ + k] = obs.y.inverse(pts[k]);
        for (int j = 0; j < p_; ++j) {
            const std::size_t base = (static_cast<std::size_t>(i) * p_ + j) * npts_;
            for (int k = 0; k < npts_; ++k) {
                x_inv_at_[base + k] = obs.x[j].inverse(pts[k]);
                x_inv_flip_[base + k] = obs.x[j].inverse(1.0 - pts[k]);
            }
        }
    }
}

double ObjectiveFunction::operator()(std::span<const double> beta) const {
    if (static_cast<int>(beta.size()) != model_.parameter_count())
        throw ContractError("objective: beta has dimension " +
                            std::to_string(beta.size()) + ", expected " +
                            std::to_string(model_.parameter_count()));
    if (!model_.feasible(beta))
        return std::numeric_limits<double>::infinity();

    const auto dirs = model_.directions(beta);
    const bool printed_gompertz =
        model_.kind() == ModelKind::Gompertz && flip_ == GompertzFlip::PrintedTheorem;

    // Per-predictor table choice for this beta: increasing arguments of g
    // take the 1-alpha table in the residual (alpha for the printed
    // Gompertz integrand).
    std::vector<const double*> xsrc(static_cast<std::size_t>(p_));
    std::vector<double> xbuf(static_cast<std::size_t>(p_));

    double total = 0.0;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < p_; ++j) {
            const std::size_t base = (static_cast<std::size_t>(i) * p_ + j) * npts_;
            const bool use_flip = printed_gompertz
                                      ? dirs[j] != Direction::Increasing
                                      : dirs[j] == Direction::Increasing;
            xsrc[j] = (use_flip ? x_inv_flip_.data() : x_inv_at_.data()) + base;
        }
        const double* yrow = y_inv_.data() + static_cast<std::size_t>(i) * npts_;

        // Midpoint accumulates raw values and divides once, matching
        // integrate(); weighted accumulation is the gauss path.
        double acc = 0.0;
        if (model_.kind() == ModelKind::Linear) {
            for (int k = 0; k < npts_; ++k) {
                double g = beta[0];
                for (int j = 0; j < p_; ++j) g += beta[j + 1] * xsrc[j][k];
                acc += (midpoint_ ? 1.0 : weights_[k]) * loss_(yrow[k] - g);
            }
        } else {
            for (int k = 0; k < npts_; ++k) {
                for (int j = 0; j < p_; ++j) xbuf[j] = xsrc[j][k];
                acc += (midpoint_ ? 1.0 : weights_[k]) * loss_(yrow[k] - model_.eval(xbuf, beta));
            }
        }
        if (midpoint_) acc /= npts_;
        if (std::isnan(acc))
            throw NumericError("objective produced NaN at observation " +
                               std::to_string(i + 1));
        total += acc;
        if (std::isinf(total)) return std::numeric_limits<double>::infinity();
    }
    return total;
}

ObjectiveFunction objective(const Dataset& data, const ModelSpec& model,
                            const Loss& loss, const QuadratureRule& rule,
                            GompertzFlip flip) {
    return ObjectiveFunction(data, model, loss, rule, flip);
}

namespace {

// integral_0^1 |c + d*alpha| d(alpha), split at the interior sign change.
double abs_affine_integral(double c, double d) {
    if (d == 0.0) return std::abs(c);
    const double whole = c + 0.5 * d;
    const double astar = -c / d;
    if (astar <= 0.0 || astar >= 1.0) return std::abs(whole);
    const double head = c * astar + 0.5 * d * astar * astar;
    return std::abs(head) + std::abs(whole - head);
}

// Affine inverse (c0 + c1*alpha) of a linear or point distribution.
void affine_inverse(const RegularDistribution& d, double& c0, double& c1,
                    const char* role, int index) {
    switch (d.kind()) {
    case DistKind::Linear:
        c0 = d.lower();
        c1 = d.upper() - d.lower();
        return;
    case DistKind::Point:
        c0 = d.value();
        c1 = 0.0;
        return;
    default:
        throw ContractError(std::string("exact_linear_lad_objective: ") + role +
                            " of observation " + std::to_string(index + 1) +
                            " is not linear or point");
    }
}

} // namespace

double exact_linear_lad_objective(const Dataset& data, std::span<const double> beta) {
    if (static_cast<int>(beta.size()) != data.predictor_count() + 1)
        throw ContractError("exact_linear_lad_objective: beta must have p+1 entries");

    double total = 0.0;
    for (int i = 0; i < data.size(); ++i) {
        const Observation& obs = data[i];
        double c, dslope;
        affine_inverse(obs.y, c, dslope, "response", i);
        c -= beta[0];
        for (int j = 0; j < data.predictor_count(); ++j) {
            double x0, x1;
            affine_inverse(obs.x[j], x0, x1, "predictor", i);
            const double bj = beta[j + 1];
            if (bj >= 0.0) {
                // g increasing in x_j: inverse enters at 1-alpha.
                c -= bj * (x0 + x1);
                dslope += bj * x1;
            } else {
                c -= bj * x0;
                dslope -= bj * x1;
            }
        }
        total += abs_affine_integral(c, dslope);
    }
    return total;
}

double predict_crisp(const ModelSpec& model, std::span<const double> beta,
                     std::span<const double> x) {
    if (static_cast<int>(x.size()) != model.predictor_count())
        throw ContractError("predict_crisp: predictor count mismatch");
    if (!model.feasible(beta))
        throw ConstraintError("predict_crisp: beta violates the model constraints");
    return model.eval(x, beta);
}

} // namespace uregress
