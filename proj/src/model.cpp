#include "uregress/model.hpp"

#include "uregress/errors.hpp"

#include <cmath>
#include <utility>

namespace uregress {

ModelSpec::ModelSpec(ModelKind kind, std::string name, int predictors,
                     int parameters, std::vector<std::optional<double>> lower_bounds)
    : kind_(kind), name_(std::move(name)), predictors_(predictors),
      parameters_(parameters), lower_bounds_(std::move(lower_bounds)) {}

ModelSpec ModelSpec::linear(int predictors) {
    if (predictors < 1) throw ValidationError("linear model requires predictors >= 1");
    ModelSpec m(ModelKind::Linear, "linear", predictors, predictors + 1,
                std::vector<std::optional<double>>(predictors + 1, std::nullopt));
    m.eval_ = [](std::span<const double> x, std::span<const double> beta) {
        double acc = beta[0];
        for (std::size_t j = 0; j < x.size(); ++j) acc += beta[j + 1] * x[j];
        return acc;
    };
    m.directions_ = [](std::span<const double> beta) {
        std::vector<Direction> d(beta.size() - 1);
        for (std::size_t j = 0; j + 1 < beta.size(); ++j)
            d[j] = beta[j + 1] >= 0.0 ? Direction::Increasing : Direction::Decreasing;
        return d;
    };
    return m;
}

ModelSpec ModelSpec::michaelis_menten() {
    ModelSpec m(ModelKind::MichaelisMenten, "mm", 1, 2,
                {std::optional<double>(0.0), std::optional<double>(0.0)});
    m.eval_ = [](std::span<const double> x, std::span<const double> beta) {
        return beta[0] * x[0] / (beta[1] + x[0]);
    };
    m.directions_ = [](std::span<const double>) {
        return std::vector<Direction>{Direction::Increasing};
    };
    return m;
}

ModelSpec ModelSpec::gompertz() {
    ModelSpec m(ModelKind::Gompertz, "gompertz", 1, 3,
                {std::optional<double>(0.0), std::optional<double>(0.0),
                 std::optional<double>(0.0)});
    m.eval_ = [](std::span<const double> x, std::span<const double> beta) {
        return beta[0] * std::exp(-beta[1] * std::exp(-beta[2] * x[0]));
    };
    m.directions_ = [](std::span<const double>) {
        return std::vector<Direction>{Direction::Increasing};
    };
    return m;
}

ModelSpec ModelSpec::custom(std::string name, int predictors, int parameters,
                            EvalFn g, DirectionsFn directions,
                            std::vector<std::optional<double>> lower_bounds) {
    if (predictors < 1 || parameters < 1)
        throw ValidationError("custom model requires positive dimensions");
    if (lower_bounds.empty())
        lower_bounds.assign(parameters, std::nullopt);
    if (static_cast<int>(lower_bounds.size()) != parameters)
        throw ValidationError("custom model: one lower bound entry per parameter");
    if (!g || !directions)
        throw ValidationError("custom model requires g and a direction resolver");
    ModelSpec m(ModelKind::Custom, std::move(name), predictors, parameters,
                std::move(lower_bounds));
    m.eval_ = std::move(g);
    m.directions_ = std::move(directions);
    return m;
}

bool ModelSpec::feasible(std::span<const double> beta) const {
    if (static_cast<int>(beta.size()) != parameters_) return false;
    for (int j = 0; j < parameters_; ++j) {
        if (!std::isfinite(beta[j])) return false;
        if (lower_bounds_[j] && !(beta[j] > *lower_bounds_[j])) return false;
    }
    return true;
}

double ModelSpec::eval(std::span<const double> x, std::span<const double> beta) const {
    return eval_(x, beta);
}

std::vector<Direction> ModelSpec::directions(std::span<const double> beta) const {
    auto d = directions_(beta);
    if (static_cast<int>(d.size()) != predictors_)
        throw ContractError("model direction resolver returned the wrong arity");
    return d;
}

Loss Loss::lad() { return Loss(Kind::Lad, "lad", {}); }

Loss Loss::ls() { return Loss(Kind::Ls, "ls", {}); }

Loss Loss::custom(std::string name, std::function<double(double)> rho) {
    if (!rho) throw ValidationError("custom loss requires a function");
    if (rho(0.0) != 0.0)
        throw ValidationError("loss property violated: rho(0) must be 0");
    double prev = 0.0;
    for (int k = 1; k <= 64; ++k) {
        const double r = 0.25 * k;
        const double v = rho(r);
        if (!(v >= 0.0) || !std::isfinite(v))
            throw ValidationError("loss property violated: rho must be finite and nonnegative");
        if (std::abs(v - rho(-r)) > 1e-12 * std::max(1.0, std::abs(v)))
            throw ValidationError("loss property violated: rho must be even");
        if (v < prev - 1e-12)
            throw ValidationError("loss property violated: rho must be nondecreasing in |r|");
        prev = v;
    }
    return Loss(Kind::Custom, std::move(name), std::move(rho));
}

} // namespace uregress
