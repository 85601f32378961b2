#pragma once

#include "uregress/monotone.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace uregress {

enum class ModelKind { Linear, MichaelisMenten, Gompertz, Custom };

/// Regression function g with per-argument monotonicity information and an
/// open-box constraint set (exclusive per-parameter lower bounds).
///
///   linear(p):        g = b0 + sum_j b_j x_j,   p+1 parameters, no bounds
///   michaelis_menten: g = b1 x / (b2 + x),      b1, b2 > 0
///   gompertz:         g = b1 exp(-b2 exp(-b3 x)), b1, b2, b3 > 0
class ModelSpec {
public:
    using EvalFn = std::function<double(std::span<const double> x,
                                        std::span<const double> beta)>;
    using DirectionsFn =
        std::function<std::vector<Direction>(std::span<const double> beta)>;

    static ModelSpec linear(int predictors);
    static ModelSpec michaelis_menten();
    static ModelSpec gompertz();

    /// Custom strictly monotone model. Directions are declared, not verified
    /// symbolically; residual_inverse grid-checks them in debug builds.
    static ModelSpec custom(std::string name, int predictors, int parameters,
                            EvalFn g, DirectionsFn directions,
                            std::vector<std::optional<double>> lower_bounds = {});

    ModelKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    int predictor_count() const { return predictors_; }
    int parameter_count() const { return parameters_; }

    /// Exclusive lower bounds; empty optional = unconstrained.
    const std::vector<std::optional<double>>& lower_bounds() const {
        return lower_bounds_;
    }

    bool feasible(std::span<const double> beta) const;

    /// g(x|beta); no constraint check (see predict_crisp for the checked
    /// entry point).
    double eval(std::span<const double> x, std::span<const double> beta) const;

    /// Monotonicity of g in each predictor, resolved at beta.
    std::vector<Direction> directions(std::span<const double> beta) const;

private:
    ModelSpec(ModelKind kind, std::string name, int predictors, int parameters,
              std::vector<std::optional<double>> lower_bounds);

    ModelKind kind_;
    std::string name_;
    int predictors_;
    int parameters_;
    std::vector<std::optional<double>> lower_bounds_;
    EvalFn eval_;
    DirectionsFn directions_;
};

/// Loss rho applied to the residual inverse inside the objective integral.
/// Any loss must satisfy rho(0) = 0, rho even, rho nondecreasing in |r|;
/// custom losses are checked on a grid at registration.
class Loss {
public:
    enum class Kind { Lad, Ls, Custom };

    static Loss lad();
    static Loss ls();
    static Loss custom(std::string name, std::function<double(double)> rho);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }

    double operator()(double r) const {
        switch (kind_) {
        case Kind::Lad: return r < 0 ? -r : r;
        case Kind::Ls: return r * r;
        default: return rho_(r);
        }
    }

private:
    Loss(Kind kind, std::string name, std::function<double(double)> rho)
        : kind_(kind), name_(std::move(name)), rho_(std::move(rho)) {}

    Kind kind_;
    std::string name_;
    std::function<double(double)> rho_;
};

} // namespace uregress
