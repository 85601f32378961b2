#pragma once

#include "uregress/model.hpp"

#include <span>
#include <vector>

namespace uregress {

/// One imprecisely observed record: a response distribution plus p
/// predictor distributions, all independent.
struct Observation {
    RegularDistribution y;
    std::vector<RegularDistribution> x;

    bool operator==(const Observation&) const = default;
};

class Dataset {
public:
    /// Validates n >= 1 and that every record carries exactly `predictors`
    /// predictor distributions.
    Dataset(int predictors, std::vector<Observation> observations);

    int predictor_count() const { return predictors_; }
    int size() const { return static_cast<int>(observations_.size()); }
    const Observation& operator[](int i) const { return observations_[i]; }
    const std::vector<Observation>& observations() const { return observations_; }

    bool operator==(const Dataset&) const = default;

private:
    int predictors_;
    std::vector<Observation> observations_;
};

/// The fit objective as a single function of the parameter vector:
///   beta -> sum_i integral_0^1 rho(F_i^-1(alpha)) d(alpha)
/// with F_i^-1 the residual inverse of observation i at beta. Evaluations at
/// constraint-violating beta return +infinity. Per-observation inverse
/// tables are precomputed at the rule's nodes; terms are summed in
/// ascending observation order, nodes in ascending order.
class ObjectiveFunction {
public:
    ObjectiveFunction(const Dataset& data, const ModelSpec& model, Loss loss,
                      const QuadratureRule& rule,
                      GompertzFlip flip = GompertzFlip::GeneralRule);

    double operator()(std::span<const double> beta) const;

    int dimension() const { return model_.parameter_count(); }
    const ModelSpec& model() const { return model_; }
    const Loss& loss() const { return loss_; }

private:
    ModelSpec model_;
    Loss loss_;
    GompertzFlip flip_;
    int n_;
    int p_;
    int npts_;
    bool midpoint_;
    std::vector<double> weights_;
    std::vector<double> y_inv_;       // n x npts
    std::vector<double> x_inv_at_;    // n x p x npts, inverse at alpha
    std::vector<double> x_inv_flip_;  // n x p x npts, inverse at 1-alpha
};

/// Builds the LAD/LS objective. ContractError if the model's predictor
/// count does not match the dataset.
ObjectiveFunction objective(const Dataset& data, const ModelSpec& model,
                            const Loss& loss, const QuadratureRule& rule,
                            GompertzFlip flip = GompertzFlip::GeneralRule);

/// Closed-form LAD objective for the linear model on all-linear/point data.
/// Each residual inverse is affine, |c_i + d_i alpha|; segments are
/// integrated exactly (split at the interior sign change). Test oracle for
/// the quadrature path. ContractError on non-affine distributions or a
/// dimension mismatch.
double exact_linear_lad_objective(const Dataset& data,
                                  std::span<const double> beta);

/// g(x|beta) for crisp x; ConstraintError if beta violates the model's
/// constraints.
double predict_crisp(const ModelSpec& model, std::span<const double> beta,
                     std::span<const double> x);

} // namespace uregress
