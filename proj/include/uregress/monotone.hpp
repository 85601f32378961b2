#pragma once

#include "uregress/udist.hpp"

#include <functional>
#include <span>
#include <vector>

namespace uregress {

class ModelSpec; // model.hpp

enum class Direction { Increasing, Decreasing };

/// One entry per function argument; the function must be strictly monotone
/// in each argument over the relevant domain, in the declared direction.
struct MonotoneSignature {
    std::vector<Direction> directions;
};

/// Which integrand the Gompertz residual uses. GeneralRule applies the
/// computable-form flip (x inverse at 1-alpha, since the model is increasing
/// in x); PrintedTheorem keeps the x inverse at alpha.
enum class GompertzFlip { GeneralRule, PrintedTheorem };

/// Inverse uncertainty distribution of a composed uncertain variable,
/// F^-1(alpha). Nondecreasing in alpha whenever the signature is correct.
class CompositeInverse {
public:
    using Fn = std::function<double(double)>;

    explicit CompositeInverse(Fn fn) : fn_(std::move(fn)) {}

    double operator()(double alpha) const { return fn_(alpha); }

private:
    Fn fn_;
};

/// Inverse distribution of f(xi_1, ..., xi_k) for independent uncertain
/// variables: alpha -> f(F_1*(alpha), ..., F_k*(alpha)) where F_j* is the
/// j-th inverse at alpha for increasing arguments and at 1-alpha for
/// decreasing ones.
CompositeInverse compose_inverse(std::function<double(std::span<const double>)> f,
                                 std::vector<RegularDistribution> dists,
                                 MonotoneSignature sig);

/// Inverse distribution of the residual y - g(x_1,...,x_p | beta):
/// alpha -> Psi^-1(alpha) - g(...), where predictors in which g is
/// increasing enter at 1-alpha and decreasing ones at alpha. The model
/// resolves its directions at beta (linear: sign of each slope, with the
/// beta_j = 0 tie on the >= 0 branch). ConstraintError if beta violates the
/// model's constraints.
CompositeInverse residual_inverse(const RegularDistribution& y,
                                  std::vector<RegularDistribution> xs,
                                  const ModelSpec& model,
                                  std::vector<double> beta,
                                  GompertzFlip flip = GompertzFlip::GeneralRule);

/// Distribution value of a composed variable at x: the alpha with
/// inv(alpha) = x, clamped to [0,1]; bisection on alpha to 1e-12.
double composite_cdf(const CompositeInverse& inv, double x);

} // namespace uregress
