#pragma once

#include "uregress/infer.hpp"
#include "uregress/optim.hpp"

namespace uregress {

struct FitOutcome {
    ParamEstimate estimate;
    ErrorMoments moments;
};

/// Full fit pipeline: multi-start minimization of the selected objective,
/// a polish pass from the best point, then error-moment estimation at the
/// fitted parameters.
FitOutcome fit_dataset(const Dataset& data, const ModelSpec& model,
                       const Loss& loss, const QuadratureRule& rule,
                       const OptimOptions& opts = {},
                       GompertzFlip flip = GompertzFlip::GeneralRule);

} // namespace uregress
