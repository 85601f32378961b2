#pragma once

#include "uregress/regress.hpp"

namespace uregress::fixtures {

/// The 15-observation linear-interval dataset used by the worked example
/// (response and single predictor, all linear width-1 intervals).
Dataset table1();

/// The simulated y = 10 + 2x datasets (y width 2, x width 1). Model 1 is
/// clean; model 2 carries predictor errors in observations 2 and 9; model 3
/// in observations 3 and 10.
Dataset table2_model(int j);

/// table2_model(j) with the 1-based observations in `drop` removed.
Dataset table2_model_without(int j, const std::vector<int>& drop);

} // namespace uregress::fixtures
