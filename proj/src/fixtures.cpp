#include "uregress/fixtures.hpp"

#include "uregress/errors.hpp"

#include <algorithm>

namespace uregress::fixtures {

namespace {

Observation iv(double ya, double yb, double xa, double xb) {
    return Observation{RegularDistribution::linear(ya, yb),
                       {RegularDistribution::linear(xa, xb)}};
}

} // namespace

Dataset table1() {
    return Dataset(1, {
                          iv(2, 3, 0, 1),
                          iv(23, 24, 7, 8),
                          iv(25, 26, 7, 8),
                          iv(7, 8, 1, 2),
                          iv(13, 14, 3, 4),
                          iv(20, 21, 6, 7),
                          iv(31, 32, 9, 10),
                          iv(46, 47, 15, 16),
                          iv(56, 57, 18, 19),
                          iv(74, 75, 24, 25),
                          iv(92, 93, 30, 31),
                          iv(95, 96, 31, 32),
                          iv(38, 39, 12, 13),
                          iv(59, 60, 19, 20),
                          iv(82, 83, 27, 28),
                      });
}

Dataset table2_model(int j) {
    if (j < 1 || j > 3) throw ContractError("table2_model: j must be 1, 2, or 3");
    static const double ya[10] = {10, 14, 18, 22, 26, 30, 34, 38, 42, 46};
    static const double xa[3][10] = {
        {0, 2, 4, 6, 8, 10, 12, 14, 16, 18},
        {0, 5, 4, 6, 8, 10, 12, 14, 6, 18},
        {0, 2, 20, 6, 8, 10, 12, 14, 16, 8},
    };
    std::vector<Observation> obs;
    obs.reserve(10);
    for (int i = 0; i < 10; ++i)
        obs.push_back(iv(ya[i], ya[i] + 2, xa[j - 1][i], xa[j - 1][i] + 1));
    return Dataset(1, std::move(obs));
}

Dataset table2_model_without(int j, const std::vector<int>& drop) {
    const Dataset full = table2_model(j);
    std::vector<Observation> obs;
    for (int i = 0; i < full.size(); ++i) {
        if (std::find(drop.begin(), drop.end(), i + 1) == drop.end())
            obs.push_back(full[i]);
    }
    return Dataset(1, std::move(obs));
}

} // namespace uregress::fixtures
