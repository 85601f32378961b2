#pragma once

#include "uregress/optim.hpp"
#include "uregress/regress.hpp"

#include <nlohmann/json_fwd.hpp>
#include <string>

namespace uregress {

/// Distribution literal: {"dist":"linear","a":..,"b":..} |
/// {"dist":"normal","e":..,"sigma":..} | {"dist":"point","c":..}
nlohmann::json dist_to_json(const RegularDistribution& d);
RegularDistribution dist_from_json(const nlohmann::json& j);

/// Dataset document:
/// {"predictors": p, "observations": [{"y": <lit>, "x": [<lit>, ...]}, ...]}
nlohmann::json dataset_to_json(const Dataset& d);
Dataset dataset_from_json(const nlohmann::json& j);

/// Parses a UTF-8 JSON dataset file. ParseError carries the location for
/// malformed JSON; ValidationError names the observation and field for
/// invariant breaches.
Dataset parse_dataset(const std::string& path);

/// Convenience importer for all-linear data. Header names the columns
/// y_a,y_b,x1_a,x1_b,...; a row with equal bounds becomes a point value.
Dataset parse_csv_dataset(const std::string& path);

/// Serialized fit result.
struct FitFile {
    std::string model;
    std::string loss;
    std::vector<double> beta;
    double objective_value = 0.0;
    double e_hat = 0.0;
    double sigma2_hat = 0.0;
    bool converged = false;
    std::string quad_scheme = "midpoint";
    int quad_nodes = QuadratureRule::kDefaultNodes;
    int quad_panels = 1;
    OptimOptions optimizer;
    std::uint64_t seed = 42;
};

nlohmann::json fit_to_json(const FitFile& f);
FitFile fit_from_json(const nlohmann::json& j);
FitFile parse_fit(const std::string& path);

} // namespace uregress
