#include "uregress/dataset_io.hpp"

#include "uregress/errors.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace uregress {

using nlohmann::json;

namespace {

double require_number(const json& j, const char* field, const std::string& where) {
    if (!j.contains(field) || !j[field].is_number())
        throw ValidationError(where + ": missing or non-numeric field \"" + field + "\"");
    return j[field].get<double>();
}

RegularDistribution dist_from_json_at(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("dist") || !j["dist"].is_string())
        throw ValidationError(where + ": distribution literal must be an object with a \"dist\" tag");
    const std::string kind = j["dist"].get<std::string>();
    try {
        if (kind == "linear")
            return RegularDistribution::linear(require_number(j, "a", where),
                                               require_number(j, "b", where));
        if (kind == "normal")
            return RegularDistribution::normal(require_number(j, "e", where),
                                               require_number(j, "sigma", where));
        if (kind == "point")
            return RegularDistribution::point(require_number(j, "c", where));
    } catch (const ValidationError& e) {
        throw ValidationError(where + ": " + e.what());
    }
    throw ValidationError(where + ": unknown distribution kind \"" + kind + "\"");
}

} // namespace

json dist_to_json(const RegularDistribution& d) {
    switch (d.kind()) {
    case DistKind::Linear:
        return json{{"dist", "linear"}, {"a", d.lower()}, {"b", d.upper()}};
    case DistKind::Normal:
        return json{{"dist", "normal"}, {"e", d.location()}, {"sigma", d.scale()}};
    default:
        return json{{"dist", "point"}, {"c", d.value()}};
    }
}

RegularDistribution dist_from_json(const json& j) {
    return dist_from_json_at(j, "distribution literal");
}

json dataset_to_json(const Dataset& d) {
    json obs = json::array();
    for (int i = 0; i < d.size(); ++i) {
        json xs = json::array();
        for (const auto& x : d[i].x) xs.push_back(dist_to_json(x));
        obs.push_back(json{{"y", dist_to_json(d[i].y)}, {"x", xs}});
    }
    return json{{"predictors", d.predictor_count()}, {"observations", obs}};
}

Dataset dataset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("predictors") || !j.contains("observations"))
        throw ValidationError("dataset document requires \"predictors\" and \"observations\"");
    if (!j["predictors"].is_number_integer())
        throw ValidationError("\"predictors\" must be an integer");
    const int p = j["predictors"].get<int>();
    if (!j["observations"].is_array() || j["observations"].empty())
        throw ValidationError("\"observations\" must be a non-empty array");

    std::vector<Observation> obs;
    obs.reserve(j["observations"].size());
    int index = 0;
    for (const auto& rec : j["observations"]) {
        ++index;
        const std::string where = "observation " + std::to_string(index);
        if (!rec.is_object() || !rec.contains("y") || !rec.contains("x"))
            throw ValidationError(where + ": requires fields \"y\" and \"x\"");
        Observation o{dist_from_json_at(rec["y"], where + ", field y"), {}};
        if (!rec["x"].is_array())
            throw ValidationError(where + ": \"x\" must be an array");
        if (static_cast<int>(rec["x"].size()) != p)
            throw ValidationError(where + ": has " + std::to_string(rec["x"].size()) +
                                  " predictors, expected " + std::to_string(p));
        int jx = 0;
        for (const auto& lit : rec["x"]) {
            ++jx;
            o.x.push_back(dist_from_json_at(lit, where + ", field x[" + std::to_string(jx) + "]"));
        }
        obs.push_back(std::move(o));
    }
    return Dataset(p, std::move(obs));
}

namespace {

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

} // namespace

Dataset parse_dataset(const std::string& path) {
    return dataset_from_json(parse_file(path));
}

Dataset parse_csv_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);

    auto split = [](const std::string& line) {
        std::vector<std::string> out;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) out.push_back(cell);
        return out;
    };

    std::string header;
    if (!std::getline(in, header))
        throw ParseError(path + ": empty file");
    const auto cols = split(header);
    if (cols.size() < 2 || cols.size() % 2 != 0 || cols[0] != "y_a" || cols[1] != "y_b")
        throw ParseError(path + ": header must be y_a,y_b,x1_a,x1_b,...");
    const int p = static_cast<int>(cols.size() / 2) - 1;

    auto bounds_to_dist = [](double a, double b, const std::string& where) {
        if (a == b) return RegularDistribution::point(a);
        try {
            return RegularDistribution::linear(a, b);
        } catch (const ValidationError& e) {
            throw ValidationError(where + ": " + e.what());
        }
    };

    std::vector<Observation> obs;
    std::string line;
    int index = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++index;
        const std::string where = "row " + std::to_string(index);
        const auto cells = split(line);
        if (cells.size() != cols.size())
            throw ParseError(path + ", " + where + ": expected " +
                             std::to_string(cols.size()) + " cells");
        std::vector<double> v(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
            try {
                v[c] = std::stod(cells[c]);
            } catch (const std::exception&) {
                throw ParseError(path + ", " + where + ": non-numeric cell \"" + cells[c] + "\"");
            }
        }
        Observation o{bounds_to_dist(v[0], v[1], where + ", y"), {}};
        for (int jx = 0; jx < p; ++jx)
            o.x.push_back(bounds_to_dist(v[2 + 2 * jx], v[3 + 2 * jx],
                                         where + ", x" + std::to_string(jx + 1)));
        obs.push_back(std::move(o));
    }
    if (obs.empty()) throw ParseError(path + ": no data rows");
    return Dataset(p, std::move(obs));
}

json fit_to_json(const FitFile& f) {
    json box = json::array();
    for (const auto& [lo, hi] : f.optimizer.init_box) box.push_back(json::array({lo, hi}));
    return json{{"model", f.model},
                {"loss", f.loss},
                {"beta", f.beta},
                {"objective_value", f.objective_value},
                {"e_hat", f.e_hat},
                {"sigma2_hat", f.sigma2_hat},
                {"converged", f.converged},
                {"quadrature",
                 {{"scheme", f.quad_scheme}, {"nodes", f.quad_nodes}, {"panels", f.quad_panels}}},
                {"optimizer",
                 {{"starts", f.optimizer.starts},
                  {"max_iters", f.optimizer.max_iters},
                  {"xtol", f.optimizer.xtol},
                  {"ftol", f.optimizer.ftol},
                  {"init_box", box}}},
                {"seed", f.seed}};
}

FitFile fit_from_json(const json& j) {
    FitFile f;
    try {
        f.model = j.at("model").get<std::string>();
        f.loss = j.at("loss").get<std::string>();
        f.beta = j.at("beta").get<std::vector<double>>();
        f.objective_value = j.at("objective_value").get<double>();
        f.e_hat = j.at("e_hat").get<double>();
        f.sigma2_hat = j.at("sigma2_hat").get<double>();
        f.converged = j.at("converged").get<bool>();
        const auto& q = j.at("quadrature");
        f.quad_scheme = q.at("scheme").get<std::string>();
        f.quad_nodes = q.at("nodes").get<int>();
        f.quad_panels = q.at("panels").get<int>();
        const auto& o = j.at("optimizer");
        f.optimizer.starts = o.at("starts").get<int>();
        f.optimizer.max_iters = o.at("max_iters").get<int>();
        f.optimizer.xtol = o.at("xtol").get<double>();
        f.optimizer.ftol = o.at("ftol").get<double>();
        for (const auto& iv : o.at("init_box"))
            f.optimizer.init_box.emplace_back(iv.at(0).get<double>(), iv.at(1).get<double>());
        f.seed = j.at("seed").get<std::uint64_t>();
        f.optimizer.seed = f.seed;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed fit file: ") + e.what());
    }
    return f;
}

FitFile parse_fit(const std::string& path) {
    return fit_from_json(parse_file(path));
}

} // namespace uregress
