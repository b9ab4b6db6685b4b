#include "rfhkit/z2/complex_json.hpp"

#include <stdexcept>

namespace rfh::z2 {

using nlohmann::json;

namespace {

Gf2Matrix matrix_from_json(const json& rows, std::size_t expect_rows, std::size_t expect_cols) {
    if (!rows.is_array()) throw std::invalid_argument("matrix must be an array of rows");
    std::vector<std::vector<int>> data;
    for (const auto& r : rows) {
        std::vector<int> row;
        for (const auto& e : r) {
            const int v = e.get<int>();
            if (v != 0 && v != 1) throw std::invalid_argument("matrix entries must be 0 or 1");
            row.push_back(v);
        }
        data.push_back(std::move(row));
    }
    Gf2Matrix m = Gf2Matrix::from_rows(data, expect_cols);
    if (m.rows() != expect_rows || m.cols() != expect_cols)
        throw std::invalid_argument("matrix shape does not match the declared dimensions");
    return m;
}

}  // namespace

json to_json(const GradedComplexZ2& c) {
    json j;
    j["degrees"] = {c.lo(), c.hi()};
    json dims = json::array();
    for (int k = c.lo(); k <= c.hi(); ++k) dims.push_back(c.dim(k));
    j["dims"] = dims;
    json bd = json::object();
    for (const auto& [k, d] : c.boundaries()) bd[std::to_string(k)] = d.to_rows();
    j["boundaries"] = bd;
    json labels = json::object();
    for (int k = c.lo(); k <= c.hi(); ++k)
        if (!c.labels(k).empty()) labels[std::to_string(k)] = c.labels(k);
    j["labels"] = labels;
    return j;
}

GradedComplexZ2 complex_from_json(const json& j) {
    const auto deg = j.at("degrees").get<std::vector<int>>();
    if (deg.size() != 2 || deg[1] < deg[0]) throw std::invalid_argument("degrees must be [lo, hi] with lo <= hi");
    const auto dims = j.at("dims").get<std::vector<std::size_t>>();
    if (dims.size() != static_cast<std::size_t>(deg[1] - deg[0] + 1))
        throw std::invalid_argument("dims length does not match the degree range");
    GradedComplexZ2 c(deg[0], dims);
    if (j.contains("boundaries")) {
        for (const auto& [key, rows] : j.at("boundaries").items()) {
            const int k = std::stoi(key);
            c.set_boundary(k, matrix_from_json(rows, c.dim(k - 1), c.dim(k)));
        }
    }
    if (j.contains("labels")) {
        for (const auto& [key, names] : j.at("labels").items())
            c.set_labels(std::stoi(key), names.get<std::vector<std::string>>());
    }
    return c;
}

json to_json(const PeriodicComplexZ2& c) {
    return json{{"period_shift", c.period_shift}, {"block", to_json(c.block)}, {"linking", c.linking.to_rows()}};
}

PeriodicComplexZ2 periodic_from_json(const json& j) {
    PeriodicComplexZ2 c;
    c.period_shift = j.at("period_shift").get<int>();
    c.block = complex_from_json(j.at("block"));
    c.linking = matrix_from_json(j.at("linking"), c.block.dim(c.block.hi()), c.block.dim(c.block.lo()));
    validate_periodic(c);
    return c;
}

json dims_to_json(const DegreeDims& d) {
    json j = json::object();
    for (const auto& [k, v] : d) j[std::to_string(k)] = v;
    return j;
}

}  // namespace rfh::z2
