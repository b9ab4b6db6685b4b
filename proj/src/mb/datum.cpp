#include "rfhkit/mb/datum.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rfh::mb {

int MorseBottDatum::degree(std::size_t point) const {
    const MorsePoint& p = points.at(point);
    return components.at(p.comp).offset + p.h_index;
}

std::string MorseBottDatum::full_label(std::size_t point) const {
    const MorsePoint& p = points.at(point);
    return components.at(p.comp).label + ":" + p.label;
}

std::size_t MorseBottDatum::find(const std::string& label) const {
    std::size_t hit = points.size();
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (full_label(i) == label) return i;
        if (points[i].label == label) {
            if (hit != points.size()) throw std::invalid_argument("ambiguous point label '" + label + "'");
            hit = i;
        }
    }
    if (hit == points.size()) throw std::invalid_argument("unknown point '" + label + "'");
    return hit;
}

z2::GradedComplexZ2 build_complex(const MorseBottDatum& d) {
    if (d.points.empty()) return {};
    for (const MorsePoint& p : d.points) {
        if (p.comp >= d.components.size()) throw std::invalid_argument("point refers to a missing component");
        if (p.h_index < 0) throw std::invalid_argument("negative h-index");
    }
    int lo = d.degree(0), hi = lo;
    for (std::size_t i = 0; i < d.points.size(); ++i) {
        lo = std::min(lo, d.degree(i));
        hi = std::max(hi, d.degree(i));
    }
    // position of each point inside its degree
    std::vector<std::size_t> slot(d.points.size());
    std::vector<std::size_t> dims(static_cast<std::size_t>(hi - lo + 1), 0);
    std::map<int, std::vector<std::string>> labels;
    for (std::size_t i = 0; i < d.points.size(); ++i) {
        const int k = d.degree(i);
        slot[i] = dims[static_cast<std::size_t>(k - lo)]++;
        labels[k].push_back(d.full_label(i));
    }
    z2::GradedComplexZ2 c(lo, dims);
    for (auto& [k, names] : labels) c.set_labels(k, names);
    std::map<int, z2::Gf2Matrix> bd;
    for (int k = lo + 1; k <= hi; ++k) bd[k] = z2::Gf2Matrix(c.dim(k - 1), c.dim(k));
    for (const Cascade& cs : d.cascades) {
        if (cs.from >= d.points.size() || cs.to >= d.points.size())
            throw std::invalid_argument("cascade refers to a missing point");
        if ((cs.parity & 1) == 0) continue;
        const int k = d.degree(cs.from);
        if (d.degree(cs.to) != k - 1)
            throw std::invalid_argument("cascade " + d.full_label(cs.from) + " -> " + d.full_label(cs.to) +
                                        " does not drop the degree by one");
        if (d.components[d.points[cs.from].comp].f < d.components[d.points[cs.to].comp].f)
            throw std::invalid_argument("cascade " + d.full_label(cs.from) + " -> " + d.full_label(cs.to) +
                                        " increases f");
        bd[k].flip(slot[cs.to], slot[cs.from]);
    }
    for (auto& [k, m] : bd) c.set_boundary(k, std::move(m));
    z2::verify_complex(c);
    return c;
}

MorseBottDatum teapot_datum() {
    MorseBottDatum d;
    d.components = {{"top", 3.0, 2}, {"ridge", 2.0, 1}, {"saddle", 1.5, 1}, {"outer", 0.0, 0}, {"inner", 0.5, 0}};
    d.points = {{0, "max", 0}, {2, "pt", 0}, {1, "min", 0}, {1, "max", 1}, {3, "min", 0}, {4, "min", 0}};
    // ridge:max -> saddle and top -> saddle once each; the ridge's two flow lines down to its
    // own h-minimum cancel; ridge:min drains into both basins; the saddle drains twice into
    // the outer basin.
    d.cascades = {{3, 1, 1}, {0, 1, 1}, {3, 2, 0}, {2, 4, 1}, {2, 5, 1}, {1, 4, 0}};
    return d;
}

MorseBottDatum sphere_datum(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    MorseBottDatum d;
    for (int j = 1; j <= n; ++j) {
        d.components.push_back({"C" + std::to_string(j), static_cast<double>(j), 2 * (j - 1)});
        d.points.push_back({static_cast<std::size_t>(j - 1), "min", 0});
        d.points.push_back({static_cast<std::size_t>(j - 1), "max", 1});
    }
    for (int j = 0; j < n; ++j) {
        d.cascades.push_back({static_cast<std::size_t>(2 * j + 1), static_cast<std::size_t>(2 * j), 0});
        if (j + 1 < n)  // min of circle j+2 to max of circle j+1: one cascade
            d.cascades.push_back({static_cast<std::size_t>(2 * j + 2), static_cast<std::size_t>(2 * j + 1), 1});
    }
    return d;
}

MorseBottDatum single_minimum_datum() {
    MorseBottDatum d;
    d.components = {{"p", 0.0, 0}};
    d.points = {{0, "min", 0}};
    return d;
}

MorseBottDatum datum_from_json(const nlohmann::json& j) {
    MorseBottDatum d;
    for (const auto& c : j.at("components"))
        d.components.push_back({c.at("label").get<std::string>(), c.at("f").get<double>(), c.at("offset").get<int>()});
    for (const auto& p : j.at("points"))
        d.points.push_back({p.at("comp").get<std::size_t>(), p.at("label").get<std::string>(), p.at("h_index").get<int>()});
    if (j.contains("cascades"))
        for (const auto& c : j.at("cascades"))
            d.cascades.push_back({c.at("from").get<std::size_t>(), c.at("to").get<std::size_t>(), c.at("parity").get<int>()});
    return d;
}

nlohmann::json to_json(const MorseBottDatum& d) {
    nlohmann::json j;
    j["components"] = nlohmann::json::array();
    for (const auto& c : d.components) j["components"].push_back({{"label", c.label}, {"f", c.f}, {"offset", c.offset}});
    j["points"] = nlohmann::json::array();
    for (const auto& p : d.points) j["points"].push_back({{"comp", p.comp}, {"label", p.label}, {"h_index", p.h_index}});
    j["cascades"] = nlohmann::json::array();
    for (const auto& c : d.cascades) j["cascades"].push_back({{"from", c.from}, {"to", c.to}, {"parity", c.parity}});
    return j;
}

std::string markdown_table(const z2::DegreeDims& dims) {
    std::ostringstream os;
    os << "| degree | dim |\n|---|---|\n";
    for (const auto& [k, v] : dims) os << "| " << k << " | " << v << " |\n";
    return os.str();
}

}  // namespace rfh::mb
