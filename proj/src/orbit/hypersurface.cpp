#include "rfhkit/orbit/hypersurface.hpp"

#include <sstream>
#include <stdexcept>

namespace rfh::orbit {

using flow::Vec;

namespace {

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const double v = std::stod(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad number '" + item + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace

flow::HypersurfaceModel make_hypersurface(const std::string& spec, int n, double delta) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "sphere") return flow::build_defining_hamiltonian(flow::round_sphere(n), delta);
    if (kind == "ellipsoid") {
        const auto a = parse_list(args);
        if (static_cast<int>(a.size()) != n) throw std::invalid_argument("ellipsoid needs n weights");
        return flow::build_defining_hamiltonian(flow::ellipsoid(Eigen::Map<const Vec>(a.data(), n)), delta);
    }
    if (kind == "deformed") {
        const auto p = parse_list(args);
        if (p.size() != 1) throw std::invalid_argument("deformed takes one parameter");
        const double eps = p[0];
        if (std::abs(eps) >= 0.5) throw std::invalid_argument("deformation too large to stay star-shaped");
        auto rho = [eps, n](const Vec& u) {
            double s = 0;
            for (int j = 0; j < n; ++j) {
                const double a = u(j) * u(j) + u(j + n) * u(j + n);
                s += a * a;
            }
            return 1.0 + eps * s;
        };
        return flow::build_defining_hamiltonian(flow::radial_graph(n, rho, "deformed"), delta);
    }
    throw std::invalid_argument("unknown hypersurface '" + spec + "'");
}

}  // namespace rfh::orbit
