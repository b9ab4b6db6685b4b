#include "rfhkit/symp/cz_index.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rfh::symp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Souriau map of Gr(M) in (R^2n x R^2n, -omega_0 + omega_0), identified with C^{2n} by
// conjugating the first factor. Returns W W^T for a unitary frame W of the graph.
CMat souriau_graph(const Mat& m) {
    const Eigen::Index n = m.rows() / 2, N = m.rows();
    CMat z(N, N);
    for (Eigen::Index j = 0; j < N; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            const double ex = (i == j) ? 1.0 : 0.0, ey = (i + n == j) ? 1.0 : 0.0;
            z(i, j) = {ex, -ey};
            z(i + n, j) = {m(i, j), m(i + n, j)};
        }
    }
    const Mat gram = (z.adjoint() * z).real();
    return z * gram.inverse().cast<std::complex<double>>() * z.transpose();
}

struct GraphTracker {
    CMat diag_inv;
    explicit GraphTracker(Eigen::Index dim) { diag_inv = souriau_graph(Mat::Identity(dim, dim)).adjoint(); }
    CMat unitary(const Mat& m) const { return diag_inv * souriau_graph(m); }
};

CMat polar_unitary(const Mat& m) { return complexify(unitary_part(m)); }

double op_norm(const CMat& a) { return Eigen::JacobiSVD<CMat>(a).singularValues()(0); }

void validate(const SymplecticPath& p, const CzOptions& opt, bool from_identity) {
    if (p.samples.size() < 2) throw std::invalid_argument("path needs at least two samples");
    for (std::size_t i = 0; i < p.samples.size(); ++i) {
        const Mat& s = p.samples[i];
        if (s.rows() != 2 * p.n || s.cols() != 2 * p.n)
            throw std::invalid_argument("sample " + std::to_string(i) + " has the wrong size");
        if (!check_symplectic(s, opt.tol_symp))
            throw std::invalid_argument("sample " + std::to_string(i) + " is not symplectic");
    }
    if (from_identity && (p.samples.front() - Mat::Identity(2 * p.n, 2 * p.n)).cwiseAbs().maxCoeff() > 1e-8)
        throw std::invalid_argument("path must start at the identity");
}

// Continuous change of arg det along the unitary images of the samples. Each step is the sum
// of the principal eigenvalue angles of U_i U_{i-1}^*, which is exact as long as consecutive
// images stay within step_bound of each other.
double unwrap(const SymplecticPath& p, const std::function<CMat(const Mat&)>& to_unitary, double step_bound) {
    double total = 0.0;
    CMat prev = to_unitary(p.samples.front());
    for (std::size_t i = 1; i < p.samples.size(); ++i) {
        const CMat next = to_unitary(p.samples[i]);
        if (op_norm(next - prev) > step_bound)
            throw std::invalid_argument("path resolution too coarse between samples " + std::to_string(i - 1) +
                                        " and " + std::to_string(i));
        Eigen::ComplexEigenSolver<CMat> es(next * prev.adjoint(), false);
        for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) total += std::arg(es.eigenvalues()(k));
        prev = next;
    }
    return total;
}

// Eigenvalue angles of the graph unitary in (0, 2 pi); throws if one sits at 0.
double endpoint_angle_sum(const CMat& u, const char* which) {
    Eigen::ComplexEigenSolver<CMat> es(u);
    double sum = 0.0;
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
        double a = std::arg(es.eigenvalues()(i));
        if (a < 0) a += kTwoPi;
        if (a < 1e-9 || a > kTwoPi - 1e-9)
            throw std::invalid_argument(std::string("degenerate ") + which + ": eigenvalue 1 (pass the degenerate flag)");
        sum += a;
    }
    return sum;
}

int to_integer(double v) {
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-6) throw std::runtime_error("index computation did not return an integer");
    return static_cast<int>(r);
}

int cz_nondegenerate(const SymplecticPath& p, double step_bound) {
    GraphTracker g(2 * p.n);
    const double winding = unwrap(p, [&](const Mat& m) { return g.unitary(m); }, step_bound);
    const double end = endpoint_angle_sum(g.unitary(p.samples.back()), "endpoint");
    return to_integer((winding - end) / kTwoPi + p.n);
}

SymplecticPath perturbed(const SymplecticPath& p, double eps) {
    SymplecticPath q = p;
    const Mat j = standard_j(p.n);
    const Mat id = Mat::Identity(2 * p.n, 2 * p.n);
    const double last = static_cast<double>(p.samples.size() - 1);
    for (std::size_t i = 0; i < p.samples.size(); ++i) {
        const double a = eps * static_cast<double>(i) / last;
        q.samples[i] = p.samples[i] * (std::cos(a) * id - std::sin(a) * j);
    }
    return q;
}

}  // namespace

double path_step(const Mat& a, const Mat& b) {
    const GraphTracker g(a.rows());
    return std::max(op_norm(g.unitary(b) - g.unitary(a)), op_norm(polar_unitary(b) - polar_unitary(a)));
}

SymplecticPath SymplecticPath::sample(int n, const std::function<Mat(double)>& f, int steps) {
    if (steps < 1) throw std::invalid_argument("need at least one step");
    SymplecticPath p;
    p.n = n;
    for (int i = 0; i <= steps; ++i) p.samples.push_back(f(static_cast<double>(i) / steps));
    return p;
}

int cz_index(const SymplecticPath& p, const CzOptions& opt) {
    validate(p, opt, true);
    if (!opt.degenerate) return cz_nondegenerate(p, opt.step_bound);
    const int a = cz_nondegenerate(perturbed(p, opt.epsilon), opt.step_bound);
    const int b = cz_nondegenerate(perturbed(p, opt.epsilon / 2), opt.step_bound);
    if (a != b) throw std::runtime_error("degenerate-endpoint limit is not stable in epsilon");
    return a;
}

int cz_segment_index(const SymplecticPath& p, const CzOptions& opt) {
    validate(p, opt, false);
    GraphTracker g(2 * p.n);
    const double winding = unwrap(p, [&](const Mat& m) { return g.unitary(m); }, opt.step_bound);
    const double start = endpoint_angle_sum(g.unitary(p.samples.front()), "start point");
    const double end = endpoint_angle_sum(g.unitary(p.samples.back()), "endpoint");
    return to_integer((winding - end + start) / kTwoPi);
}

int maslov_loop_index(const SymplecticPath& loop, const CzOptions& opt) {
    validate(loop, opt, false);
    if ((loop.samples.front() - loop.samples.back()).cwiseAbs().maxCoeff() > 1e-8)
        throw std::invalid_argument("path is not a loop");
    const double winding = unwrap(loop, polar_unitary, opt.step_bound);
    return to_integer(winding / kTwoPi);
}

int relative_cz(const SymplecticPath& p0, const SymplecticPath& p1, const CzOptions& opt) {
    return cz_index(p1, opt) - cz_index(p0, opt);
}

SymplecticPath concatenate(const SymplecticPath& p, const SymplecticPath& q) {
    if (p.n != q.n) throw std::invalid_argument("paths live in different dimensions");
    if ((p.samples.back() - q.samples.front()).cwiseAbs().maxCoeff() > 1e-8)
        throw std::invalid_argument("second path must start where the first ends");
    SymplecticPath out = p;
    out.samples.insert(out.samples.end(), q.samples.begin() + 1, q.samples.end());
    return out;
}

SymplecticPath multiply(const SymplecticPath& eta, const SymplecticPath& psi) {
    if (eta.n != psi.n || eta.samples.size() != psi.samples.size())
        throw std::invalid_argument("paths must share dimension and sampling");
    SymplecticPath out = psi;
    for (std::size_t i = 0; i < psi.samples.size(); ++i) out.samples[i] = eta.samples[i] * psi.samples[i];
    return out;
}

SymplecticPath conjugate(const SymplecticPath& p, const Mat& a) {
    SymplecticPath out = p;
    const Mat ai = a.inverse();
    for (auto& s : out.samples) s = a * s * ai;
    return out;
}

SymplecticPath path_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("path must be a non-empty array of matrices");
    SymplecticPath p;
    for (const auto& entry : j) {
        std::vector<double> flat;
        if (!entry.is_array()) throw std::invalid_argument("matrix entries must be arrays");
        for (const auto& e : entry) {
            if (e.is_array())
                for (const auto& x : e) flat.push_back(x.get<double>());
            else
                flat.push_back(e.get<double>());
        }
        const auto dim = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(flat.size()))));
        if (dim * dim != static_cast<Eigen::Index>(flat.size()) || dim % 2 != 0)
            throw std::invalid_argument("matrix is not 2n x 2n");
        Mat m(dim, dim);
        for (Eigen::Index r = 0; r < dim; ++r)
            for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = flat[static_cast<std::size_t>(r * dim + c)];
        if (!p.samples.empty() && m.rows() != p.samples.front().rows())
            throw std::invalid_argument("matrices in a path must share one size");
        p.samples.push_back(std::move(m));
    }
    p.n = static_cast<int>(p.samples.front().rows() / 2);
    return p;
}

nlohmann::json to_json(const SymplecticPath& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const Mat& m : p.samples) {
        nlohmann::json flat = nlohmann::json::array();
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            for (Eigen::Index c = 0; c < m.cols(); ++c) flat.push_back(m(r, c));
        out.push_back(flat);
    }
    return out;
}

}  // namespace rfh::symp
