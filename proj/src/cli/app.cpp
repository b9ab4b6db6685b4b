#include "rfhkit/cli/app.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <ostream>
#include <sstream>

#include "rfhkit/flow/hamiltonian.hpp"
#include "rfhkit/flow/integrator.hpp"
#include "rfhkit/mb/datum.hpp"
#include "rfhkit/mb/rfh_complex.hpp"
#include "rfhkit/orbit/hypersurface.hpp"
#include "rfhkit/orbit/lift.hpp"
#include "rfhkit/orbit/shooting.hpp"
#include "rfhkit/orbit/torus.hpp"
#include "rfhkit/symp/cz_index.hpp"
#include "rfhkit/z2/action.hpp"
#include "rfhkit/z2/complex_json.hpp"

namespace rfh::cli {

using nlohmann::json;

std::string format_number(double v) {
    if (v == 0) v = 0;  // drop the sign of -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string format_angle(double v) {
    for (int q = 1; q <= 12; ++q) {
        const double p = std::round(v * q / std::numbers::pi);
        if (std::abs(v - p * std::numbers::pi / q) > 1e-9) continue;
        if (p == 0) return "0";
        const long pi = static_cast<long>(p);
        std::string s = pi == 1 ? "pi" : pi == -1 ? "-pi" : std::to_string(pi) + "pi";
        if (q > 1) s += "/" + std::to_string(q);
        return s;
    }
    return format_number(v);
}

namespace {

enum class Mode { Table, Json, Csv };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_doubles(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw UsageError("bad number '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (double v : parse_doubles(s)) {
        if (v != std::round(v)) throw UsageError("expected integers, got '" + s + "'");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

std::pair<int, int> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) throw UsageError("range must look like a..b");
    const auto lo = parse_ints(s.substr(0, dots)), hi = parse_ints(s.substr(dots + 2));
    if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0]) throw UsageError("bad range '" + s + "'");
    return {lo[0], hi[0]};
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
    }
}

json vec_json(const flow::Vec& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

std::string vec_text(const flow::Vec& v) {
    std::string s;
    for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_number(v(i));
    return s;
}

void print_dims(std::ostream& out, Mode mode, const z2::DegreeDims& dims) {
    if (mode == Mode::Json) {
        out << json{{"dims", z2::dims_to_json(dims)}}.dump(2) << "\n";
    } else if (mode == Mode::Csv) {
        out << "degree,dim\n";
        for (const auto& [k, v] : dims) out << k << "," << v << "\n";
    } else {
        for (const auto& [k, v] : dims) out << "degree " << k << ": " << v << "\n";
    }
}

struct Settings {
    Mode mode = Mode::Table;
    double tol = 0;  // 0: per-command default, possibly from RFHKIT_TOL
    double tol_or(double fallback) const {
        if (tol > 0) return tol;
        if (const char* env = std::getenv("RFHKIT_TOL")) {
            const auto v = parse_doubles(env);
            if (v.size() != 1 || !(v[0] > 0)) throw UsageError("RFHKIT_TOL must be a positive number");
            return v[0];
        }
        return fallback;
    }
};

flow::Vec default_seed(const flow::HypersurfaceModel& sigma) {
    const int d = 2 * sigma.sigma.n;
    flow::Vec v(d);
    for (int i = 0; i < d; ++i) v(i) = 1.0 / (i + 1);
    return std::exp(-flow::collar_coordinate(sigma.sigma, v) / 2) * v;
}

struct OrbitArgs {
    std::string model = "sphere";
    int n = 2;
    int m = 1;
    std::string k;
    double seed_tau = 0;
    std::string seed_x;
    double delta = 1.0;
    int max_iter = 50;
};

struct OrbitSetup {
    flow::HypersurfaceModel sigma;
    orbit::TwistSpec twist;
    flow::Vec seed;
};

OrbitSetup orbit_setup(const OrbitArgs& a) {
    OrbitSetup s{orbit::make_hypersurface(a.model, a.n, a.delta), {}, {}};
    std::vector<int> k = a.k.empty() ? std::vector<int>(static_cast<std::size_t>(a.n), 1) : parse_ints(a.k);
    if (static_cast<int>(k.size()) != a.n) throw UsageError("--k needs n entries");
    s.twist = orbit::rotation_twist(a.m, k);
    if (a.seed_x.empty()) {
        s.seed = default_seed(s.sigma);
    } else {
        const auto x = parse_doubles(a.seed_x);
        if (static_cast<int>(x.size()) != 2 * a.n) throw UsageError("--seed-x needs 2n entries");
        s.seed = Eigen::Map<const flow::Vec>(x.data(), 2 * a.n);
    }
    return s;
}

void add_orbit_options(CLI::App* c, OrbitArgs& a) {
    c->add_option("--model", a.model, "sphere | ellipsoid:a1,..,an | deformed:eps");
    c->add_option("--n", a.n, "complex dimension")->check(CLI::PositiveNumber);
    c->add_option("--m", a.m, "twist order")->check(CLI::PositiveNumber);
    c->add_option("--k", a.k, "rotation exponents k1,..,kn (default all 1)");
    c->add_option("--seed-tau", a.seed_tau, "initial period")->required();
    c->add_option("--seed-x", a.seed_x, "initial point x1,..,xn,y1,..,yn");
    c->add_option("--delta", a.delta, "collar width of the defining Hamiltonian")->check(CLI::PositiveNumber);
    c->add_option("--max-iter", a.max_iter, "Newton iteration cap")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rfhkit: twisted Rabinowitz-Floer computations", "rfhkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    Settings st;
    bool as_json = false, as_csv = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");
    app.add_flag("--csv", as_csv, "CSV output");
    app.add_option("--tol", st.tol, "solver tolerance (overrides RFHKIT_TOL)")->check(CLI::PositiveNumber);

    // homology
    auto* homology = app.add_subcommand("homology", "Z2 homology of a complex given as JSON");
    std::string complex_file, action_file, range;
    homology->add_option("file", complex_file, "graded or periodic complex JSON")->required();
    homology->add_option("--action", action_file, "free Z_m action JSON {m, perms}; homology of the quotient");
    homology->add_option("--range", range, "reported degrees a..b for periodic complexes");

    // rfh-lens
    auto* lens = app.add_subcommand("rfh-lens", "equivariant twisted RFH of the round sphere");
    int lens_n = 2, lens_m = 1;
    std::string lens_k;
    lens->add_option("--n", lens_n, "complex dimension")->required();
    lens->add_option("--m", lens_m, "rotation order")->required();
    lens->add_option("--k", lens_k, "rotation exponents (default all 1)");

    // orbit
    auto* orbit_cmd = app.add_subcommand("orbit", "twisted Reeb orbits");
    orbit_cmd->require_subcommand(1);
    OrbitArgs shoot_args, mono_args;
    auto* shoot = orbit_cmd->add_subcommand("shoot", "Newton shooting for a twisted closed Reeb orbit");
    add_orbit_options(shoot, shoot_args);
    auto* mono = orbit_cmd->add_subcommand("monodromy", "linearized return map of a shot orbit");
    add_orbit_options(mono, mono_args);
    auto* spectrum = orbit_cmd->add_subcommand("spectrum", "twisted spectrum of the round sphere");
    int spec_m = 1;
    std::string k_range = "0..3";
    spectrum->add_option("--m", spec_m, "rotation order")->required()->check(CLI::PositiveNumber);
    spectrum->add_option("--k-range", k_range, "a..b");

    // cz
    auto* cz = app.add_subcommand("cz", "Conley-Zehnder index of a sampled symplectic path");
    std::string path_file;
    bool degenerate = false;
    double cz_eps = 1e-3;
    cz->add_option("--path", path_file, "JSON array of 2n x 2n matrices")->required();
    cz->add_flag("--degenerate", degenerate, "allow an endpoint with eigenvalue 1");
    cz->add_option("--epsilon", cz_eps, "perturbation for degenerate endpoints")->check(CLI::PositiveNumber);

    // torus
    auto* torus = app.add_subcommand("torus", "magnetic torus diagnostics");
    torus->require_subcommand(1);
    auto* tcheck = torus->add_subcommand("check", "check the explicit family at energy c and period tau");
    double t_c = 1, t_tau = std::numbers::pi / 2;
    tcheck->add_option("--c", t_c, "energy level")->required();
    tcheck->add_option("--tau", t_tau, "period");
    auto* forcing = torus->add_subcommand("forcing", "action gap against the displacement energy");
    double f_c = 1, tau_minus = 0, tau_plus = 0;
    forcing->add_option("--c", f_c, "energy level")->required();
    forcing->add_option("--tau-minus", tau_minus, "lower period")->required();
    forcing->add_option("--tau-plus", tau_plus, "upper period")->required();

    // lift
    auto* lift = app.add_subcommand("lift", "deck index of a loop in the quotient by a rotation");
    std::string loop_file;
    lift->add_option("--loop", loop_file, "JSON {m, k, samples}")->required();

    // energy
    auto* energy = app.add_subcommand("energy", "displacement energy");
    std::string shape;
    double e_r = 0, e_c = 0;
    energy->add_option("--shape", shape, "ball | torus (or ball:r, torus:c)")->required();
    energy->add_option("--r", e_r, "ball radius");
    energy->add_option("--c", e_c, "torus energy level");

    // flow
    auto* flow_cmd = app.add_subcommand("flow", "RK4 flow of the sphere Hamiltonian");
    int fl_n = 1;
    std::string fl_x;
    double fl_t = std::numbers::pi, fl_dt = 1e-3;
    int fl_every = 1;
    flow_cmd->add_option("--n", fl_n, "complex dimension")->check(CLI::PositiveNumber);
    flow_cmd->add_option("--x", fl_x, "initial point x1,..,xn,y1,..,yn")->required();
    flow_cmd->add_option("--T", fl_t, "final time");
    flow_cmd->add_option("--dt", fl_dt, "step")->check(CLI::PositiveNumber);
    flow_cmd->add_option("--every", fl_every, "store every k-th step")->check(CLI::PositiveNumber);

    // mb
    auto* mb_cmd = app.add_subcommand("mb", "Morse-Bott homology from a cascade datum");
    std::string datum_spec;
    bool markdown = false;
    mb_cmd->add_option("--datum", datum_spec, "teapot | sphere:n | path to datum JSON")->required();
    mb_cmd->add_flag("--markdown", markdown, "markdown table");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (as_json && as_csv) throw UsageError("--json and --csv are exclusive");
        st.mode = as_json ? Mode::Json : as_csv ? Mode::Csv : Mode::Table;

        if (*homology) {
            const json j = read_json(complex_file);
            if (j.contains("period_shift")) {
                z2::PeriodicComplexZ2 c = z2::periodic_from_json(j);
                if (!action_file.empty()) {
                    const json a = read_json(action_file);
                    z2::DegreeAction act;
                    act.m = a.at("m").get<int>();
                    for (const auto& [deg, p] : a.at("perms").items()) act.perms[std::stoi(deg)] = p.get<std::vector<std::size_t>>();
                    c = z2::quotient_by_action(c, act);
                }
                auto [lo, hi] = range.empty() ? std::pair{0, c.period_shift - 1} : parse_range(range);
                const int p = c.period_shift;
                const int width = std::max(hi - lo + 1, p);
                z2::DegreeDims dims = z2::periodic_homology_dims(c, lo - p, lo + width - 1 + p);
                z2::DegreeDims shown;
                for (int k = lo; k <= hi; ++k) shown[k] = dims.at(k);
                print_dims(out, st.mode, shown);
            } else {
                z2::GradedComplexZ2 c = z2::complex_from_json(j);
                if (!action_file.empty()) {
                    const json a = read_json(action_file);
                    z2::DegreeAction act;
                    act.m = a.at("m").get<int>();
                    for (const auto& [deg, p] : a.at("perms").items()) act.perms[std::stoi(deg)] = p.get<std::vector<std::size_t>>();
                    c = z2::quotient_by_action(c, act);
                }
                print_dims(out, st.mode, z2::homology_dims(c));
            }
        } else if (*lens) {
            mb::RfhSphereSpec spec{lens_n, lens_m, lens_k.empty() ? std::vector<int>{} : parse_ints(lens_k)};
            const z2::DegreeDims dims = mb::rfh_lens_homology(spec);
            if (st.mode == Mode::Table) {
                bool uniform = true;
                for (const auto& kv : dims) uniform = uniform && kv.second == dims.begin()->second;
                if (uniform)
                    out << "degree k: " << dims.begin()->second << " (all k)\n";
                else
                    print_dims(out, st.mode, dims);
            } else if (st.mode == Mode::Json) {
                json j{{"n", lens_n}, {"m", lens_m}, {"k", spec.exponents()}, {"period", 2 * lens_n},
                       {"dims", z2::dims_to_json(dims)}};
                out << j.dump(2) << "\n";
            } else {
                print_dims(out, st.mode, dims);
            }
        } else if (*orbit_cmd) {
            if (*spectrum) {
                const auto [lo, hi] = parse_range(k_range);
                const auto taus = orbit::spectrum_sphere(spec_m, lo, hi);
                if (st.mode == Mode::Json) {
                    json arr = json::array();
                    for (int k = lo; k <= hi; ++k) arr.push_back({{"k", k}, {"tau", taus[static_cast<std::size_t>(k - lo)]}});
                    out << json{{"m", spec_m}, {"spectrum", arr}}.dump(2) << "\n";
                } else {
                    if (st.mode == Mode::Csv) out << "k,tau\n";
                    for (int k = lo; k <= hi; ++k) {
                        const double t = taus[static_cast<std::size_t>(k - lo)];
                        if (st.mode == Mode::Csv)
                            out << k << "," << format_number(t) << "\n";
                        else
                            out << "k=" << k << ": " << format_angle(t) << "\n";
                    }
                }
            } else {
                const OrbitArgs& a = *shoot ? shoot_args : mono_args;
                const OrbitSetup s = orbit_setup(a);
                orbit::ShootOptions opt;
                opt.tol = st.tol_or(opt.tol);
                opt.max_iter = a.max_iter;
                const orbit::TwistedOrbit o = orbit::shoot(s.sigma, s.twist, s.seed, a.seed_tau, opt);
                if (*shoot) {
                    const orbit::OrbitReport r = orbit::make_report(o, s.sigma, s.twist);
                    if (st.mode == Mode::Json) {
                        out << orbit::to_json(r).dump(2) << "\n";
                    } else if (st.mode == Mode::Csv) {
                        out << "tau,residual,action,kernel_dim,deck_index,cz_index\n"
                            << format_number(o.tau) << "," << format_number(o.residual) << "," << format_number(r.action)
                            << "," << r.kernel_dim << "," << r.deck_index << ","
                            << (r.cz_index ? std::to_string(*r.cz_index) : "") << "\n";
                    } else {
                        out << "tau: " << format_angle(o.tau) << "\n"
                            << "residual: " << format_number(o.residual) << "\n"
                            << "action: " << format_number(r.action) << "\n"
                            << "kernel_dim: " << r.kernel_dim << "\n"
                            << "deck_index: " << r.deck_index << "\n";
                        if (r.cz_index) out << "cz_index: " << *r.cz_index << "\n";
                        out << "iterations: " << o.iterations << "\n"
                            << "x0: " << vec_text(o.x0) << "\n";
                    }
                } else {
                    const orbit::Monodromy md = orbit::monodromy_kernel(o, s.sigma, s.twist);
                    const double defect = (md.full - flow::Mat::Identity(md.full.rows(), md.full.cols())).norm();
                    if (st.mode == Mode::Json) {
                        out << json{{"tau", o.tau},
                                    {"kernel_dim", md.kernel_dim},
                                    {"identity_defect", defect},
                                    {"reeb_defect", md.reeb_defect},
                                    {"singular_values", vec_json(md.singular_values)}}
                                   .dump(2)
                            << "\n";
                    } else if (st.mode == Mode::Csv) {
                        out << "index,singular_value\n";
                        for (Eigen::Index i = 0; i < md.singular_values.size(); ++i)
                            out << i << "," << format_number(md.singular_values(i)) << "\n";
                    } else {
                        out << "tau: " << format_angle(o.tau) << "\n"
                            << "kernel_dim: " << md.kernel_dim << "\n"
                            << "identity_defect: " << format_number(defect) << "\n"
                            << "reeb_defect: " << format_number(md.reeb_defect) << "\n"
                            << "singular_values: " << vec_text(md.singular_values) << "\n";
                    }
                }
            }
        } else if (*cz) {
            symp::CzOptions opt;
            opt.degenerate = degenerate;
            opt.epsilon = cz_eps;
            opt.tol_symp = st.tol_or(opt.tol_symp);
            const int idx = symp::cz_index(symp::path_from_json(read_json(path_file)), opt);
            if (st.mode == Mode::Json)
                out << json{{"cz_index", idx}}.dump(2) << "\n";
            else if (st.mode == Mode::Csv)
                out << "cz_index\n" << idx << "\n";
            else
                out << "cz_index: " << idx << "\n";
        } else if (*torus) {
            if (*tcheck) {
                const orbit::MagneticCheck c = orbit::torus_family_check(t_c, t_tau, st.tol_or(1e-8));
                if (st.mode == Mode::Json) {
                    out << json{{"c", t_c}, {"tau", t_tau}, {"ok", c.ok}, {"defects", std::vector<double>(c.defects, c.defects + 3)}}.dump(2)
                        << "\n";
                } else if (st.mode == Mode::Csv) {
                    out << "ok,position,momentum,energy\n"
                        << (c.ok ? 1 : 0) << "," << format_number(c.defects[0]) << "," << format_number(c.defects[1]) << ","
                        << format_number(c.defects[2]) << "\n";
                } else {
                    out << "ok: " << (c.ok ? "yes" : "no") << "\n"
                        << "defects: " << format_number(c.defects[0]) << " " << format_number(c.defects[1]) << " "
                        << format_number(c.defects[2]) << "\n";
                }
            } else {
                const orbit::ForcingGap g = orbit::forcing_gap(f_c, tau_minus, tau_plus);
                if (st.mode == Mode::Json) {
                    out << json{{"gap", g.gap}, {"e_sigma", g.e_sigma}, {"satisfied", g.satisfied}}.dump(2) << "\n";
                } else if (st.mode == Mode::Csv) {
                    out << "gap,e_sigma,satisfied\n"
                        << format_number(g.gap) << "," << format_number(g.e_sigma) << "," << (g.satisfied ? 1 : 0) << "\n";
                } else {
                    out << "gap: " << format_number(g.gap) << "\n"
                        << "e(Sigma_c): " << format_number(g.e_sigma) << "\n"
                        << "gap <= e: " << (g.satisfied ? "yes" : "no") << "\n";
                }
            }
        } else if (*lift) {
            const json j = read_json(loop_file);
            const int m = j.at("m").get<int>();
            const auto k = j.at("k").get<std::vector<int>>();
            std::vector<flow::Vec> samples;
            for (const auto& s : j.at("samples")) {
                const auto v = s.get<std::vector<double>>();
                samples.emplace_back(Eigen::Map<const flow::Vec>(v.data(), static_cast<Eigen::Index>(v.size())));
            }
            const int deck = orbit::lift_loop(samples, orbit::rotation_twist(m, k));
            if (st.mode == Mode::Json)
                out << json{{"deck_index", deck}}.dump(2) << "\n";
            else if (st.mode == Mode::Csv)
                out << "deck_index\n" << deck << "\n";
            else
                out << "deck_index: " << deck << "\n";
        } else if (*energy) {
            std::string spec = shape;
            if (spec == "ball") spec = "ball:" + format_number(e_r);
            if (spec == "torus") spec = "torus:" + format_number(e_c);
            if ((shape == "ball" && !(e_r > 0)) || (shape == "torus" && !(e_c > 0)))
                throw UsageError("--shape " + shape + " needs a positive --" + (shape == "ball" ? "r" : "c"));
            const double e = orbit::displacement_energy(orbit::parse_shape(spec));
            if (st.mode == Mode::Json)
                out << json{{"shape", spec}, {"energy", e}}.dump(2) << "\n";
            else if (st.mode == Mode::Csv)
                out << "shape,energy\n" << spec << "," << format_number(e) << "\n";
            else
                out << format_number(e) << "\n";
        } else if (*flow_cmd) {
            const auto x = parse_doubles(fl_x);
            if (static_cast<int>(x.size()) != 2 * fl_n) throw UsageError("--x needs 2n entries");
            const flow::HamiltonianModel model = flow::sphere_model(fl_n);
            const flow::Trajectory tr =
                flow::flow(model, Eigen::Map<const flow::Vec>(x.data(), 2 * fl_n), fl_t, fl_dt, {1e8, fl_every});
            if (st.mode == Mode::Csv) {
                out << "t";
                for (int i = 1; i <= fl_n; ++i) out << ",x" << i;
                for (int i = 1; i <= fl_n; ++i) out << ",y" << i;
                out << ",H\n";
                for (std::size_t i = 0; i < tr.states.size(); ++i) {
                    out << format_number(tr.times[i]);
                    for (Eigen::Index j = 0; j < tr.states[i].size(); ++j) out << "," << format_number(tr.states[i](j));
                    out << "," << format_number(model.H(tr.states[i])) << "\n";
                }
            } else if (st.mode == Mode::Json) {
                out << json{{"T", fl_t}, {"dt", fl_dt}, {"end", vec_json(tr.end())}, {"energy_drift", tr.energy_drift}}.dump(2)
                    << "\n";
            } else {
                out << "end: " << vec_text(tr.end()) << "\n"
                    << "energy_drift: " << format_number(tr.energy_drift) << "\n";
            }
        } else if (*mb_cmd) {
            mb::MorseBottDatum d;
            if (datum_spec == "teapot")
                d = mb::teapot_datum();
            else if (datum_spec.rfind("sphere:", 0) == 0)
                d = mb::sphere_datum(parse_ints(datum_spec.substr(7)).at(0));
            else
                d = mb::datum_from_json(read_json(datum_spec));
            const z2::DegreeDims dims = z2::homology_dims(mb::build_complex(d));
            if (markdown && st.mode == Mode::Table)
                out << mb::markdown_table(dims);
            else
                print_dims(out, st.mode, dims);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace rfh::cli
