// pentagram_cli: orbits, invariant reports and verification for the T_k family.

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pentagram/io.hpp"
#include "pentagram/pentagram.hpp"
#include "pentagram/plane.hpp"
#include "pentagram/suite.hpp"

using namespace pentagram;
using io::json;

namespace {

struct RunConfig {
    std::optional<int> k, n;
    int steps = 10;
    std::uint64_t seed = 20240601;
    std::string mode;
    std::optional<std::string> level;
    std::string in, out;
    bool exact_csv = false;
    std::string fault = "none";
    std::vector<int> only;
    bool timing = false;
};

/// Thrown to leave with exit code 1 after output has been written.
struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_.open(path);
            if (!file_) throw InputError("cannot open \"" + path + "\" for writing");
        }
    }
    std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw InputError("cannot read \"" + path + "\"");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

MapShape shape_of(const RunConfig& cfg, int k_default, int n_default) {
    return MapShape::make(cfg.k.value_or(k_default), cfg.n.value_or(n_default));
}

const char* mode_name(const io::AnyState& s) {
    static const char* names[] = {"xy", "pq", "corner", "polygon", "leapfrog"};
    return names[s.index()];
}

/// Seeded random state of the requested mode, regular for `steps` iterations where that is cheap to ensure.
io::AnyState random_state(const RunConfig& cfg, const std::string& mode, int steps) {
    RationalSampler rs(cfg.seed);
    if (mode == "xy") return suite::detail::regular_state(rs, shape_of(cfg, 3, 5), steps);
    if (mode == "pq") {
        auto sh = shape_of(cfg, 3, 5);
        auto s = rs.pq(sh);
        if (cfg.level) {
            Rational c = Rational::parse(*cfg.level);
            if (c.is_zero()) throw InputError("--level must be nonzero");
            s.q(sh.n) = Rational(1);
            s.q(sh.n) = c / s.level();
        }
        return s;
    }
    if (mode == "corner") {
        const int n = cfg.n.value_or(5);
        return rs.until([&](RationalSampler& g) { return CornerState<Rational>(g.vec(n), g.vec(n)); },
                        [&](const CornerState<Rational>& s) {
                            auto t = s;
                            for (int i = 0; i < steps; ++i) t = pentagram_corner(t);
                            return true;
                        });
    }
    if (mode == "polygon") {
        auto sh = shape_of(cfg, 3, 5);
        return polygon_from_xy(rs.until([&](RationalSampler& g) { return g.xy(sh); },
                                        [&](const XYState<Rational>& s) {
                                            auto P = polygon_from_xy(s);
                                            for (int i = 0; i < steps; ++i) xy_from_polygon(P = map_F(P));
                                            return true;
                                        }));
    }
    if (mode == "leapfrog") {
        const int n = cfg.n.value_or(5);
        return rs.until([&](RationalSampler& g) { return LeapfrogState::closed(g.vec(n), g.vec(n)); },
                        [&](const LeapfrogState& s) {
                            auto t = s;
                            for (int i = 0; i < steps; ++i) leapfrog_coords(t = leapfrog_step(t));
                            return true;
                        });
    }
    throw InputError("unknown mode \"" + mode + "\" (expected xy, pq, corner, polygon or leapfrog)");
}

io::AnyState initial_state(const RunConfig& cfg, int steps) {
    if (!cfg.in.empty()) {
        auto s = io::parse(slurp(cfg.in));
        if (!cfg.mode.empty() && cfg.mode != mode_name(s))
            throw InputError(std::string("input is a ") + mode_name(s) + " state but --mode is " + cfg.mode);
        return s;
    }
    return random_state(cfg, cfg.mode.empty() ? "xy" : cfg.mode, steps);
}

/// Corrugation coordinates attached to a state, when it has any.
std::optional<XYState<Rational>> xy_of(const io::AnyState& s) {
    switch (s.index()) {
        case 0: return std::get<0>(s);
        case 2: return corner_to_xy(std::get<2>(s));
        case 3: return xy_from_polygon(std::get<3>(s));
        case 4: return leapfrog_coords(std::get<4>(s));
        default: return std::nullopt;
    }
}

io::AnyState advance(const io::AnyState& s) {
    switch (s.index()) {
        case 0: return map_T(std::get<0>(s));
        case 1: return map_Tbar(std::get<1>(s));
        case 2: return pentagram_corner(std::get<2>(s));
        case 3: return map_F(std::get<3>(s));
        default: return leapfrog_step(std::get<4>(s));
    }
}

struct Column {
    std::string name;
    Rational value;
};

std::vector<Column> columns(const io::AnyState& s, const std::vector<Exponent>& integrals) {
    std::vector<Column> out;
    auto add = [&](const std::string& base, const std::vector<Rational>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) out.push_back({base + std::to_string(i + 1), v[i]});
    };
    switch (s.index()) {
        case 0:
        case 3: {
            auto xy = *xy_of(s);
            add("x", xy.x.v);
            add("y", xy.y.v);
            break;
        }
        case 1:
            add("p", std::get<1>(s).p.v);
            add("q", std::get<1>(s).q.v);
            break;
        case 2:
            add("X", std::get<2>(s).X.v);
            add("Y", std::get<2>(s).Y.v);
            break;
        case 4: {
            const auto& st = std::get<4>(s);
            auto ratios = [](const std::vector<RP1Point>& v) {
                std::vector<Rational> o;
                for (const auto& p : v) o.push_back(p.affine_value());
                return o;
            };
            add("Sminus", ratios(st.S_minus));
            add("S", ratios(st.S));
            break;
        }
    }
    if (!integrals.empty()) {
        auto table = spectral(*xy_of(s));
        for (auto [i, j] : integrals)
            out.push_back({"I_" + std::to_string(i) + "_" + std::to_string(j), table.I(i, j)});
    }
    return out;
}

int cmd_orbit(const RunConfig& cfg) {
    if (cfg.steps < 0) throw InputError("--steps must be >= 0");
    auto s = initial_state(cfg, cfg.steps);
    std::vector<Exponent> integrals;
    if (auto xy = xy_of(s)) integrals = integral_positions(spectral(*xy));
    Output out(cfg.out);
    auto& os = out.os();
    auto header = columns(s, integrals);
    os << "step";
    for (const auto& c : header) {
        os << ',' << c.name;
        if (cfg.exact_csv) os << ',' << c.name << "_exact";
    }
    os << '\n';
    for (int step = 0;; ++step) {
        std::vector<Column> row;
        try {
            row = columns(s, integrals);
        } catch (const Error& e) {
            throw Failure("singular state at step " + std::to_string(step) + ": " + e.what());
        }
        os << step;
        for (const auto& c : row) io::csv_cells(os, c.value, cfg.exact_csv);
        os << '\n';
        if (step == cfg.steps) break;
        try {
            s = advance(s);
        } catch (const InputError&) {
            throw;
        } catch (const Error& e) {
            os.flush();
            throw Failure("singular state at step " + std::to_string(step + 1) + ": " + e.what());
        }
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    suite::Config sc;
    sc.seed = cfg.seed;
    if (cfg.fault == "d-sign")
        sc.fault = suite::Fault::d_sign;
    else if (cfg.fault != "none")
        throw InputError("unknown fault \"" + cfg.fault + "\" (expected none or d-sign)");
    if (cfg.k.has_value() != cfg.n.has_value()) throw InputError("--k and --n must be given together");
    if (cfg.k) sc.grid = std::vector<MapShape>{MapShape::make(*cfg.k, *cfg.n)};
    auto all = suite::criteria();
    std::vector<int> ids = cfg.only;
    if (ids.empty())
        for (int i = 1; i <= static_cast<int>(all.size()); ++i) ids.push_back(i);
    std::vector<std::future<suite::Result>> jobs;
    for (int id : ids) {
        if (id < 1 || id > static_cast<int>(all.size())) throw InputError("no criterion " + std::to_string(id));
        jobs.push_back(std::async(std::launch::async, all[static_cast<std::size_t>(id - 1)], sc));
    }
    json report = {{"seed", cfg.seed}, {"fault", cfg.fault}, {"criteria", json::array()}};
    bool pass = true;
    for (auto& j : jobs) {
        auto r = j.get();
        json e = {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"checks", r.checks}, {"failures", r.failures},
                  {"notes", r.notes}};
        if (cfg.timing) e["seconds"] = r.seconds;
        report["criteria"].push_back(e);
        pass = pass && r.pass;
    }
    report["pass"] = pass;
    Output out(cfg.out);
    out.os() << report.dump(2) << '\n';
    return pass ? 0 : 1;
}

XYState<Rational> xy_input(const RunConfig& cfg) {
    if (cfg.in.empty()) {
        RationalSampler rs(cfg.seed);
        return suite::detail::regular_state(rs, shape_of(cfg, 3, 5));
    }
    auto s = io::parse(slurp(cfg.in));
    auto xy = xy_of(s);
    if (!xy) throw InputError(std::string("a ") + mode_name(s) + " state has no corrugation coordinates");
    return *xy;
}

int cmd_integrals(const RunConfig& cfg) {
    auto s = xy_input(cfg);
    auto table = spectral(s);
    json items = json::array();
    for (auto [i, j] : integral_positions(table))
        items.push_back({{"lambda", i}, {"z", j}, {"value", table.I(i, j).str()}});
    json report = {{"k", s.shape.k}, {"n", s.shape.n}, {"state", io::to_json(s)}, {"integrals", items}};
    auto newton = newton_polygon(table);
    report["newton_polygon_ok"] = newton.inside_strip && newton.vertices_present;
    Output out(cfg.out);
    out.os() << report.dump(2) << '\n';
    return 0;
}

int cmd_rank(const RunConfig& cfg) {
    auto sh = shape_of(cfg, 3, 5);
    const int rank = poisson_rank(sh);
    const int expected = 2 * (sh.n - sh.d());
    RationalSampler rs(cfg.seed);
    auto s = suite::detail::regular_state(rs, sh);
    std::vector<std::vector<Rational>> jac;
    for (const auto& f : integral_jets(s)) {
        std::vector<Rational> row;
        for (int a = 0; a < 2 * sh.n; ++a) row.push_back(f.d(static_cast<std::size_t>(a)));
        jac.push_back(std::move(row));
    }
    const int jr = rational_rank(jac);
    const bool central = casimirs_central(sh, s);
    json report = {{"k", sh.k},           {"n", sh.n},          {"gcd", sh.d()},
                   {"rank", rank},        {"expected_rank", expected},
                   {"casimirs", static_cast<int>(casimirs(sh).size())}, {"casimirs_central", central},
                   {"jacobian_rank", jr}, {"expected_jacobian_rank", sh.n + sh.d()}};
    bool ok = rank == expected && central && jr == sh.n + sh.d();
    report["pass"] = ok;
    Output out(cfg.out);
    out.os() << report.dump(2) << '\n';
    return ok ? 0 : 1;
}

int cmd_geometry(const RunConfig& cfg) {
    auto s = xy_input(cfg);
    const auto sh = s.shape;
    if (sh.k < 3) throw InputError("geometry-check needs k >= 3");
    auto P = polygon_from_xy(s);
    auto F = map_F(P), G = map_G(P), W = dualize(P);
    Rational sign = sh.k % 2 ? Rational(-1) : Rational(1);
    json checks = {
        {"F_coordinates", xy_from_polygon(F) == map_T(shift(s, sh.rprime + 1))},
        {"G_coordinates", xy_from_polygon(G) == map_T_inv(shift(s, sh.r + 1))},
        {"dual_coordinates", xy_from_polygon(W) == suite::detail::scale(map_D(shift(s, sh.rprime)), sign)},
        {"F_oracle", polygons_projectively_equal(F, map_F_oracle(P))},
        {"G_oracle", polygons_projectively_equal(G, map_G_oracle(P))},
        {"corrugated", corrugation_residual(P).empty() && corrugation_residual(F).empty() &&
                           corrugation_residual(G).empty() && corrugation_residual(W).empty()},
        {"cross_ratios", cross_ratio_coords(P) == project_pq(s)}};
    bool ok = true;
    for (auto& [key, v] : checks.items()) ok = ok && v.get<bool>();
    json plane = json::array();
    for (int b = 0; b < plane_branch_count(sh.k); ++b) {
        json e = {{"branch", b}};
        try {
            auto Q = reconstruct_plane_polygon(s, b);
            e["deviation"] = coords_distance(plane_coords(skip_diagonal_map(Q, sh.k), sh.k), map_T(shift(s, sh.rprime + 1)));
        } catch (const Error& err) {
            e["error"] = err.what();
        }
        plane.push_back(e);
    }
    json report = {{"k", sh.k}, {"n", sh.n}, {"checks", checks}, {"plane_branches", plane}, {"pass", ok}};
    Output out(cfg.out);
    out.os() << report.dump(2) << '\n';
    return ok ? 0 : 1;
}

int cmd_leapfrog(const RunConfig& cfg) {
    LeapfrogState st;
    if (cfg.in.empty()) {
        st = std::get<LeapfrogState>(random_state(cfg, "leapfrog", 1));
    } else {
        auto s = io::parse(slurp(cfg.in));
        if (s.index() != 4) throw InputError(std::string("leapfrog-check needs a leapfrog state, got ") + mode_name(s));
        st = std::get<4>(s);
    }
    auto nx = leapfrog_step(st);
    bool conj = leapfrog_coords(nx) == map_T(leapfrog_coords(st));
    bool men = true, back = true;
    for (int i = 1; i <= st.n(); ++i) {
        men = men && men2_value(st.at(i - 1), st.at(i), st.at(i + 1), st.minus_at(i), nx.at(i)) == Rational(-1) &&
              men3_value(st.at(i - 1), st.at(i), st.at(i + 1), st.minus_at(i), nx.at(i)) == Rational(-1);
        back = back && apply(leapfrog_involution(st.at(i - 1), st.at(i), st.at(i + 1)), nx.at(i)) == st.minus_at(i);
    }
    json checks = {{"conjugate_to_T2", conj}, {"men2_men3", men}, {"involution", back}};
    if (st.is_closed()) {
        bool finite = true;
        for (const auto* seq : {&st.S_minus, &st.S, &nx.S})
            for (const auto& p : *seq) finite = finite && !p.is_infinite();
        if (finite) {
            std::vector<Rational> m, c, p;
            for (int i = 1; i <= st.n(); ++i) {
                m.push_back(st.minus_at(i).affine_value());
                c.push_back(st.at(i).affine_value());
                p.push_back(nx.at(i).affine_value());
            }
            bool lag = true;
            for (const auto& v : lagrangian_residual(m, c, p)) lag = lag && v.is_zero();
            checks["lagrangian"] = lag;
        }
    }
    bool ok = true;
    for (auto& [key, v] : checks.items()) ok = ok && v.get<bool>();
    json report = {{"n", st.n()}, {"state", io::to_json(st)}, {"next", io::to_json(nx)}, {"checks", checks}, {"pass", ok}};
    Output out(cfg.out);
    out.os() << report.dump(2) << '\n';
    return ok ? 0 : 1;
}

io::AnyState convert(const io::AnyState& s, const std::string& to) {
    const std::string from = mode_name(s);
    if (to.empty() || to == from) return s;
    if (to == "xy")
        if (auto xy = xy_of(s)) return *xy;
    if (to == "pq") {
        if (s.index() == 3) return cross_ratio_coords(std::get<3>(s));
        if (auto xy = xy_of(s)) return project_pq(*xy);
    }
    if (to == "polygon")
        if (auto xy = xy_of(s)) return polygon_from_xy(*xy);
    throw InputError("cannot convert a " + from + " state to " + to);
}

int cmd_convert(const RunConfig& cfg) {
    if (cfg.in.empty()) throw InputError("state convert needs --in");
    auto s = convert(io::parse(slurp(cfg.in)), cfg.mode);
    Output out(cfg.out);
    out.os() << io::print(s);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact orbits, integrals and identity checks for the maps T_k"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* c) {
        c->add_option("--k", cfg.k, "corrugation parameter");
        c->add_option("--n", cfg.n, "number of vertices");
        c->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
        c->add_option("--in", cfg.in, "JSON state file, '-' for stdin");
        c->add_option("--out", cfg.out, "output file (default stdout)");
    };

    auto* orbit = app.add_subcommand("orbit", "iterate the map and write a CSV row per step");
    common(orbit);
    orbit->add_option("--steps", cfg.steps, "number of iterations")->capture_default_str();
    orbit->add_option("--mode", cfg.mode, "xy, pq, corner, polygon or leapfrog");
    orbit->add_option("--level", cfg.level, "value of prod p_i q_i for a random pq state");
    orbit->add_flag("--exact-csv", cfg.exact_csv, "add an exact p/q column after each decimal");

    auto* verify = app.add_subcommand("verify", "run the acceptance identities and print a JSON report");
    common(verify);
    verify->add_option("--only", cfg.only, "criterion ids to run")->delimiter(',');
    verify->add_option("--inject-fault", cfg.fault, "negative control: none or d-sign")->capture_default_str();
    verify->add_flag("--timing", cfg.timing, "include wall-clock seconds in the report");

    auto* integrals = app.add_subcommand("integrals", "spectral integrals I_ij of a state");
    common(integrals);

    auto* rank = app.add_subcommand("rank", "Poisson rank, Casimirs and Jacobian rank of the integrals");
    common(rank);

    auto* geometry = app.add_subcommand("geometry-check", "corrugated polygon identities for one state");
    common(geometry);

    auto* leapfrog = app.add_subcommand("leapfrog-check", "leapfrog identities for one pair of polygons");
    common(leapfrog);

    auto* state = app.add_subcommand("state", "state file utilities");
    state->require_subcommand(1);
    auto* conv = state->add_subcommand("convert", "re-print a state, optionally in another coordinate mode");
    common(conv);
    conv->add_option("--mode", cfg.mode, "target mode: xy, pq or polygon");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*orbit) return cmd_orbit(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*integrals) return cmd_integrals(cfg);
        if (*rank) return cmd_rank(cfg);
        if (*geometry) return cmd_geometry(cfg);
        if (*leapfrog) return cmd_leapfrog(cfg);
        if (*conv) return cmd_convert(cfg);
    } catch (const Failure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const UnstableRange& e) {
        std::cerr << "unstable range: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
