#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "lax.hpp"
#include "leapfrog.hpp"
#include "plane.hpp"
#include "poisson.hpp"
#include "random.hpp"

namespace pentagram::suite {

/// Deliberate defects used as negative controls.
enum class Fault { none, d_sign };

struct Config {
    std::uint64_t seed = 20240601;
    Fault fault = Fault::none;
    /// Replaces every criterion's own (k, n) grid when set.
    std::optional<std::vector<MapShape>> grid;
};

struct Result {
    int id = 0;
    std::string name;
    bool pass = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    int checks = 0;
    double seconds = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            pass = false;
            if (failures.size() < 20) failures.push_back(what);
        }
    }
};

namespace detail {

inline std::string cell(MapShape s) { return "(" + std::to_string(s.k) + "," + std::to_string(s.n) + ")"; }

inline std::vector<MapShape> grid_of(const Config& cfg, std::initializer_list<std::pair<int, int>> def) {
    if (cfg.grid) return *cfg.grid;
    std::vector<MapShape> out;
    for (auto [k, n] : def) out.push_back(MapShape::make(k, n));
    return out;
}

/// Random state on which map_T and its inverse are defined.
inline XYState<Rational> regular_state(RationalSampler& rs, MapShape s, int steps = 1) {
    return rs.until([&](RationalSampler& g) { return g.xy(s); },
                    [&](const XYState<Rational>& st) {
                        auto t = st;
                        for (int i = 0; i < steps; ++i) t = map_T(t);
                        map_T_inv(st);
                        map_C(st);
                        map_D(st);
                        return true;
                    });
}

template <class F>
Result timed(int id, std::string name, F body) {
    Result r;
    r.id = id;
    r.name = std::move(name);
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.expect(false, std::string("unexpected exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline XYState<Rational> scale(const XYState<Rational>& s, const Rational& c) {
    auto o = s;
    for (auto& v : o.x.v) v *= c;
    for (auto& v : o.y.v) v *= c;
    return o;
}

}  // namespace detail

/// map_D, with the sign of x_1 flipped under Fault::d_sign.
inline XYState<Rational> D_under_test(const XYState<Rational>& s, const Config& cfg) {
    auto o = map_D(s);
    if (cfg.fault == Fault::d_sign) o.x(1) = -o.x(1);
    return o;
}

/// Spectral coefficients are T-invariant.
inline Result conservation(const Config& cfg) {
    return detail::timed(1, "conservation of spectral integrals", [&](Result& r) {
        for (auto sh : detail::grid_of(cfg, {{2, 3}, {2, 5}, {3, 5}, {3, 6}, {3, 8}, {4, 7}, {4, 9}, {5, 11}})) {
            RationalSampler rs(cfg.seed + 1000 * sh.k + sh.n);
            for (int t = 0; t < 20; ++t) {
                auto s = detail::regular_state(rs, sh, 10);
                auto P0 = spectral(s).P;
                auto cur = s;
                for (int step = 1; step <= 10; ++step) {
                    cur = map_T(cur);
                    r.expect(spectral(cur).P == P0, detail::cell(sh) + " trial " + std::to_string(t) + " step " +
                                                        std::to_string(step));
                }
            }
        }
    });
}

/// Pairwise brackets of the integrals vanish.
inline Result involution(const Config& cfg) {
    return detail::timed(2, "integrals Poisson-commute", [&](Result& r) {
        for (auto sh : detail::grid_of(cfg, {{2, 5}, {3, 5}, {3, 6}, {4, 7}})) {
            if (!sh.stable()) {
                r.notes.push_back(detail::cell(sh) + " skipped: UnstableRange");
                continue;
            }
            auto b = build_bracket_xy(sh);
            RationalSampler rs(cfg.seed + 2000 + 100 * sh.k + sh.n);
            for (int t = 0; t < 5; ++t) {
                auto s = rs.xy(sh);
                auto I = integral_jets(s);
                auto u = flatten(s);
                for (std::size_t a = 0; a < I.size(); ++a)
                    for (std::size_t c = a + 1; c < I.size(); ++c)
                        r.expect(log_canonical_bracket(b.Omega, u, I[a], I[c]).is_zero(),
                                 detail::cell(sh) + " trial " + std::to_string(t));
            }
        }
    });
}

/// T and Tbar preserve their brackets; project_pq pushes one to the other.
inline Result poisson_invariance(const Config& cfg) {
    return detail::timed(3, "Poisson maps", [&](Result& r) {
        for (auto sh : detail::grid_of(cfg, {{2, 5}, {3, 5}, {3, 6}, {4, 7}})) {
            if (!sh.stable()) {
                r.notes.push_back(detail::cell(sh) + " skipped: UnstableRange");
                continue;
            }
            for (auto rep : {check_pushforward(sh, 5, cfg.seed + 3000), check_T_invariance(sh, 5, cfg.seed + 3100),
                             check_Tbar_invariance(sh, 5, cfg.seed + 3200)}) {
                r.checks += rep.checked_pairs - 1;
                r.expect(rep.ok(), detail::cell(sh) + " " + (rep.ok() ? "" : rep.violations.front()));
            }
        }
    });
}

/// Rank 2(n-d), central Casimirs, Jacobian rank n+d.
inline Result rank_and_casimirs(const Config& cfg) {
    return detail::timed(4, "rank and Casimirs", [&](Result& r) {
        for (auto sh : detail::grid_of(cfg, {{2, 3}, {2, 5}, {3, 5}, {3, 6}, {3, 8}, {4, 7}, {4, 9}, {5, 11}})) {
            if (!sh.stable()) {
                r.notes.push_back(detail::cell(sh) + " skipped: UnstableRange");
                continue;
            }
            const int d = sh.d();
            r.expect(poisson_rank(sh) == 2 * (sh.n - d), detail::cell(sh) + " rank");
            RationalSampler rs(cfg.seed + 4000 + 100 * sh.k + sh.n);
            auto s = rs.xy(sh);
            r.expect(casimirs(sh).size() == static_cast<std::size_t>(2 * d), detail::cell(sh) + " Casimir count");
            r.expect(casimirs_central(sh, s), detail::cell(sh) + " Casimirs central");
            std::vector<std::vector<Rational>> J;
            for (const auto& f : integral_jets(s)) {
                std::vector<Rational> row;
                for (int a = 0; a < 2 * sh.n; ++a) row.push_back(f.d(a));
                J.push_back(std::move(row));
            }
            r.expect(rational_rank(J) == sh.n + d, detail::cell(sh) + " Jacobian rank");
        }
    });
}

/// Two-characteristic-polynomial identity, boundary matrix oracle, Newton polygon, corners.
inline Result spectral_identities(const Config& cfg) {
    return detail::timed(5, "spectral identities", [&](Result& r) {
        for (auto sh : detail::grid_of(cfg, {{2, 3}, {2, 5}, {3, 5}, {3, 6}, {3, 8}, {4, 7}, {4, 9}, {5, 11}})) {
            RationalSampler rs(cfg.seed + 5000 + 100 * sh.k + sh.n);
            for (int t = 0; t < 20; ++t) {
                auto s = rs.xy(sh);
                auto tab = spectral(s);
                std::string tag = detail::cell(sh) + " trial " + std::to_string(t);
                if (t < 3) {
                    r.expect(tab.P == tcp_rhs(s), tag + " tcp");
                    r.expect(boundary_A(s) == boundary_A_oracle(s), tag + " boundary matrix");
                }
                auto rep = newton_polygon(tab);
                r.expect(rep.inside_strip && rep.vertices_present, tag + " Newton polygon");
                auto [px, py] = expected_corners(s);
                r.expect(tab.I(sh.n, sh.k - 1) == px && tab.I(sh.n, sh.k) == py, tag + " corners");
            }
        }
    });
}

/// Zero curvature, refactorization, the alternative monodromy.
inline Result lax_representations(const Config& cfg) {
    return detail::timed(6, "Lax representations", [&](Result& r) {
        for (auto sh : detail::grid_of(cfg, {{2, 3}, {2, 5}, {3, 5}, {3, 6}, {4, 7}, {4, 9}, {5, 11}})) {
            RationalSampler rs(cfg.seed + 6000 + 100 * sh.k + sh.n);
            for (int t = 0; t < 3; ++t) {
                auto s = detail::regular_state(rs, sh);
                std::string tag = detail::cell(sh) + " trial " + std::to_string(t);
                r.expect(zero_curvature_check(s), tag + " zero curvature");
                auto f = refactorization(s);
                r.expect(f.product_12, tag + " A1 A2");
                r.expect(f.product_21, tag + " A2 A1");
                r.expect(monodromy_Q_check(s), tag + " monodromy route");
            }
        }
    });
}

/// Algebra of T, C, D, the projection and the pq map.
inline Result dynamics_algebra(const Config& cfg) {
    return detail::timed(7, "dynamics algebra", [&](Result& r) {
        for (auto sh : detail::grid_of(cfg, {{2, 3}, {2, 5}, {3, 5}, {3, 6}, {3, 8}, {4, 7}, {4, 9}, {5, 11}})) {
            RationalSampler rs(cfg.seed + 7000 + 100 * sh.k + sh.n);
            const int n = sh.n, k = sh.k;
            for (int t = 0; t < 10; ++t) {
                std::string tag = detail::cell(sh) + " trial " + std::to_string(t);
                auto s = rs.until([&](RationalSampler& g) { return g.xy(sh); },
                                  [&](const XYState<Rational>& st) {
                                      map_T(map_T_inv(st));
                                      map_T_inv(map_T(st));
                                      map_C(map_C(st));
                                      map_D(map_D(st));
                                      map_Tbar(project_pq(st));
                                      map_D_kn(map_T(map_D_kn(st, n - k + 2)), k);
                                      return true;
                                  });
                r.expect(map_T(map_T_inv(s)) == s && map_T_inv(map_T(s)) == s, tag + " T inverse");
                r.expect(map_D(map_C(s)) == map_T(s), tag + " T = D after C");
                r.expect(map_C(map_C(s)) == s, tag + " C involution");
                r.expect(D_under_test(D_under_test(s, cfg), cfg) == shift(s, sh.r - sh.rprime), tag + " D squared");
                r.expect(project_pq(map_T(s)) == map_Tbar(project_pq(s)), tag + " projection");
                r.expect(map_D_kn(map_T(map_D_kn(s, n - k + 2)), k) == map_T_inv(s), tag + " cross-k T inverse");

                auto p = rs.until([&](RationalSampler& g) { return g.pq(sh); },
                                  [&](const PQState<Rational>& st) {
                                      map_Tbar_circ(map_Tbar(st));
                                      map_Tbar(map_Tbar_circ(st));
                                      map_Dbar_kn(map_Tbar(map_Dbar_kn(st, k, n + 2 - k)), k, k);
                                      return true;
                                  });
                r.expect(map_Tbar_circ(map_Tbar(p)) == p && map_Tbar(map_Tbar_circ(p)) == p, tag + " Tbar inverse");
                r.expect(map_Dbar_kn(map_Tbar(map_Dbar_kn(p, k, n + 2 - k)), k, k) == map_Tbar_circ(p),
                         tag + " cross-k Tbar inverse");
            }
        }
    });
}

/// Diagonal maps and duality in coordinates.
inline Result geometry(const Config& cfg) {
    return detail::timed(8, "corrugated polygon geometry", [&](Result& r) {
        for (auto sh : detail::grid_of(cfg, {{3, 5}, {3, 8}, {4, 9}, {5, 11}})) {
            if (sh.k < 3) {
                r.notes.push_back(detail::cell(sh) + " skipped: polygons need k >= 3");
                continue;
            }
            RationalSampler rs(cfg.seed + 8000 + 100 * sh.k + sh.n);
            for (int t = 0; t < 3; ++t) {
                std::string tag = detail::cell(sh) + " trial " + std::to_string(t);
                auto s = rs.until([&](RationalSampler& g) { return g.xy(sh); },
                                  [&](const XYState<Rational>& st) {
                                      auto P = polygon_from_xy(st);
                                      xy_from_polygon(map_F(P));
                                      xy_from_polygon(map_G(P));
                                      xy_from_polygon(dualize(P));
                                      map_T_inv(st);
                                      map_D(st);
                                      return true;
                                  });
                auto P = polygon_from_xy(s);
                auto F = map_F(P), G = map_G(P), W = dualize(P);
                r.expect(xy_from_polygon(P) == s, tag + " roundtrip");
                r.expect(xy_from_polygon(F) == map_T(shift(s, sh.rprime + 1)), tag + " F coordinates");
                r.expect(xy_from_polygon(G) == map_T_inv(shift(s, sh.r + 1)), tag + " G coordinates");
                Rational sign = sh.k % 2 ? Rational(-1) : Rational(1);
                r.expect(xy_from_polygon(W) == detail::scale(D_under_test(shift(s, sh.rprime), cfg), sign),
                         tag + " duality coordinates");
                r.expect(polygons_projectively_equal(F, map_F_oracle(P)), tag + " F oracle");
                r.expect(polygons_projectively_equal(G, map_G_oracle(P)), tag + " G oracle");
                for (const auto* img : {&F, &G, &W}) r.expect(corrugation_residual(*img).empty(), tag + " corrugation");
            }
        }
    });
}

/// The k = 3 map against the corner-invariant pentagram formula.
inline Result pentagram(const Config& cfg) {
    return detail::timed(9, "pentagram reduction", [&](Result& r) {
        RationalSampler rs(cfg.seed + 9000);
        for (int t = 0; t < 100; ++t) {
            auto c = rs.until([](RationalSampler& g) { return CornerState<Rational>(g.vec(5), g.vec(5)); },
                              [](const CornerState<Rational>& st) {
                                  pentagram_corner(st);
                                  map_T(corner_to_xy(st));
                                  return true;
                              });
            r.expect(corner_to_xy(shift(pentagram_corner(c), kPentagramShift)) == map_T(corner_to_xy(c)),
                     "trial " + std::to_string(t));
        }
    });
}

/// Leapfrog map, its coordinates, Lagrangian, 2-form and circle patterns.
inline Result leapfrog(const Config& cfg) {
    return detail::timed(10, "leapfrog", [&](Result& r) {
        RationalSampler rs(cfg.seed + 10000);
        for (int t = 0; t < 40; ++t) {
            const int n = 3 + t % 4;
            const bool twisted = t % 2;
            std::string tag = (twisted ? "twisted" : "closed") + std::string(" trial ") + std::to_string(t);
            auto st = rs.until(
                [&](RationalSampler& g) {
                    auto s = LeapfrogState::closed(g.vec(n), g.vec(n));
                    if (twisted) {
                        Mat<Rational> M(2, 2);
                        for (int a = 0; a < 2; ++a)
                            for (int b = 0; b < 2; ++b) M(a, b) = g.next();
                        s.monodromy = M;
                    }
                    return s;
                },
                [](const LeapfrogState& s) {
                    if (s.monodromy.det().is_zero()) return false;
                    auto nx = leapfrog_step(s);
                    map_T(leapfrog_coords(s));
                    leapfrog_coords(nx);
                    for (int i = 1; i <= s.n(); ++i) {
                        men2_value(s.at(i - 1), s.at(i), s.at(i + 1), s.minus_at(i), nx.at(i));
                        men3_value(s.at(i - 1), s.at(i), s.at(i + 1), s.minus_at(i), nx.at(i));
                    }
                    if (s.is_closed())
                        for (const auto& p : nx.S) p.affine_value();
                    return true;
                });
            auto nx = leapfrog_step(st);
            r.expect(leapfrog_coords(nx) == map_T(leapfrog_coords(st)), tag + " coordinates conjugate to T");
            for (int i = 1; i <= n; ++i) {
                auto args = std::make_tuple(st.at(i - 1), st.at(i), st.at(i + 1), st.minus_at(i), nx.at(i));
                r.expect(std::apply(men2_value, args) == Rational(-1) && std::apply(men3_value, args) == Rational(-1),
                         tag + " Men2/Men3");
                auto back = apply(leapfrog_involution(st.at(i - 1), st.at(i), st.at(i + 1)), nx.at(i));
                r.expect(back == st.minus_at(i), tag + " involution");
            }
            if (twisted) continue;
            auto affine = [](const std::vector<RP1Point>& v) {
                std::vector<Rational> o;
                for (const auto& p : v) o.push_back(p.affine_value());
                return o;
            };
            auto m = affine(st.S_minus), c = affine(st.S), p = affine(nx.S);
            r.expect(leapfrog_affine_step(m, c) == p, tag + " affine oracle");
            for (int i = 1; i <= n; ++i)
                r.expect(men1_residual(c[cyc(i - 1, n)], c[cyc(i, n)], c[cyc(i + 1, n)], m[cyc(i, n)], p[cyc(i, n)])
                             .is_zero(),
                         tag + " Men1");
            for (const auto& v : lagrangian_residual(m, c, p)) r.expect(v.is_zero(), tag + " Lagrangian");
            auto u = rs.vec(2 * n), v = rs.vec(2 * n);
            r.expect(two_form_value(m, c, u, v) ==
                         two_form_value(c, p, leapfrog_differential(m, c, u), leapfrog_differential(m, c, v)),
                     tag + " 2-form");
        }
        RationalSampler gs(cfg.seed + 10500);
        int done = 0;
        while (done < 100) {
            auto g = [&] { return GaussRational(gs.next(), gs.next()); };
            ComplexQuadruple q{g(), g(), g(), g()};
            try {
                r.expect(circle_pattern_check(q), "circle pattern " + std::to_string(done));
                ++done;
            } catch (const SingularConfiguration&) {
            }
        }
    });
}

/// Plane polygons from (k choose 3) invariant subspaces.
inline Result plane_reconstruction(const Config& cfg) {
    return detail::timed(11, "plane reconstruction", [&](Result& r) {
        for (auto sh : detail::grid_of(cfg, {{4, 9}})) {
            if (sh.k < 3) {
                r.notes.push_back(detail::cell(sh) + " skipped: plane polygons need k >= 3");
                continue;
            }
            RationalSampler rs(cfg.seed + 11000 + 100 * sh.k + sh.n);
            auto s = detail::regular_state(rs, sh);
            auto target = map_T(shift(s, sh.rprime + 1));
            int found = 0;
            for (int b = 0; b < plane_branch_count(sh.k); ++b) {
                std::string tag = detail::cell(sh) + " branch " + std::to_string(b);
                auto P = reconstruct_plane_polygon(s, b);
                ++found;
                r.expect(coords_distance(plane_coords(P, sh.k), s) < 1e-8, tag + " psi");
                double d = coords_distance(plane_coords(skip_diagonal_map(P, sh.k), sh.k), target);
                r.expect(d < 1e-8, tag + " conjugacy, deviation " + std::to_string(d));
            }
            int expected = 1;
            for (int j = 0; j < 3; ++j) expected = expected * (sh.k - j) / (j + 1);
            r.expect(found == expected, detail::cell(sh) + " branch count");
        }
    });
}

inline std::vector<std::function<Result(const Config&)>> criteria() {
    return {conservation,    involution, poisson_invariance, rank_and_casimirs, spectral_identities,     lax_representations,
            dynamics_algebra, geometry,  pentagram,          leapfrog,          plane_reconstruction};
}

}  // namespace pentagram::suite
