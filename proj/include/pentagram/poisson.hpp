#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dynamics.hpp"
#include "jet.hpp"
#include "random.hpp"
#include "rank.hpp"

namespace pentagram {

using IntMat = std::vector<std::vector<int>>;

namespace detail {

/// Adds s * C^m to the n x n block at (r0, c0), where C^m_{ij} = 1 iff j = i + m (mod n).
inline void add_shift_power(IntMat& a, int r0, int c0, int n, int m, int s) {
    for (int i = 0; i < n; ++i) a[r0 + i][c0 + (((i + m) % n) + n) % n] += s;
}

}  // namespace detail

/// Quiver on p_1..p_n, q_1..q_n as a skew-adjacency matrix.
struct Quiver {
    MapShape shape;
    IntMat A;
};

inline Quiver build_quiver(MapShape s) {
    const int n = s.n, r = s.r, rp = s.rprime;
    Quiver Q{s, IntMat(2 * n, std::vector<int>(2 * n, 0))};
    IntMat B(n, std::vector<int>(n, 0));
    detail::add_shift_power(B, 0, 0, n, -r - 1, 1);
    detail::add_shift_power(B, 0, 0, n, rp + 1, 1);
    detail::add_shift_power(B, 0, 0, n, -r, -1);
    detail::add_shift_power(B, 0, 0, n, rp, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Q.A[i][n + j] = B[i][j];
            Q.A[n + j][i] = -B[i][j];
        }
    return Q;
}

/// {v_a, v_b} = a_ab v_a v_b for 0-based labels (p_1..p_n, q_1..q_n).
template <class T>
T bracket_pq(const Quiver& Q, const PQState<T>& s, int a, int b) {
    auto v = flatten(s);
    return T(Q.A.at(a).at(b)) * v.at(a) * v.at(b);
}

/// Log-canonical bracket on (x_1..x_n, y_1..y_n): {log u_a, log u_b} = Omega_ab.
struct BracketSpec {
    MapShape shape;
    IntMat Omega;
};

inline BracketSpec build_bracket_xy(MapShape s) {
    if (!s.stable())
        throw UnstableRange("bracket needs n >= 2k-1 (k=" + std::to_string(s.k) + ", n=" + std::to_string(s.n) + ")");
    const int n = s.n, k = s.k;
    BracketSpec b{s, IntMat(2 * n, std::vector<int>(2 * n, 0))};
    auto& W = b.Omega;
    for (int i = 1; i <= k - 2; ++i) {
        detail::add_shift_power(W, 0, 0, n, -i, 1);
        detail::add_shift_power(W, 0, 0, n, i, -1);
    }
    for (int i = 1; i <= k - 1; ++i) {
        detail::add_shift_power(W, n, n, n, -i, 1);
        detail::add_shift_power(W, n, n, n, i, -1);
        detail::add_shift_power(W, n, 0, n, 1 - i, 1);
        detail::add_shift_power(W, n, 0, n, i, -1);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) W[j][n + i] = -W[n + i][j];
    return b;
}

inline int poisson_rank(MapShape s) {
    return int_matrix_rank(build_bracket_xy(s).Omega);
}

/// Exponent vectors over (x, y) of the 2d Casimir monomials.
inline std::vector<std::vector<int>> casimirs(MapShape s) {
    if (!s.stable()) throw UnstableRange("casimirs need n >= 2k-1");
    const int n = s.n, d = s.d();
    std::vector<std::vector<int>> out;
    for (int part = 0; part < 2; ++part)
        for (int st = 1; st <= d; ++st) {
            std::vector<int> e(2 * n, 0);
            for (int i = 0; i < n / d; ++i) e[part * n + cyc(st + i * (s.k - 1), n)] += 1;
            out.push_back(std::move(e));
        }
    return out;
}

/// {f, g} = sum_ab W_ab u_a u_b df/du_a dg/du_b for a constant log-canonical matrix W.
inline Rational log_canonical_bracket(const IntMat& W, const std::vector<Rational>& u, const Jet& f, const Jet& g) {
    const int m = static_cast<int>(u.size());
    std::vector<Rational> uf(m), ug(m);
    for (int a = 0; a < m; ++a) {
        uf[a] = u[a] * f.d(a);
        ug[a] = u[a] * g.d(a);
    }
    Rational acc;
    for (int a = 0; a < m; ++a) {
        if (uf[a].is_zero()) continue;
        for (int b = 0; b < m; ++b)
            if (W[a][b] != 0 && !ug[b].is_zero()) acc += Rational(W[a][b]) * uf[a] * ug[b];
    }
    return acc;
}

/// Jets of the coordinates of s.
inline XYState<Jet> seed_state(const XYState<Rational>& s) {
    return unflatten_xy(s.shape, seed(flatten(s)));
}
inline PQState<Jet> seed_state(const PQState<Rational>& s) {
    return unflatten_pq(s.shape, seed(flatten(s)));
}

/// Evaluates {f, g} at s for f, g taking XYState<Jet> to Jet.
template <class F, class G>
Rational bracket_fn(const BracketSpec& b, F&& f, G&& g, const XYState<Rational>& s) {
    auto js = seed_state(s);
    return log_canonical_bracket(b.Omega, flatten(s), f(js), g(js));
}

struct InvarianceReport {
    int trials = 0;
    int checked_pairs = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks {T_a, T_b} = W_ab T_a T_b for all pairs on the image coordinates.
inline void check_log_canonical_image(const IntMat& W, const std::vector<Rational>& u, const std::vector<Jet>& img,
                                      InvarianceReport& rep, const std::string& tag) {
    const int m = static_cast<int>(img.size());
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            ++rep.checked_pairs;
            Rational lhs = log_canonical_bracket(W, u, img[a], img[b]);
            Rational rhs = Rational(W[a][b]) * img[a].value() * img[b].value();
            if (lhs != rhs)
                rep.violations.push_back(tag + " pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
}

/// The (x,y) bracket is preserved by map_T on random regular states.
inline InvarianceReport check_T_invariance(MapShape shape, int trials, std::uint64_t seed) {
    auto b = build_bracket_xy(shape);
    InvarianceReport rep;
    for (int t = 0; t < trials; ++t) {
        RationalSampler rs(seed + static_cast<std::uint64_t>(t));
        auto s = rs.until([&](RationalSampler& g) { return g.xy(shape); },
                          [](const XYState<Rational>& st) { map_T(st); return true; });
        auto img = flatten(map_T(seed_state(s)));
        check_log_canonical_image(b.Omega, flatten(s), img, rep, "trial " + std::to_string(t));
        ++rep.trials;
    }
    return rep;
}

/// The quiver bracket is preserved by map_Tbar on random states of arbitrary level.
inline InvarianceReport check_Tbar_invariance(MapShape shape, int trials, std::uint64_t seed) {
    auto Q = build_quiver(shape);
    InvarianceReport rep;
    for (int t = 0; t < trials; ++t) {
        RationalSampler rs(seed + static_cast<std::uint64_t>(t));
        auto s = rs.until([&](RationalSampler& g) { return g.pq(shape); },
                          [](const PQState<Rational>& st) { map_Tbar(st); return true; });
        auto img = flatten(map_Tbar(seed_state(s)));
        check_log_canonical_image(Q.A, flatten(s), img, rep, "trial " + std::to_string(t));
        ++rep.trials;
    }
    return rep;
}

/// Pushing the (x,y) bracket through project_pq gives the quiver bracket.
inline InvarianceReport check_pushforward(MapShape shape, int trials, std::uint64_t seed) {
    auto b = build_bracket_xy(shape);
    auto Q = build_quiver(shape);
    InvarianceReport rep;
    for (int t = 0; t < trials; ++t) {
        RationalSampler rs(seed + static_cast<std::uint64_t>(t));
        auto s = rs.xy(shape);
        auto img = flatten(project_pq(seed_state(s)));
        const int m = static_cast<int>(img.size());
        for (int a = 0; a < m; ++a)
            for (int c = a + 1; c < m; ++c) {
                ++rep.checked_pairs;
                Rational lhs = log_canonical_bracket(b.Omega, flatten(s), img[a], img[c]);
                Rational rhs = Rational(Q.A[a][c]) * img[a].value() * img[c].value();
                if (lhs != rhs)
                    rep.violations.push_back("trial " + std::to_string(t) + " pair (" + std::to_string(a) + "," +
                                             std::to_string(c) + ")");
            }
        ++rep.trials;
    }
    return rep;
}

/// Every Casimir monomial brackets to zero with every coordinate.
inline bool casimirs_central(MapShape shape, const XYState<Rational>& s) {
    auto b = build_bracket_xy(shape);
    auto u = flatten(s);
    auto js = seed(u);
    for (const auto& e : casimirs(shape)) {
        Jet c(Rational(1));
        for (std::size_t a = 0; a < e.size(); ++a)
            for (int p = 0; p < e[a]; ++p) c *= js[a];
        for (const auto& coord : js)
            if (!log_canonical_bracket(b.Omega, u, c, coord).is_zero()) return false;
    }
    return true;
}

}  // namespace pentagram
