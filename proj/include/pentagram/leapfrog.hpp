#pragma once

#include <vector>

#include "dense.hpp"
#include "geometry.hpp"
#include "jet.hpp"
#include "state.hpp"

namespace pentagram {

/// Pair of twisted n-gons (S^-, S) in RP^1 with a common Moebius monodromy.
struct LeapfrogState {
    std::vector<RP1Point> S_minus, S;
    Mat<Rational> monodromy = Mat<Rational>::identity(2);

    int n() const { return static_cast<int>(S.size()); }

    static LeapfrogState closed(const std::vector<Rational>& minus, const std::vector<Rational>& cur) {
        if (minus.size() != cur.size()) throw InputError("leapfrog polygons differ in length");
        LeapfrogState st;
        for (const auto& a : minus) st.S_minus.push_back(RP1Point::affine(a));
        for (const auto& a : cur) st.S.push_back(RP1Point::affine(a));
        return st;
    }

    RP1Point minus_at(int i) const { return wrap(S_minus, i); }
    RP1Point at(int i) const { return wrap(S, i); }

    bool is_closed() const { return projectively_scalar(monodromy); }

private:
    static bool projectively_scalar(const Mat<Rational>& m) {
        return m(0, 1).is_zero() && m(1, 0).is_zero() && m(0, 0) == m(1, 1);
    }
    RP1Point wrap(const std::vector<RP1Point>& seq, int i) const {
        const int N = n();
        int q = (i - 1 >= 0) ? (i - 1) / N : -((N - i) / N);
        const RP1Point& p = seq[static_cast<std::size_t>(i - 1 - q * N)];
        if (q == 0) return p;
        Mat<Rational> g = Mat<Rational>::identity(2), step = q > 0 ? monodromy : monodromy.inverse();
        for (int t = 0; t < (q > 0 ? q : -q); ++t) g = g * step;
        auto v = g * std::vector<Rational>{p.u, p.v};
        return {v[0], v[1]};
    }
};

/// Projective involution fixing `fixed` and swapping a <-> b.
inline Mat<Rational> leapfrog_involution(const RP1Point& a, const RP1Point& fixed, const RP1Point& b) {
    auto B = Mat<Rational>::from_columns({{a.u, a.v}, {b.u, b.v}});
    if (B.det().is_zero()) throw SingularConfiguration("S_{i-1} = S_{i+1}");
    auto adj = B.adjugate();
    auto c = adj * std::vector<Rational>{fixed.u, fixed.v};
    if (c[0].is_zero() || c[1].is_zero()) throw SingularConfiguration("S_i coincides with a neighbour");
    Mat<Rational> mid(2, 2);
    mid(0, 1) = c[0] * c[0];
    mid(1, 0) = c[1] * c[1];
    return B * mid * adj;
}

inline RP1Point apply(const Mat<Rational>& g, const RP1Point& p) {
    auto v = g * std::vector<Rational>{p.u, p.v};
    return {v[0], v[1]};
}

/// S^+_i from the local rule at i.
inline RP1Point leapfrog_point(const LeapfrogState& st, int i) {
    RP1Point m = st.minus_at(i), s = st.at(i);
    if (det2(m, s).is_zero()) throw SingularConfiguration("S^-_i = S_i at index " + std::to_string(i));
    return apply(leapfrog_involution(st.at(i - 1), s, st.at(i + 1)), m);
}

/// (S^-, S) -> (S, S^+).
inline LeapfrogState leapfrog_step(const LeapfrogState& st) {
    LeapfrogState out;
    out.monodromy = st.monodromy;
    out.S_minus = st.S;
    for (int i = 1; i <= st.n(); ++i) out.S.push_back(leapfrog_point(st, i));
    return out;
}

/// Affine oracle: 1/(S^+ - S) = 1/(S_{i+1} - S) + 1/(S_{i-1} - S) - 1/(S^- - S).
template <class T>
T leapfrog_affine(const T& prev, const T& mid, const T& next, const T& minus) {
    T b = T(1) / (next - mid) + T(1) / (prev - mid) - T(1) / (minus - mid);
    if (is_zero(value_of(b))) throw SingularConfiguration("S^+ at infinity");
    return mid + T(1) / b;
}

/// Closed polygons in an affine chart.
template <class T>
std::vector<T> leapfrog_affine_step(const std::vector<T>& minus, const std::vector<T>& cur) {
    const int n = static_cast<int>(cur.size());
    std::vector<T> out;
    for (int i = 1; i <= n; ++i)
        out.push_back(leapfrog_affine(cur[cyc(i - 1, n)], cur[cyc(i, n)], cur[cyc(i + 1, n)], minus[cyc(i, n)]));
    return out;
}

/// Left side of the Men2 relation; equals -1 on orbits.
inline Rational men2_value(const RP1Point& prev, const RP1Point& mid, const RP1Point& next, const RP1Point& minus,
                           const RP1Point& plus) {
    Rational den = det2(plus, mid) * det2(next, mid) * det2(minus, prev);
    if (den.is_zero()) throw SingularConfiguration("Men2 denominator vanishes");
    return det2(plus, next) * det2(mid, minus) * det2(mid, prev) / den;
}

/// Left side of the Men3 relation; equals -1 on orbits.
inline Rational men3_value(const RP1Point& prev, const RP1Point& mid, const RP1Point& next, const RP1Point& minus,
                           const RP1Point& plus) {
    Rational den = det2(plus, mid) * det2(mid, prev) * det2(minus, next);
    if (den.is_zero()) throw SingularConfiguration("Men3 denominator vanishes");
    return det2(plus, prev) * det2(mid, minus) * det2(next, mid) / den;
}

/// LHS - RHS of the Men1 relation (affine, finite points).
inline Rational men1_residual(const Rational& prev, const Rational& mid, const Rational& next, const Rational& minus,
                             const Rational& plus) {
    return Rational(1) / (plus - mid) + Rational(1) / (minus - mid) - Rational(1) / (next - mid) -
           Rational(1) / (prev - mid);
}

/// Corrugation coordinates (k = 2) of a leapfrog pair.
inline XYState<Rational> leapfrog_coords(const LeapfrogState& st) {
    const int n = st.n();
    auto d = [](const RP1Point& a, const RP1Point& b) { return det2(a, b); };
    std::vector<Rational> x, y;
    for (int i = 1; i <= n; ++i) {
        RP1Point m0 = st.minus_at(i), m1 = st.minus_at(i + 1), m2 = st.minus_at(i + 2);
        RP1Point s1 = st.at(i + 1), s2 = st.at(i + 2);
        Rational dx = d(m0, s1) * d(m1, m2);
        Rational dy = d(m1, s2) * dx;
        if (dx.is_zero() || dy.is_zero()) throw SingularConfiguration("leapfrog coordinates undefined at " + std::to_string(i));
        x.push_back(d(s1, m2) * d(m0, m1) / dx);
        y.push_back(d(m1, s1) * d(m2, s2) * d(m0, m1) / dy);
    }
    return XYState<Rational>(MapShape::make(2, n), std::move(x), std::move(y));
}

/// Moebius image of every point, monodromy conjugated.
inline LeapfrogState transform(const LeapfrogState& st, const Mat<Rational>& g) {
    if (g.det().is_zero()) throw SingularConfiguration("singular Moebius map");
    LeapfrogState out;
    for (const auto& p : st.S_minus) out.S_minus.push_back(apply(g, p));
    for (const auto& p : st.S) out.S.push_back(apply(g, p));
    out.monodromy = g * st.monodromy * g.inverse();
    return out;
}

/// d/dS_i of L(S^-, S) + L(S, S^+) with L(S^-, S) = sum ln|S_i - S_{i+1}| - sum ln|S_i - S^-_i|.
inline std::vector<Rational> lagrangian_residual(const std::vector<Rational>& prev, const std::vector<Rational>& cur,
                                                 const std::vector<Rational>& next) {
    const int n = static_cast<int>(cur.size());
    if (static_cast<int>(prev.size()) != n || static_cast<int>(next.size()) != n)
        throw InputError("lagrangian_residual: length mismatch");
    std::vector<Rational> out;
    try {
        for (int i = 1; i <= n; ++i) {
            const Rational& s = cur[cyc(i, n)];
            out.push_back(Rational(1) / (s - cur[cyc(i + 1, n)]) + Rational(1) / (s - cur[cyc(i - 1, n)]) -
                          Rational(1) / (s - prev[cyc(i, n)]) - Rational(1) / (s - next[cyc(i, n)]));
        }
    } catch (const ZeroDivision&) {
        throw SingularConfiguration("coincident points in lagrangian_residual");
    }
    return out;
}

/// omega(u, v) with omega = sum dS^-_i ^ dS_i / (S^-_i - S_i)^2; tangent vectors list dS^- then dS.
inline Rational two_form_value(const std::vector<Rational>& minus, const std::vector<Rational>& cur,
                               const std::vector<Rational>& u, const std::vector<Rational>& v) {
    const std::size_t n = cur.size();
    if (u.size() != 2 * n || v.size() != 2 * n) throw InputError("tangent vectors must have length 2n");
    Rational w;
    for (std::size_t i = 0; i < n; ++i) {
        Rational d = minus[i] - cur[i];
        if (d.is_zero()) throw SingularConfiguration("S^-_i = S_i");
        w += (u[i] * v[n + i] - v[i] * u[n + i]) / (d * d);
    }
    return w;
}

/// Pushforward of u under the affine leapfrog map at (minus, cur), exact via jets.
inline std::vector<Rational> leapfrog_differential(const std::vector<Rational>& minus, const std::vector<Rational>& cur,
                                                   const std::vector<Rational>& u) {
    std::vector<Rational> point(minus);
    point.insert(point.end(), cur.begin(), cur.end());
    auto J = seed(point);
    const std::size_t n = cur.size();
    std::vector<Jet> jm(J.begin(), J.begin() + n), jc(J.begin() + n, J.end());
    auto jp = leapfrog_affine_step(jm, jc);
    std::vector<Jet> img(jc);
    img.insert(img.end(), jp.begin(), jp.end());
    std::vector<Rational> out;
    for (const auto& f : img) {
        Rational s;
        for (std::size_t a = 0; a < u.size(); ++a) s += f.d(a) * u[a];
        out.push_back(s);
    }
    return out;
}

struct ComplexQuadruple {
    GaussRational s_prev, s_mid, s_next, s_minus;
};

/// S^+ from the Men2 relation over Gaussian rationals.
inline GaussRational circle_pattern_plus(const ComplexQuadruple& q) {
    GaussRational A = (q.s_mid - q.s_minus) * (q.s_mid - q.s_prev);
    GaussRational B = (q.s_next - q.s_mid) * (q.s_minus - q.s_prev);
    if ((A + B).is_zero()) throw SingularConfiguration("S^+ at infinity");
    return (q.s_next * A + q.s_mid * B) / (A + B);
}

/// After w -> 1/(w - S_i) the four neighbours form a parallelogram.
inline bool circle_pattern_check(const ComplexQuadruple& q) {
    for (const auto* p : {&q.s_prev, &q.s_next, &q.s_minus})
        if (*p == q.s_mid) throw SingularConfiguration("S_i coincides with another point");
    GaussRational plus = circle_pattern_plus(q);
    if (plus == q.s_mid) throw SingularConfiguration("S^+ = S_i");
    auto w = [&](const GaussRational& z) { return GaussRational(1) / (z - q.s_mid); };
    return w(q.s_prev) + w(q.s_next) == w(q.s_minus) + w(plus);
}

}  // namespace pentagram
