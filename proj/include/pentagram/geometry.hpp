#pragma once

#include <array>
#include <string>
#include <vector>

#include "dense.hpp"
#include "dynamics.hpp"

namespace pentagram {

using Vec = std::vector<Rational>;

/// Twisted polygon: lifts V_1..V_n with V_{i+n} = M V_i. The corrugation parameter k may differ from the dimension.
struct LiftedPolygon {
    int k = 0;
    std::vector<Vec> vertices;
    Mat<Rational> monodromy;

    int n() const { return static_cast<int>(vertices.size()); }
    int dim() const { return monodromy.rows(); }

    /// V_i for any integer i, applying powers of the monodromy outside 1..n.
    Vec at(int i) const {
        const int N = n();
        int q = (i - 1 >= 0) ? (i - 1) / N : -((N - i) / N);
        Vec v = vertices[static_cast<std::size_t>(i - 1 - q * N)];
        if (q > 0)
            for (int t = 0; t < q; ++t) v = monodromy * v;
        else if (q < 0) {
            Mat<Rational> inv = monodromy.inverse();
            for (int t = 0; t < -q; ++t) v = inv * v;
        }
        return v;
    }
};

namespace detail {

inline Vec axpy(const Rational& a, const Vec& x, const Vec& y) {
    Vec r(y);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += a * x[i];
    return r;
}

inline Vec lin(std::initializer_list<std::pair<Rational, const Vec*>> terms) {
    Vec r((*terms.begin()->second).size());
    for (const auto& [c, v] : terms)
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += c * (*v)[i];
    return r;
}

inline Rational det2(const Rational& a0, const Rational& a1, const Rational& b0, const Rational& b1) {
    return a0 * b1 - a1 * b0;
}

}  // namespace detail

/// Lift with V_1..V_k the standard basis and V_{i+k} = y_{i-1} V_i + x_i V_{i+1} + V_{i+k-1}.
inline LiftedPolygon polygon_from_xy(const XYState<Rational>& s) {
    const int k = s.shape.k, n = s.shape.n;
    std::vector<Vec> V;
    for (int j = 0; j < k; ++j) {
        Vec e(k);
        e[j] = Rational(1);
        V.push_back(std::move(e));
    }
    for (int i = 1; i <= n; ++i)
        V.push_back(detail::lin({{s.y(i - 1), &V[i - 1]}, {s.x(i), &V[i]}, {Rational(1), &V[i + k - 2]}}));
    LiftedPolygon p;
    p.k = k;
    p.vertices.assign(V.begin(), V.begin() + n);
    p.monodromy = Mat<Rational>::from_columns(std::vector<Vec>(V.begin() + n, V.begin() + n + k));
    if (p.monodromy.det().is_zero()) throw DegeneratePolygon("monodromy is singular");
    return p;
}

/// Coefficients (a_{i+k-1}, b_{i+1}, c_i) of V_{i+k} = a V_{i+k-1} + b V_{i+1} + c V_i.
inline std::array<Rational, 3> recurrence_coeffs(const LiftedPolygon& p, int i) {
    const int k = p.k;
    if (k < 3) throw InputError("corrugated polygon coordinates need k >= 3");
    auto A = Mat<Rational>::from_columns({p.at(i + k - 1), p.at(i + 1), p.at(i)});
    auto sol = A.solve(p.at(i + k));
    if (!sol) throw DegeneratePolygon("no corrugation relation at index " + std::to_string(i));
    return {(*sol)[0], (*sol)[1], (*sol)[2]};
}

/// Corrugation coordinates (x, y) of any lift of the polygon.
inline XYState<Rational> xy_from_polygon(const LiftedPolygon& p) {
    const int k = p.k, n = p.n();
    std::vector<std::array<Rational, 3>> c;
    for (int i = 1; i <= n; ++i) c.push_back(recurrence_coeffs(p, i));
    auto a = [&](int j) { return c[cyc(j - k + 1, n)][0]; };
    auto b = [&](int j) { return c[cyc(j - 1, n)][1]; };
    auto cc = [&](int j) { return c[cyc(j, n)][2]; };
    std::vector<Rational> x, y;
    for (int i = 1; i <= n; ++i) {
        Rational pa(1);
        for (int j = i + 1; j <= i + k - 1; ++j) pa *= a(j);
        if (pa.is_zero() || a(i + k).is_zero()) throw DegeneratePolygon("vanishing a-coefficient");
        x.push_back(b(i + 1) / pa);
        y.push_back(cc(i + 1) / (pa * a(i + k)));
    }
    return XYState<Rational>(MapShape::make(k, n), std::move(x), std::move(y));
}

/// Rescales the lift so that every a-coefficient equals 1.
inline LiftedPolygon normalize_lift(const LiftedPolygon& p) {
    const int k = p.k, n = p.n();
    std::vector<Rational> a;
    for (int i = 1; i <= n; ++i) a.push_back(recurrence_coeffs(p, i)[0]);
    // a[i-1] is a_{i+k-1}; t_{j+1} = t_j / a_j
    auto a_at = [&](int j) { return a[cyc(j - k + 1, n)]; };
    LiftedPolygon out = p;
    Rational t(1);
    for (int j = 1; j <= n; ++j) {
        for (auto& c : out.vertices[j - 1]) c *= t;
        if (a_at(j).is_zero()) throw DegeneratePolygon("vanishing a-coefficient");
        t /= a_at(j);
    }
    out.monodromy = p.monodromy.scaled(t);
    return out;
}

/// Projective equality vertex by vertex.
inline bool polygons_projectively_equal(const LiftedPolygon& a, const LiftedPolygon& b) {
    if (a.n() != b.n() || a.dim() != b.dim()) return false;
    for (int i = 1; i <= a.n(); ++i)
        if (!projectively_equal(a.at(i), b.at(i))) return false;
    return true;
}

/// New polygon with V'_i = V_{i+m}.
inline LiftedPolygon reindex(const LiftedPolygon& p, int m) {
    LiftedPolygon out = p;
    for (int i = 1; i <= p.n(); ++i) out.vertices[i - 1] = p.at(i + m);
    return out;
}

/// Indices i where V_{i+k} is not in span(V_i, V_{i+1}, V_{i+k-1}).
inline std::vector<int> corrugation_residual(const LiftedPolygon& p) {
    std::vector<int> bad;
    for (int i = 1; i <= p.n(); ++i) {
        auto A = Mat<Rational>::from_columns({p.at(i), p.at(i + 1), p.at(i + p.k - 1), p.at(i + p.k)});
        if (A.rank() > 3) bad.push_back(i);
    }
    return bad;
}

/// Closed form of F: V'_i = V_{i+k} - x_i V_{i+1} on the normalized lift.
inline LiftedPolygon map_F(const LiftedPolygon& p) {
    auto q = normalize_lift(p);
    auto s = xy_from_polygon(q);
    LiftedPolygon out = q;
    for (int i = 1; i <= q.n(); ++i) out.vertices[i - 1] = detail::axpy(-s.x(i), q.at(i + 1), q.at(i + q.k));
    return out;
}

/// Closed form of G: G_i = y_{i-1} V_i + x_i V_{i+1} on the normalized lift.
inline LiftedPolygon map_G(const LiftedPolygon& p) {
    auto q = normalize_lift(p);
    auto s = xy_from_polygon(q);
    LiftedPolygon out = q;
    for (int i = 1; i <= q.n(); ++i) {
        Vec a = q.at(i), b = q.at(i + 1);
        out.vertices[i - 1] = detail::lin({{s.y(i - 1), &a}, {s.x(i), &b}});
    }
    return out;
}

/// Point of line(a, b) meeting line(c, d), from the one-dimensional kernel of [a b -c -d].
inline Vec intersect_lines(const Vec& a, const Vec& b, const Vec& c, const Vec& d) {
    Vec mc(c), md(d);
    for (auto& v : mc) v = -v;
    for (auto& v : md) v = -v;
    auto ker = Mat<Rational>::from_columns({a, b, mc, md}).nullspace();
    if (ker.size() != 1) throw DegeneratePolygon("lines do not meet in a single point");
    Vec out = detail::lin({{ker[0][0], &a}, {ker[0][1], &b}});
    bool nz = false;
    for (const auto& v : out) nz = nz || !v.is_zero();
    if (!nz) throw DegeneratePolygon("intersection is the zero vector");
    return out;
}

/// F by geometry: intersection of the diagonals (V_i, V_{i+k-1}) and (V_{i+1}, V_{i+k}).
inline LiftedPolygon map_F_oracle(const LiftedPolygon& p) {
    LiftedPolygon out = p;
    for (int i = 1; i <= p.n(); ++i)
        out.vertices[i - 1] = intersect_lines(p.at(i), p.at(i + p.k - 1), p.at(i + 1), p.at(i + p.k));
    return out;
}

/// G by geometry: intersection of the lines (V_i, V_{i+1}) and (V_{i+k-1}, V_{i+k}).
inline LiftedPolygon map_G_oracle(const LiftedPolygon& p) {
    LiftedPolygon out = p;
    for (int i = 1; i <= p.n(); ++i)
        out.vertices[i - 1] = intersect_lines(p.at(i), p.at(i + 1), p.at(i + p.k - 1), p.at(i + p.k));
    return out;
}

/// Dual polygon W_i = V_i ^ ... ^ V_{i+k-2}, as the covector u -> det[V_i .. V_{i+k-2}, u].
inline LiftedPolygon dualize(const LiftedPolygon& p) {
    const int k = p.dim();
    if (k != p.k) throw DegeneratePolygon("dualize needs dimension equal to k");
    LiftedPolygon out;
    out.k = p.k;
    for (int i = 1; i <= p.n(); ++i) {
        std::vector<Vec> cols;
        for (int j = 0; j + 1 < k; ++j) cols.push_back(p.at(i + j));
        Vec w(k);
        for (int e = 0; e < k; ++e) {
            Vec unit(k);
            unit[e] = Rational(1);
            auto c2 = cols;
            c2.push_back(unit);
            w[e] = Mat<Rational>::from_columns(c2).det();
        }
        out.vertices.push_back(std::move(w));
    }
    out.monodromy = p.monodromy.inverse().transpose().scaled(p.monodromy.det());
    return out;
}

/// Homogeneous point of RP^1.
struct RP1Point {
    Rational u, v;
    static RP1Point affine(Rational a) { return {std::move(a), Rational(1)}; }
    static RP1Point infinity() { return {Rational(1), Rational(0)}; }
    bool is_infinite() const { return v.is_zero(); }
    Rational affine_value() const {
        if (v.is_zero()) throw SingularConfiguration("point at infinity has no affine value");
        return u / v;
    }
    friend bool operator==(const RP1Point& a, const RP1Point& b) { return (a.u * b.v - a.v * b.u).is_zero(); }
    friend bool operator!=(const RP1Point& a, const RP1Point& b) { return !(a == b); }
};

inline Rational det2(const RP1Point& a, const RP1Point& b) { return a.u * b.v - a.v * b.u; }

/// [a,b,c,d] = (a-b)(c-d) / ((a-d)(b-c)) via 2x2 determinants.
inline Rational cross_ratio(const RP1Point& a, const RP1Point& b, const RP1Point& c, const RP1Point& d) {
    Rational den = det2(a, d) * det2(b, c);
    if (den.is_zero()) throw DegenerateQuadruple("cross-ratio denominator vanishes");
    return det2(a, b) * det2(c, d) / den;
}

/// Coordinates of w in the basis (e, f) of the plane they span.
inline RP1Point on_line(const Vec& e, const Vec& f, const Vec& w) {
    auto sol = Mat<Rational>::from_columns({e, f}).solve(w);
    if (!sol) throw DegeneratePolygon("point is not on the line");
    return {(*sol)[0], (*sol)[1]};
}

/// p_i = [V_{i+1}, V'_i, V_{i+k}, V'_{i+1}] and q_{i-r-1} = [P_i, V_{i+1}, Q_i, V_i], with V' the F-vertices,
/// Q_i the G-vertex i and P_i the G-vertex i-k+1.
inline PQState<Rational> cross_ratio_coords(const LiftedPolygon& p) {
    const int k = p.k, n = p.n();
    MapShape sh = MapShape::make(k, n);
    auto F = map_F_oracle(p);
    auto G = map_G_oracle(p);
    std::vector<Rational> pv(n), qv(n);
    for (int i = 1; i <= n; ++i) {
        Vec a = p.at(i + 1), b = p.at(i + k);
        pv[cyc(i, n)] = cross_ratio(on_line(a, b, a), on_line(a, b, F.at(i)), on_line(a, b, b),
                                    on_line(a, b, F.at(i + 1)));
        Vec c = p.at(i), d = p.at(i + 1);
        qv[cyc(i - sh.r - 1, n)] = cross_ratio(on_line(c, d, G.at(i - k + 1)), on_line(c, d, d),
                                               on_line(c, d, G.at(i)), on_line(c, d, c));
    }
    return PQState<Rational>(sh, std::move(pv), std::move(qv));
}

}  // namespace pentagram
