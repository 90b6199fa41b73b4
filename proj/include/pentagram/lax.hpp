#pragma once

#include <vector>

#include "dynamics.hpp"
#include "jet.hpp"
#include "polymatrix.hpp"

namespace pentagram {

namespace detail {

template <class T>
BiPoly<T> lam(const T& c) {
    return BiPoly<T>::monomial(c, 1, 0);
}

}  // namespace detail

/// Lax matrix L_i(lambda), k x k.
template <class T>
PolyMatrix<T> lax_L(const XYState<T>& s, int i) {
    const int k = s.shape.k;
    PolyMatrix<T> L(k, k);
    if (k == 2) {
        L(0, 0) = detail::lam(-s.x(i));
        L(0, 1) = BiPoly<T>(s.sigma(i));
        L(1, 0) = detail::lam(T(-1));
        L(1, 1) = BiPoly<T>(T(1));
        return L;
    }
    L(0, k - 2) = BiPoly<T>(s.x(i));
    L(0, k - 1) = BiPoly<T>(s.sigma(i));
    L(1, 0) = detail::lam(T(-1));
    for (int row = 2; row < k; ++row) L(row, row - 1) = BiPoly<T>(T(1));
    L(k - 1, k - 1) = BiPoly<T>(T(1));
    return L;
}

/// Ordered product L_{from} L_{from+1} ... L_{from+n-1}.
template <class T>
PolyMatrix<T> lax_product(const XYState<T>& s, int from) {
    auto M = PolyMatrix<T>::identity(s.shape.k);
    for (int i = from; i < from + s.shape.n; ++i) M = M * lax_L(s, i);
    return M;
}

/// M(lambda) = L_1 ... L_n.
template <class T>
PolyMatrix<T> monodromy_M(const XYState<T>& s) {
    return lax_product(s, 1);
}

/// Z = -z e_{n1} + sum e_{i,i+1}.
template <class T>
PolyMatrix<T> z_matrix(int n) {
    PolyMatrix<T> Z(n, n);
    for (int i = 0; i + 1 < n; ++i) Z(i, i + 1) = BiPoly<T>(T(1));
    Z(n - 1, 0) += BiPoly<T>::monomial(T(-1), 0, 1);
    return Z;
}

template <class T>
PolyMatrix<T> diag_of(const Cyclic<T>& d) {
    std::vector<BiPoly<T>> e;
    for (const auto& v : d.v) e.emplace_back(v);
    return PolyMatrix<T>::diagonal(e);
}

/// 1 + Z + ... + Z^{n-1}, which equals (1+z)(1-Z)^{-1}.
template <class T>
PolyMatrix<T> geometric_sum(const PolyMatrix<T>& Z) {
    int n = Z.rows();
    auto S = PolyMatrix<T>(n, n);
    auto P = PolyMatrix<T>::identity(n);
    for (int j = 0; j < n; ++j) {
        S += P;
        P = P * Z;
    }
    return S;
}

/// (1+z) A_{k,n}(z) = Z (D_x + D_y Z) Z^{k-2} (1 + Z + ... + Z^{n-1}).
template <class T>
PolyMatrix<T> boundary_A(const XYState<T>& s) {
    const int n = s.shape.n, k = s.shape.k;
    auto Z = z_matrix<T>(n);
    return Z * (diag_of(s.x) + diag_of(s.y) * Z) * Z.pow(k - 2) * geometric_sum(Z);
}

/// Case table for (1+z) a_ij(z) by the value of j - i.
template <class T>
PolyMatrix<T> boundary_A_oracle(const XYState<T>& s) {
    const int n = s.shape.n, k = s.shape.k;
    PolyMatrix<T> A(n, n);
    const auto z = BiPoly<T>::z();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            BiPoly<T> X(s.x(i + 1)), Y(s.y(i + 1));
            int d = j - i;
            BiPoly<T> v;
            if (d > k - 1) v = X + Y;
            else if (d == k - 1) v = X - z * Y;
            else if (k - n - 1 < d) v = -(z * (X + Y));
            else if (d == k - n - 1) v = -(z * (X - z * Y));
            else v = z * z * (X + Y);
            A(i - 1, j - 1) = v;
        }
    return A;
}

/// Spectral polynomial det(I_k + z M(lambda)) and its coefficients I_ij.
template <class T>
struct IntegralTable {
    MapShape shape;
    BiPoly<T> P;
    T I(int i, int j) const { return P.coeff(i, j); }
};

template <class T>
IntegralTable<T> spectral(const XYState<T>& s) {
    const int k = s.shape.k;
    auto M = monodromy_M(s).scaled(BiPoly<T>::z());
    return {s.shape, poly_det(PolyMatrix<T>::identity(k) + M)};
}

/// Right-hand side of the two-characteristic-polynomial identity, (1+z) det(I_n + lambda A(z)).
template <class T>
BiPoly<T> tcp_rhs(const XYState<T>& s) {
    const int n = s.shape.n;
    auto onez = BiPoly<T>(T(1)) + BiPoly<T>::z();
    auto lhs = PolyMatrix<T>::identity(n).scaled(onez) + boundary_A(s).scaled(BiPoly<T>::lambda());
    return divide_exact(poly_det(lhs), onez.pow(n - 1));
}

template <class T>
bool verify_tcp(const XYState<T>& s) {
    return spectral(s).P == tcp_rhs(s);
}

struct NewtonReport {
    bool inside_strip = true;
    bool vertices_present = true;
    std::vector<Exponent> casimir_positions;
    std::vector<Exponent> support;
};

/// Support lies in the parallelogram (0,0),(0,1),(n,k),(n,k-1); lists its boundary lattice points.
template <class T>
NewtonReport newton_polygon(const IntegralTable<T>& t) {
    const int n = t.shape.n, k = t.shape.k, d = t.shape.d();
    NewtonReport rep;
    for (const auto& [e, c] : t.P.terms()) {
        rep.support.push_back(e);
        auto [i, j] = e;
        // (k-1) i / n <= j <= (k-1) i / n + 1
        bool ok = i >= 0 && i <= n && (k - 1) * i <= j * n && j * n <= (k - 1) * i + n;
        rep.inside_strip = rep.inside_strip && ok;
    }
    for (Exponent v : {Exponent{0, 0}, Exponent{0, 1}, Exponent{n, k}, Exponent{n, k - 1}})
        rep.vertices_present = rep.vertices_present && !is_zero(t.P.coeff(v.first, v.second));
    for (int l = 0; l <= d; ++l) {
        rep.casimir_positions.push_back({l * n / d, l * (k - 1) / d});
        rep.casimir_positions.push_back({l * n / d, l * (k - 1) / d + 1});
    }
    return rep;
}

/// Expected corner coefficients: (-1)^{n(k-1)} prod x at lambda^n z^{k-1}, (-1)^{nk} prod y at lambda^n z^k.
template <class T>
std::pair<T, T> expected_corners(const XYState<T>& s) {
    const int n = s.shape.n, k = s.shape.k;
    T px(1), py(1);
    for (int i = 1; i <= n; ++i) {
        px *= s.x(i);
        py *= s.y(i);
    }
    if ((n * (k - 1)) % 2) px = -px;
    if ((n * k) % 2) py = -py;
    return {px, py};
}

/// lambda * P_i(lambda) for the zero-curvature representation, with the calibrated index.
template <class T>
PolyMatrix<T> zero_curvature_P(const XYState<T>& s, int i) {
    const int k = s.shape.k;
    PolyMatrix<T> P(k, k);
    auto inv_sigma = [&](int j) { return T(1) / s.sigma(j); };
    auto c = [](const T& v) { return BiPoly<T>(v); };
    auto l = [](const T& v) { return detail::lam(v); };
    if (k == 2) {
        P(0, 0) = l(-s.x(i - 1) * inv_sigma(i - 1)) + c(-inv_sigma(i));
        P(0, 1) = c(T(1));
        P(1, 0) = l(-inv_sigma(i));
        return P;
    }
    i -= s.shape.rprime + 1;
    if (k == 3) {
        P(0, 0) = c(inv_sigma(i + 1));
        P(0, 1) = c(-s.x(i) * inv_sigma(i));
        P(0, 2) = c(T(-1));
    } else {
        P(0, 1) = c(-s.x(i) * inv_sigma(i));
        P(0, 2) = c(-s.y(i + 1) * inv_sigma(i + 1));
        for (int j = 2; j <= k - 3; ++j) {
            P(j - 1, j) = l(s.x(i + j - 1) * inv_sigma(i + j - 1));
            P(j - 1, j + 1) = l(s.y(i + j) * inv_sigma(i + j));
        }
        P(k - 3, 0) = l(-inv_sigma(i + k - 2));
        P(k - 3, k - 2) = l(s.x(i + k - 3) * inv_sigma(i + k - 3));
        P(k - 3, k - 1) = l(T(1));
    }
    P(k - 2, 0) = l(inv_sigma(i + k - 2));
    P(k - 2, 1) = c(inv_sigma(i + k - 1));
    P(k - 1, 1) = c(-inv_sigma(i + k - 1));
    return P;
}

/// Offset c in L*_i P_{i+1} = P_i L_{i+c}.
inline int zero_curvature_offset(const MapShape& s) { return s.k == 2 ? 0 : s.r - 1; }

/// L*_i (lambda P_{i+1}) = (lambda P_i) L_{i+c} for all i, where L* is built from map_T(s).
template <class T>
bool zero_curvature_check(const XYState<T>& s) {
    auto ts = map_T(s);
    const int c = zero_curvature_offset(s.shape);
    for (int i = 1; i <= s.shape.n; ++i)
        if (lax_L(ts, i) * zero_curvature_P(s, i + 1) != zero_curvature_P(s, i) * lax_L(s, i + c)) return false;
    return true;
}

/// M* P_1 = P_1 (L_{1+c} ... L_{n+c}).
template <class T>
bool zero_curvature_monodromy_check(const XYState<T>& s) {
    auto ts = map_T(s);
    auto P1 = zero_curvature_P(s, 1);
    return monodromy_M(ts) * P1 == P1 * lax_product(s, 1 + zero_curvature_offset(s.shape));
}

/// Factors of A = A_1 A_2 with A_1 stored as N_1 = (1+z)(-z)^{r'} A_1.
template <class T>
struct Refactorization {
    PolyMatrix<T> N1, A2;
    int onez_exponent = 1;
    int negz_exponent = 0;
    bool product_12 = false;
    bool product_21 = false;
};

template <class T>
Refactorization<T> refactorization(const XYState<T>& s) {
    const int n = s.shape.n, k = s.shape.k, rp = s.shape.rprime;
    auto Z = z_matrix<T>(n);
    std::vector<BiPoly<T>> inv;
    for (int i = 1; i <= n; ++i) inv.emplace_back(detail::checked_inv(s.sigma(i), "sigma", i));
    auto Dsig = diag_of(s.x) + diag_of(s.y);
    Refactorization<T> f;
    f.negz_exponent = rp;
    f.N1 = Z * Dsig * geometric_sum(Z) * Z.pow((n - 1) * rp);
    f.A2 = Z.pow(rp) * (diag_of(s.x) + Z * diag_of(s.y)) * PolyMatrix<T>::diagonal(inv) * Z.pow(k - 2);
    auto negz = BiPoly<T>::monomial(T(-1), 0, 1).pow(rp);
    f.product_12 = f.N1 * f.A2 == boundary_A(s).scaled(negz);
    f.product_21 = f.A2 * f.N1 == boundary_A(shift(map_T(s), 2 * rp)).scaled(negz);
    return f;
}

/// Q_i(lambda): one step of the vertex recurrence.
template <class T>
PolyMatrix<T> monodromy_Q_step(const XYState<T>& s, int i) {
    const int k = s.shape.k;
    PolyMatrix<T> Q(k, k);
    for (int a = 0; a + 1 < k; ++a) Q(a, a + 1) = BiPoly<T>(T(1));
    Q(k - 1, 0) += detail::lam(s.y(i - 1));
    Q(k - 1, 1) += detail::lam(s.x(i));
    Q(k - 1, k - 1) += BiPoly<T>(T(1));
    return Q;
}

/// Q_n ... Q_1.
template <class T>
PolyMatrix<T> monodromy_Q(const XYState<T>& s) {
    auto M = PolyMatrix<T>::identity(s.shape.k);
    for (int i = 1; i <= s.shape.n; ++i) M = monodromy_Q_step(s, i) * M;
    return M;
}

/// det(I + z M_Q(lambda)) = det(I + z M(-lambda)), i.e. equal characteristic polynomials.
template <class T>
bool monodromy_Q_check(const XYState<T>& s) {
    const int k = s.shape.k;
    auto I = PolyMatrix<T>::identity(k);
    auto z = BiPoly<T>::z();
    return poly_det(I + monodromy_Q(s).scaled(z)) == poly_det(I + monodromy_M(s).negate_lambda().scaled(z));
}

/// Positions of the nonconstant coefficients.
template <class T>
std::vector<Exponent> integral_positions(const IntegralTable<T>& t) {
    std::vector<Exponent> out;
    for (const auto& [e, c] : t.P.terms())
        if (e != Exponent{0, 0} && e != Exponent{0, 1}) out.push_back(e);
    return out;
}

/// Nonconstant spectral coefficients as jets in (x_1..x_n, y_1..y_n).
inline std::vector<Jet> integral_jets(const XYState<Rational>& s) {
    auto P = spectral(unflatten_xy(s.shape, seed(flatten(s)))).P;
    std::vector<Jet> out;
    for (const auto& [e, c] : P.terms())
        if (e != Exponent{0, 0} && e != Exponent{0, 1}) out.push_back(c);
    return out;
}

}  // namespace pentagram
