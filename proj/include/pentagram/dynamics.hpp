#pragma once

#include <string>
#include <vector>

#include "state.hpp"

namespace pentagram {

namespace detail {

template <class T>
T checked_inv(const T& v, const char* what, int i) {
    if (is_zero(value_of(v))) throw SingularState(std::string(what) + " vanishes at index " + std::to_string(i));
    return T(1) / v;
}

template <class T, class F>
std::vector<T> tabulate(int n, F f) {
    std::vector<T> out;
    out.reserve(n);
    for (int i = 1; i <= n; ++i) out.push_back(f(i));
    return out;
}

}  // namespace detail

/// Index shift S_t: (S_t s)_i = s_{i+t}.
template <class T>
XYState<T> shift(const XYState<T>& s, int t) {
    int n = s.shape.n;
    return XYState<T>(s.shape, detail::tabulate<T>(n, [&](int i) { return s.x(i + t); }),
                      detail::tabulate<T>(n, [&](int i) { return s.y(i + t); }));
}
template <class T>
PQState<T> shift(const PQState<T>& s, int t) {
    int n = s.shape.n;
    return PQState<T>(s.shape, detail::tabulate<T>(n, [&](int i) { return s.p(i + t); }),
                      detail::tabulate<T>(n, [&](int i) { return s.q(i + t); }));
}
template <class T>
CornerState<T> shift(const CornerState<T>& s, int t) {
    return CornerState<T>(detail::tabulate<T>(s.n, [&](int i) { return s.X(i + t); }),
                          detail::tabulate<T>(s.n, [&](int i) { return s.Y(i + t); }));
}

/// Same coordinates read with another shape (used by the cross-k identities).
template <class T>
XYState<T> reshape(const XYState<T>& s, int k) {
    return XYState<T>(MapShape::make(k, s.shape.n), s.x.v, s.y.v);
}
template <class T>
PQState<T> reshape(const PQState<T>& s, int k) {
    return PQState<T>(MapShape::make(k, s.shape.n), s.p.v, s.q.v);
}

/// x*_i = x_{i-r'-1} sigma_{i+r} / sigma_{i-r'-1},  y*_i = y_{i-r'} sigma_{i+r+1} / sigma_{i-r'}.
template <class T>
XYState<T> map_T(const XYState<T>& s) {
    const int n = s.shape.n, r = s.shape.r, rp = s.shape.rprime;
    std::vector<T> inv_sigma;
    for (int i = 1; i <= n; ++i) inv_sigma.push_back(detail::checked_inv(s.sigma(i), "sigma", i));
    Cyclic<T> is{inv_sigma};
    auto x = detail::tabulate<T>(n, [&](int i) { return s.x(i - rp - 1) * s.sigma(i + r) * is(i - rp - 1); });
    auto y = detail::tabulate<T>(n, [&](int i) { return s.y(i - rp) * s.sigma(i + r + 1) * is(i - rp); });
    return XYState<T>(s.shape, std::move(x), std::move(y));
}

/// Inverse of map_T (the map T-circle).
template <class T>
XYState<T> map_T_inv(const XYState<T>& s) {
    const int n = s.shape.n, r = s.shape.r, rp = s.shape.rprime;
    auto den = [&](int i) { return detail::checked_inv(s.x(i + rp + 1) + s.y(i + rp), "x_{i+r'+1}+y_{i+r'}", i); };
    auto num = [&](int i) { return s.x(i - r) + s.y(i - r - 1); };
    std::vector<T> x, y;
    for (int i = 1; i <= n; ++i) {
        T f = num(i) * den(i);
        x.push_back(s.x(i + rp + 1) * f);
        y.push_back(s.y(i + rp) * f);
    }
    return XYState<T>(s.shape, std::move(x), std::move(y));
}

/// Auxiliary map D_k. Empty products are 1.
template <class T>
XYState<T> map_D(const XYState<T>& s) {
    const int n = s.shape.n, r = s.shape.r, rp = s.shape.rprime;
    std::vector<T> ratio;
    for (int j = 1; j <= n; ++j) ratio.push_back(s.y(j) * detail::checked_inv(s.x(j), "x", j));
    Cyclic<T> q{ratio};
    auto prod = [&](int a, int b) {
        T p(1);
        for (int j = a; j <= b; ++j) p *= q(j);
        return p;
    };
    std::vector<T> x, y;
    for (int i = 1; i <= n; ++i) {
        x.push_back(prod(i - rp, i + r - 1) / s.x(i + r));
        y.push_back(prod(i - rp, i + r) / s.x(i + r + 1));
    }
    return XYState<T>(s.shape, std::move(x), std::move(y));
}

/// Auxiliary involution C_k; map_T = map_D after map_C.
template <class T>
XYState<T> map_C(const XYState<T>& s) {
    const int n = s.shape.n, k = s.shape.k;
    std::vector<T> ratio;
    for (int j = 1; j <= n; ++j) ratio.push_back(s.y(j) * detail::checked_inv(s.x(j), "x", j));
    Cyclic<T> q{ratio};
    std::vector<T> x, y;
    for (int i = 1; i <= n; ++i) {
        T pre = s.sigma(i - k + 1) * detail::checked_inv(s.x(i - k + 1) * s.sigma(i), "x sigma", i);
        for (int j = i - k + 2; j <= i - 1; ++j) pre *= q(j);
        x.push_back(pre);
        y.push_back(pre * q(i));
    }
    return XYState<T>(s.shape, std::move(x), std::move(y));
}

/// D_{m,n}: xbar_i = y_{i-r-1}, ybar_i = x_{i-r} with r taken from m; the result carries shape (m, n).
template <class T>
XYState<T> map_D_kn(const XYState<T>& s, int m) {
    MapShape out = MapShape::make(m, s.shape.n);
    const int r = out.r, n = out.n;
    return XYState<T>(out, detail::tabulate<T>(n, [&](int i) { return s.y(i - r - 1); }),
                      detail::tabulate<T>(n, [&](int i) { return s.x(i - r); }));
}

/// p_i = y_i / x_i, q_i = x_{i+r+1} / y_{i+r}.
template <class T>
PQState<T> project_pq(const XYState<T>& s) {
    const int n = s.shape.n, r = s.shape.r;
    std::vector<T> p, q;
    for (int i = 1; i <= n; ++i) {
        p.push_back(s.y(i) * detail::checked_inv(s.x(i), "x", i));
        q.push_back(s.x(i + r + 1) * detail::checked_inv(s.y(i + r), "y", i + r));
    }
    return PQState<T>(s.shape, std::move(p), std::move(q));
}

template <class T>
PQState<T> map_Tbar(const PQState<T>& s) {
    const int n = s.shape.n, r = s.shape.r, rp = s.shape.rprime;
    std::vector<T> inv1p;
    for (int i = 1; i <= n; ++i) inv1p.push_back(detail::checked_inv(T(1) + s.p(i), "1+p", i));
    Cyclic<T> w{inv1p};
    std::vector<T> p, q;
    for (int i = 1; i <= n; ++i) {
        p.push_back(s.q(i) * (T(1) + s.p(i - rp - 1)) * (T(1) + s.p(i + r + 1)) * s.p(i - rp) * s.p(i + r) * w(i - rp) *
                    w(i + r));
        q.push_back(detail::checked_inv(s.p(i + r - rp), "p", i + r - rp));
    }
    return PQState<T>(s.shape, std::move(p), std::move(q));
}

/// Inverse of map_Tbar (mutation at the q-vertices).
template <class T>
PQState<T> map_Tbar_circ(const PQState<T>& s) {
    const int n = s.shape.n, r = s.shape.r, rp = s.shape.rprime;
    std::vector<T> inv1q;
    for (int i = 1; i <= n; ++i) inv1q.push_back(detail::checked_inv(T(1) + s.q(i), "1+q", i));
    Cyclic<T> w{inv1q};
    std::vector<T> p, q;
    for (int i = 1; i <= n; ++i) {
        p.push_back(detail::checked_inv(s.q(i - r + rp), "q", i - r + rp));
        q.push_back(s.p(i) * (T(1) + s.q(i - r)) * (T(1) + s.q(i + rp)) * s.q(i - r - 1) * s.q(i + rp + 1) *
                    w(i - r - 1) * w(i + rp + 1));
    }
    return PQState<T>(s.shape, std::move(p), std::move(q));
}

/// pbar_i = 1/q_i, qbar_i = 1/p_{i+r-r'}.
template <class T>
PQState<T> map_Dbar(const PQState<T>& s) {
    const int n = s.shape.n, r = s.shape.r, rp = s.shape.rprime;
    return PQState<T>(s.shape, detail::tabulate<T>(n, [&](int i) { return detail::checked_inv(s.q(i), "q", i); }),
                      detail::tabulate<T>(n, [&](int i) { return detail::checked_inv(s.p(i + r - rp), "p", i); }));
}

/// Dbar_{k,n}: pbar_i = q_{i-h}, qbar_i = p_i with h = floor((n+r-r')/2) for r of k; result has shape (out_k, n).
template <class T>
PQState<T> map_Dbar_kn(const PQState<T>& s, int k, int out_k) {
    MapShape lab = MapShape::make(k, s.shape.n);
    const int n = lab.n, h = (n + lab.r - lab.rprime) / 2;
    return PQState<T>(MapShape::make(out_k, n), detail::tabulate<T>(n, [&](int i) { return s.q(i - h); }), s.p.v);
}

/// Corner-invariant form of the pentagram map.
template <class T>
CornerState<T> pentagram_corner(const CornerState<T>& s) {
    const int n = s.n;
    std::vector<T> inv;
    for (int i = 1; i <= n; ++i) inv.push_back(detail::checked_inv(T(1) - s.X(i) * s.Y(i), "1-X Y", i));
    Cyclic<T> w{inv};
    auto one_m = [&](int i) { return T(1) - s.X(i) * s.Y(i); };
    return CornerState<T>(detail::tabulate<T>(n, [&](int i) { return s.X(i) * one_m(i - 1) * w(i + 1); }),
                          detail::tabulate<T>(n, [&](int i) { return s.Y(i + 1) * one_m(i + 2) * w(i); }));
}

/// x_i = Y_i, y_i = -Y_i X_{i+1} Y_{i+1} (k = 3).
template <class T>
XYState<T> corner_to_xy(const CornerState<T>& s) {
    const int n = s.n;
    return XYState<T>(MapShape::make(3, n), s.Y.v,
                      detail::tabulate<T>(n, [&](int i) { return -(s.Y(i) * s.X(i + 1) * s.Y(i + 1)); }));
}

/// Shift relating the two conventions: corner_to_xy(S_sigma(pentagram(c))) = T_3(corner_to_xy(c)).
inline constexpr int kPentagramShift = -1;

}  // namespace pentagram
