#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace pentagram {

/// 0-based slot of the 1-based cyclic index i modulo n.
inline int cyc(int i, int n) { return (((i - 1) % n) + n) % n; }

struct MapShape {
    int k = 0, n = 0, r = 0, rprime = 0;

    static MapShape make(int k, int n) {
        if (k < 2 || n < k)
            throw InputError("shape requires 2 <= k <= n (got k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
        MapShape s;
        s.k = k;
        s.n = n;
        s.r = k / 2 - 1;
        s.rprime = k - 2 - s.r;
        return s;
    }
    int d() const { return std::gcd(k - 1, n); }
    bool stable() const { return n >= 2 * k - 1; }
    friend bool operator==(const MapShape& a, const MapShape& b) { return a.k == b.k && a.n == b.n; }
};

/// Sequence with 1-based cyclic indexing.
template <class T>
struct Cyclic {
    std::vector<T> v;
    const T& operator()(int i) const { return v[cyc(i, static_cast<int>(v.size()))]; }
    T& operator()(int i) { return v[cyc(i, static_cast<int>(v.size()))]; }
    int size() const { return static_cast<int>(v.size()); }
    friend bool operator==(const Cyclic& a, const Cyclic& b) { return a.v == b.v; }
};

template <class T>
struct XYState {
    MapShape shape;
    Cyclic<T> x, y;

    XYState() = default;
    XYState(MapShape s, std::vector<T> xs, std::vector<T> ys) : shape(s), x{std::move(xs)}, y{std::move(ys)} {
        if (x.size() != s.n || y.size() != s.n) throw InputError("XYState length does not match n");
    }
    T sigma(int i) const { return x(i) + y(i); }
    bool t_regular() const {
        for (int i = 1; i <= shape.n; ++i)
            if (is_zero(value_of(sigma(i)))) return false;
        return true;
    }
    friend bool operator==(const XYState& a, const XYState& b) { return a.shape == b.shape && a.x == b.x && a.y == b.y; }
    friend bool operator!=(const XYState& a, const XYState& b) { return !(a == b); }
};

template <class T>
struct PQState {
    MapShape shape;
    Cyclic<T> p, q;

    PQState() = default;
    PQState(MapShape s, std::vector<T> ps, std::vector<T> qs) : shape(s), p{std::move(ps)}, q{std::move(qs)} {
        if (p.size() != s.n || q.size() != s.n) throw InputError("PQState length does not match n");
    }
    T level() const {
        T c(1);
        for (int i = 1; i <= shape.n; ++i) c *= p(i) * q(i);
        return c;
    }
    friend bool operator==(const PQState& a, const PQState& b) { return a.shape == b.shape && a.p == b.p && a.q == b.q; }
    friend bool operator!=(const PQState& a, const PQState& b) { return !(a == b); }
};

template <class T>
struct CornerState {
    int n = 0;
    Cyclic<T> X, Y;

    CornerState() = default;
    CornerState(std::vector<T> xs, std::vector<T> ys) : n(static_cast<int>(xs.size())), X{std::move(xs)}, Y{std::move(ys)} {
        if (Y.size() != n) throw InputError("CornerState length mismatch");
    }
    bool pentagram_regular() const {
        for (int i = 1; i <= n; ++i)
            if (is_zero(value_of(T(1) - X(i) * Y(i)))) return false;
        return true;
    }
    friend bool operator==(const CornerState& a, const CornerState& b) { return a.X == b.X && a.Y == b.Y; }
};

/// Concatenated coordinates (x_1..x_n, y_1..y_n).
template <class T>
std::vector<T> flatten(const XYState<T>& s) {
    std::vector<T> out(s.x.v);
    out.insert(out.end(), s.y.v.begin(), s.y.v.end());
    return out;
}
template <class T>
std::vector<T> flatten(const PQState<T>& s) {
    std::vector<T> out(s.p.v);
    out.insert(out.end(), s.q.v.begin(), s.q.v.end());
    return out;
}

template <class T>
XYState<T> unflatten_xy(MapShape s, const std::vector<T>& u) {
    return XYState<T>(s, std::vector<T>(u.begin(), u.begin() + s.n), std::vector<T>(u.begin() + s.n, u.end()));
}
template <class T>
PQState<T> unflatten_pq(MapShape s, const std::vector<T>& u) {
    return PQState<T>(s, std::vector<T>(u.begin(), u.begin() + s.n), std::vector<T>(u.begin() + s.n, u.end()));
}

}  // namespace pentagram
