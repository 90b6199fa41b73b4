#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "rational.hpp"

namespace pentagram {

/// First-order forward jet: a value with its exact gradient.
/// An empty gradient stands for the zero gradient of any length.
class Jet {
public:
    Jet() = default;
    Jet(long v) : v_(v) {}
    Jet(int v) : v_(static_cast<long>(v)) {}
    Jet(Rational v) : v_(std::move(v)) {}
    Jet(Rational v, std::vector<Rational> g) : v_(std::move(v)), g_(std::move(g)) {}

    /// Coordinate function u_idx of an m-dimensional point, evaluated at v.
    static Jet variable(Rational v, std::size_t idx, std::size_t m) {
        std::vector<Rational> g(m);
        g.at(idx) = Rational(1);
        return Jet(std::move(v), std::move(g));
    }

    const Rational& value() const { return v_; }
    const std::vector<Rational>& gradient() const { return g_; }
    Rational d(std::size_t i) const { return i < g_.size() ? g_[i] : Rational(0); }
    std::size_t dim() const { return g_.size(); }

    bool is_zero() const {
        if (!v_.is_zero()) return false;
        for (const auto& c : g_)
            if (!c.is_zero()) return false;
        return true;
    }

    Jet& operator+=(const Jet& o) {
        v_ += o.v_;
        axpy(Rational(1), o.g_);
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        v_ -= o.v_;
        axpy(Rational(-1), o.g_);
        return *this;
    }
    Jet& operator*=(const Jet& o) {
        for (auto& c : g_) c *= o.v_;
        axpy(v_, o.g_);
        v_ *= o.v_;
        return *this;
    }
    Jet& operator/=(const Jet& o) {
        if (o.v_.is_zero()) throw ZeroDivision("jet division by zero value");
        Rational inv = o.v_.inverse();
        v_ *= inv;
        // (f/g)' = (f' - (f/g) g') / g
        for (auto& c : g_) c *= inv;
        axpy(-v_ * inv, o.g_);
        return *this;
    }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
    friend Jet operator/(Jet a, const Jet& b) { return a /= b; }
    friend Jet operator-(const Jet& a) {
        Jet r(-a.v_);
        r.g_.reserve(a.g_.size());
        for (const auto& c : a.g_) r.g_.push_back(-c);
        return r;
    }

    /// Equality of value and gradient.
    friend bool operator==(const Jet& a, const Jet& b) {
        if (a.v_ != b.v_) return false;
        std::size_t m = std::max(a.g_.size(), b.g_.size());
        for (std::size_t i = 0; i < m; ++i)
            if (a.d(i) != b.d(i)) return false;
        return true;
    }
    friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Jet& j) {
        os << j.v_ << " [";
        for (std::size_t i = 0; i < j.g_.size(); ++i) os << (i ? ", " : "") << j.g_[i];
        return os << "]";
    }

private:
    void axpy(const Rational& a, const std::vector<Rational>& g) {
        if (g.empty() || a.is_zero()) return;
        if (g_.size() < g.size()) g_.resize(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            if (!g[i].is_zero()) g_[i] += a * g[i];
    }

    Rational v_;
    std::vector<Rational> g_;
};

inline bool is_zero(const Jet& a) { return a.is_zero(); }
inline const Rational& value_of(const Jet& a) { return a.value(); }

/// Seeds every coordinate of a point as an independent variable.
inline std::vector<Jet> seed(const std::vector<Rational>& point) {
    std::vector<Jet> out;
    out.reserve(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) out.push_back(Jet::variable(point[i], i, point.size()));
    return out;
}

/// Evaluates f at the point with exact gradient. f takes std::vector<Jet>.
template <class F>
Jet jet_eval(F&& f, const std::vector<Rational>& point) {
    return f(seed(point));
}

}  // namespace pentagram
