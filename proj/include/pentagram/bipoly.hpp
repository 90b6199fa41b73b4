#pragma once

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "errors.hpp"
#include "rational.hpp"

namespace pentagram {

namespace detail {
template <class T>
bool scalar_zero(const T& c) {
    return is_zero(c);
}
}  // namespace detail

/// Exponent pair (degree in lambda, degree in z).
using Exponent = std::pair<int, int>;

/// Sparse polynomial in lambda and z with coefficients in T. No zero coefficient is ever stored.
template <class T>
class BiPoly {
public:
    using Terms = std::map<Exponent, T>;

    BiPoly() = default;
    BiPoly(T c) { add_term({0, 0}, std::move(c)); }
    BiPoly(long c) : BiPoly(T(c)) {}

    static BiPoly monomial(T c, int dl, int dz) {
        BiPoly p;
        p.add_term({dl, dz}, std::move(c));
        return p;
    }
    static BiPoly lambda() { return monomial(T(1), 1, 0); }
    static BiPoly z() { return monomial(T(1), 0, 1); }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    T coeff(int dl, int dz) const {
        auto it = t_.find({dl, dz});
        return it == t_.end() ? T(0) : it->second;
    }

    int degree_lambda() const {
        int d = -1;
        for (const auto& [e, c] : t_) d = std::max(d, e.first);
        return d;
    }
    int degree_z() const {
        int d = -1;
        for (const auto& [e, c] : t_) d = std::max(d, e.second);
        return d;
    }

    void add_term(Exponent e, T c) {
        if (e.first < 0 || e.second < 0) throw std::invalid_argument("negative exponent in BiPoly");
        auto it = t_.find(e);
        if (it == t_.end()) {
            if (!detail::scalar_zero(c)) t_.emplace(e, std::move(c));
            return;
        }
        it->second += c;
        if (detail::scalar_zero(it->second)) t_.erase(it);
    }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [e, c] : o.t_) add_term(e, -c);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator-(const BiPoly& a) {
        BiPoly r;
        for (const auto& [e, c] : a.t_) r.t_.emplace(e, -c);
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
        return r;
    }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    BiPoly scaled(const T& s) const {
        BiPoly r;
        for (const auto& [e, c] : t_) r.add_term(e, c * s);
        return r;
    }
    BiPoly shifted(int dl, int dz) const {
        BiPoly r;
        for (const auto& [e, c] : t_) r.t_.emplace(Exponent{e.first + dl, e.second + dz}, c);
        return r;
    }

    /// p(-lambda, z).
    BiPoly negate_lambda() const {
        BiPoly r;
        for (const auto& [e, c] : t_) r.t_.emplace(e, e.first % 2 ? -c : c);
        return r;
    }

    BiPoly pow(int e) const {
        BiPoly r(T(1));
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

    /// Exact quotient a / b; throws ExactDivisionFailure on a nonzero remainder.
    friend BiPoly divide_exact(const BiPoly& a, const BiPoly& b) {
        if (b.is_zero()) throw ZeroDivision("BiPoly division by zero");
        BiPoly q, r = a;
        auto lead_b = std::prev(b.t_.end());
        while (!r.is_zero()) {
            auto lead_r = std::prev(r.t_.end());
            int dl = lead_r->first.first - lead_b->first.first;
            int dz = lead_r->first.second - lead_b->first.second;
            if (dl < 0 || dz < 0) throw ExactDivisionFailure("BiPoly division leaves a remainder");
            BiPoly t = monomial(lead_r->second / lead_b->second, dl, dz);
            q += t;
            r -= t * b;
        }
        return q;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    std::string str() const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : t_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c << ")";
            if (e.first) os << "*lambda^" << e.first;
            if (e.second) os << "*z^" << e.second;
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.str(); }

private:
    Terms t_;
};

template <class T>
bool is_zero(const BiPoly<T>& p) {
    return p.is_zero();
}

}  // namespace pentagram
