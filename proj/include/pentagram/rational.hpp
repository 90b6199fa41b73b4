#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace pentagram {

/// Exact rational number backed by GMP; always in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(int v) : q_(static_cast<long>(v)) {}
    Rational(long num, long den) {
        if (den == 0) throw ZeroDivision("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw ZeroDivision("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p", "-p" or "p/q" with decimal integers. Rejects anything else.
    static Rational parse(std::string_view s) {
        auto bad = [&] { return InputError("malformed rational: \"" + std::string(s) + "\""); };
        auto is_int = [](std::string_view t) {
            std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
            if (i >= t.size()) return false;
            for (; i < t.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
            return true;
        };
        auto slash = s.find('/');
        std::string_view a = s.substr(0, slash);
        std::string_view b = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
        if (!is_int(a) || !is_int(b)) throw bad();
        auto strip = [](std::string_view t) { return std::string(t[0] == '+' ? t.substr(1) : t); };
        mpz_class num(strip(a), 10), den(strip(b), 10);
        if (den == 0) throw bad();
        return Rational(num, den);
    }

    const mpq_class& raw() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    double to_double() const { return q_.get_d(); }

    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Rational inverse() const {
        if (is_zero()) throw ZeroDivision("inverse of zero");
        return Rational(mpq_class(1) / q_);
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ZeroDivision("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_;
};

inline Rational pow(const Rational& a, int e) {
    Rational base = e < 0 ? a.inverse() : a, out(1);
    for (int i = 0; i < (e < 0 ? -e : e); ++i) out *= base;
    return out;
}

inline bool is_zero(const Rational& a) { return a.is_zero(); }
inline const Rational& value_of(const Rational& a) { return a; }

/// Gaussian rational re + i*im.
struct GaussRational {
    Rational re, im;

    GaussRational() = default;
    GaussRational(Rational r) : re(std::move(r)) {}
    GaussRational(long r) : re(r) {}
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    Rational norm() const { return re * re + im * im; }
    GaussRational conj() const { return {re, -im}; }

    GaussRational& operator+=(const GaussRational& o) { re += o.re; im += o.im; return *this; }
    GaussRational& operator-=(const GaussRational& o) { re -= o.re; im -= o.im; return *this; }
    GaussRational& operator*=(const GaussRational& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GaussRational& operator/=(const GaussRational& o) {
        if (o.is_zero()) throw ZeroDivision("gaussian division by zero");
        Rational d = o.norm();
        *this *= o.conj();
        re /= d;
        im /= d;
        return *this;
    }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const GaussRational& g) {
        return os << "(" << g.re << " + " << g.im << "i)";
    }
};

inline bool is_zero(const GaussRational& a) { return a.is_zero(); }

}  // namespace pentagram

template <>
struct std::hash<pentagram::Rational> {
    std::size_t operator()(const pentagram::Rational& r) const { return std::hash<std::string>{}(r.str()); }
};
