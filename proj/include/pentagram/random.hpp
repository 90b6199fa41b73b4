#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rational.hpp"
#include "state.hpp"

namespace pentagram {

/// Small-height random rationals: numerator in [-9,9]\{0}, denominator in [1,9].
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : eng_(seed) {}

    Rational next() {
        std::uniform_int_distribution<long> num(-9, 8), den(1, 9);
        long a = num(eng_);
        if (a >= 0) ++a;
        return Rational(a, den(eng_));
    }
    std::vector<Rational> vec(int n) {
        std::vector<Rational> v;
        v.reserve(n);
        for (int i = 0; i < n; ++i) v.push_back(next());
        return v;
    }
    XYState<Rational> xy(MapShape s) { return XYState<Rational>(s, vec(s.n), vec(s.n)); }
    PQState<Rational> pq(MapShape s) { return PQState<Rational>(s, vec(s.n), vec(s.n)); }

    /// Draws until accept(state) returns true without throwing.
    template <class Draw, class Accept>
    auto until(Draw draw, Accept accept, int max_tries = 10000) {
        for (int t = 0; t < max_tries; ++t) {
            auto s = draw(*this);
            try {
                if (accept(s)) return s;
            } catch (const Error&) {
            }
        }
        throw SingularState("rejection sampling exhausted");
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

}  // namespace pentagram
