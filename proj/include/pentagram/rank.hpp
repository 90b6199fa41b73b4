#pragma once

#include <gmpxx.h>

#include <vector>

#include "rational.hpp"

namespace pentagram {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Exact rank by fraction-free (Bareiss) elimination over the integers.
inline int int_matrix_rank(IntMatrix m) {
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    mpz_class prev = 1;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int p = rank;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                mpz_class v = m[i][j] * m[rank][c] - m[i][c] * m[rank][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = v;
            }
            m[i][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

inline int int_matrix_rank(const std::vector<std::vector<int>>& m) {
    IntMatrix z;
    for (const auto& row : m) {
        z.emplace_back();
        for (int v : row) z.back().emplace_back(v);
    }
    return int_matrix_rank(std::move(z));
}

/// Rank of a rational matrix: rows are cleared of denominators, then ranked over the integers.
inline int rational_rank(const std::vector<std::vector<Rational>>& m) {
    IntMatrix z;
    for (const auto& row : m) {
        mpz_class l = 1;
        for (const auto& v : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
        z.emplace_back();
        for (const auto& v : row) z.back().push_back(v.num() * (l / v.den()));
    }
    return int_matrix_rank(std::move(z));
}

}  // namespace pentagram
