#pragma once

#include <stdexcept>
#include <vector>

#include "bipoly.hpp"

namespace pentagram {

/// Dense matrix of BiPoly entries.
template <class T>
class PolyMatrix {
public:
    using Entry = BiPoly<T>;

    PolyMatrix() = default;
    PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static PolyMatrix identity(int n) {
        PolyMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Entry(T(1));
        return m;
    }
    static PolyMatrix diagonal(const std::vector<Entry>& d) {
        int n = static_cast<int>(d.size());
        PolyMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = d[i];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    /// 0-based access.
    Entry& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Entry& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    PolyMatrix& operator+=(const PolyMatrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    PolyMatrix& operator-=(const PolyMatrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("PolyMatrix product dimension mismatch");
        PolyMatrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int l = 0; l < a.cols_; ++l) {
                const Entry& ail = a(i, l);
                if (ail.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j)
                    if (!b(l, j).is_zero()) c(i, j) += ail * b(l, j);
            }
        return c;
    }
    PolyMatrix& operator*=(const PolyMatrix& o) { return *this = *this * o; }

    PolyMatrix scaled(const Entry& s) const {
        PolyMatrix r(*this);
        for (auto& e : r.a_) e = e * s;
        return r;
    }

    PolyMatrix pow(int e) const {
        if (rows_ != cols_) throw std::invalid_argument("power of non-square PolyMatrix");
        PolyMatrix r = identity(rows_);
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

    PolyMatrix transpose() const {
        PolyMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    PolyMatrix negate_lambda() const {
        PolyMatrix r(*this);
        for (auto& e : r.a_) e = e.negate_lambda();
        return r;
    }

    bool is_zero() const {
        for (const auto& e : a_)
            if (!e.is_zero()) return false;
        return true;
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

private:
    void check_same(const PolyMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("PolyMatrix dimension mismatch");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<Entry> a_;
};

namespace detail {

template <class T>
BiPoly<T> cofactor_det(const PolyMatrix<T>& m, std::vector<int>& cols, int row) {
    int n = m.rows();
    if (row == n) return BiPoly<T>(T(1));
    BiPoly<T> acc;
    int sign = 1;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        int col = cols[c];
        const auto& e = m(row, col);
        if (!e.is_zero()) {
            std::vector<int> rest;
            rest.reserve(cols.size() - 1);
            for (std::size_t d = 0; d < cols.size(); ++d)
                if (d != c) rest.push_back(cols[d]);
            BiPoly<T> minor = cofactor_det(m, rest, row + 1);
            if (sign > 0) acc += e * minor;
            else acc -= e * minor;
        }
        sign = -sign;
    }
    return acc;
}

template <class T>
BiPoly<T> bareiss_det(PolyMatrix<T> m) {
    int n = m.rows();
    int sign = 1;
    BiPoly<T> prev(T(1));
    for (int k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            int p = k + 1;
            while (p < n && m(p, k).is_zero()) ++p;
            if (p == n) return BiPoly<T>();
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BiPoly<T> num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = divide_exact(num, prev);
            }
            m(i, k) = BiPoly<T>();
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

}  // namespace detail

/// Exact determinant: cofactor expansion up to size 6, fraction-free elimination above.
template <class T>
BiPoly<T> poly_det(const PolyMatrix<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("poly_det of non-square matrix");
    if (m.rows() > 32) throw std::invalid_argument("poly_det supports size <= 32");
    if (m.rows() == 0) return BiPoly<T>(T(1));
    if (m.rows() <= 6) {
        std::vector<int> cols(m.cols());
        for (int i = 0; i < m.cols(); ++i) cols[i] = i;
        return detail::cofactor_det(m, cols, 0);
    }
    return detail::bareiss_det(m);
}

}  // namespace pentagram
