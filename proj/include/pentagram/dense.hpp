#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace pentagram {

/// Small dense matrix over an exact field.
template <class T>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, T(0)) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Mat from_columns(const std::vector<std::vector<T>>& cols) {
        int c = static_cast<int>(cols.size());
        int r = c ? static_cast<int>(cols[0].size()) : 0;
        Mat m(r, c);
        for (int j = 0; j < c; ++j)
            for (int i = 0; i < r; ++i) m(i, j) = cols[j].at(i);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    std::vector<T> column(int j) const {
        std::vector<T> v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Mat product dimension mismatch");
        Mat c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int l = 0; l < a.cols_; ++l) {
                if (is_zero(a(i, l))) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += a(i, l) * b(l, j);
            }
        return c;
    }
    friend std::vector<T> operator*(const Mat& a, const std::vector<T>& v) {
        if (static_cast<int>(v.size()) != a.cols_) throw std::invalid_argument("Mat-vector dimension mismatch");
        std::vector<T> r(a.rows_, T(0));
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
        return r;
    }
    friend Mat operator+(Mat a, const Mat& b) {
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_.at(i);
        return a;
    }
    friend Mat operator-(Mat a, const Mat& b) {
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_.at(i);
        return a;
    }
    Mat scaled(const T& s) const {
        Mat r(*this);
        for (auto& e : r.a_) e *= s;
        return r;
    }
    Mat transpose() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    /// Reduced row echelon form in place; returns pivot columns.
    std::vector<int> rref() {
        std::vector<int> piv;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int p = r;
            while (p < rows_ && is_zero((*this)(p, c))) ++p;
            if (p == rows_) continue;
            for (int j = 0; j < cols_; ++j) std::swap((*this)(r, j), (*this)(p, j));
            T inv = T(1) / (*this)(r, c);
            for (int j = 0; j < cols_; ++j) (*this)(r, j) *= inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == r || is_zero((*this)(i, c))) continue;
                T f = (*this)(i, c);
                for (int j = 0; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
            }
            piv.push_back(c);
            ++r;
        }
        return piv;
    }

    int rank() const {
        Mat m(*this);
        return static_cast<int>(m.rref().size());
    }

    T det() const {
        if (rows_ != cols_) throw std::invalid_argument("det of non-square Mat");
        Mat m(*this);
        T d(1);
        for (int c = 0; c < cols_; ++c) {
            int p = c;
            while (p < rows_ && is_zero(m(p, c))) ++p;
            if (p == rows_) return T(0);
            if (p != c) {
                for (int j = 0; j < cols_; ++j) std::swap(m(c, j), m(p, j));
                d = -d;
            }
            d *= m(c, c);
            T inv = T(1) / m(c, c);
            for (int i = c + 1; i < rows_; ++i) {
                if (is_zero(m(i, c))) continue;
                T f = m(i, c) * inv;
                for (int j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
            }
        }
        return d;
    }

    /// Basis of the right kernel.
    std::vector<std::vector<T>> nullspace() const {
        Mat m(*this);
        auto piv = m.rref();
        std::vector<bool> is_piv(cols_, false);
        for (int c : piv) is_piv[c] = true;
        std::vector<std::vector<T>> basis;
        for (int f = 0; f < cols_; ++f) {
            if (is_piv[f]) continue;
            std::vector<T> v(cols_, T(0));
            v[f] = T(1);
            for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(static_cast<int>(r), f);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// Unique solution of A u = b, or nullopt when the system is inconsistent or underdetermined.
    std::optional<std::vector<T>> solve(const std::vector<T>& b) const {
        Mat aug(rows_, cols_ + 1);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b.at(i);
        }
        auto piv = aug.rref();
        if (static_cast<int>(piv.size()) != cols_) return std::nullopt;
        for (int c : piv)
            if (c == cols_) return std::nullopt;
        std::vector<T> u(cols_);
        for (int r = 0; r < cols_; ++r) u[piv[r]] = aug(r, cols_);
        return u;
    }

    Mat inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of non-square Mat");
        Mat aug(rows_, 2 * cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_ + i) = T(1);
        }
        auto piv = aug.rref();
        if (static_cast<int>(piv.size()) < rows_ || piv[rows_ - 1] >= cols_) throw ZeroDivision("singular matrix");
        Mat inv(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
        return inv;
    }

    /// Adjugate via cofactors, adj(A) A = det(A) I.
    Mat adjugate() const {
        int n = rows_;
        Mat adj(n, n);
        if (n == 1) {
            adj(0, 0) = T(1);
            return adj;
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Mat minor(n - 1, n - 1);
                for (int a = 0, ma = 0; a < n; ++a) {
                    if (a == i) continue;
                    for (int b = 0, mb = 0; b < n; ++b) {
                        if (b == j) continue;
                        minor(ma, mb++) = (*this)(a, b);
                    }
                    ++ma;
                }
                T c = minor.det();
                adj(j, i) = (i + j) % 2 ? -c : c;
            }
        return adj;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

/// Vectors are projectively equal when every 2x2 minor of the stacked pair vanishes.
template <class T>
bool projectively_equal(const std::vector<T>& u, const std::vector<T>& v) {
    if (u.size() != v.size()) return false;
    bool nz_u = false, nz_v = false;
    for (std::size_t a = 0; a < u.size(); ++a) {
        nz_u = nz_u || !is_zero(u[a]);
        nz_v = nz_v || !is_zero(v[a]);
        for (std::size_t b = a + 1; b < u.size(); ++b)
            if (!is_zero(u[a] * v[b] - u[b] * v[a])) return false;
    }
    return nz_u && nz_v;
}

}  // namespace pentagram
