#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "geometry.hpp"

namespace pentagram {

using cplx = std::complex<double>;
using CVec3 = Eigen::Vector3cd;

/// Twisted polygon in the projective plane, complex floating coordinates.
struct PlanePolygon {
    std::vector<CVec3> vertices;
    Eigen::Matrix3cd monodromy = Eigen::Matrix3cd::Identity();

    int n() const { return static_cast<int>(vertices.size()); }

    CVec3 at(int i) const {
        const int N = n();
        int q = (i - 1 >= 0) ? (i - 1) / N : -((N - i) / N);
        CVec3 v = vertices[static_cast<std::size_t>(i - 1 - q * N)];
        if (q > 0)
            for (int t = 0; t < q; ++t) v = monodromy * v;
        else if (q < 0) {
            Eigen::Matrix3cd inv = monodromy.inverse();
            for (int t = 0; t < -q; ++t) v = inv * v;
        }
        return v;
    }
};

struct PlaneOptions {
    double tolerance = 1e-8;
};

namespace detail {

inline Eigen::MatrixXcd to_complex(const Mat<Rational>& m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
    return out;
}

inline std::vector<std::vector<int>> subsets(int n, int m) {
    std::vector<std::vector<int>> out;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + m, true);
    do {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (pick[i]) s.push_back(i);
        out.push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

inline double rel(const Eigen::MatrixXcd& residual, const Eigen::MatrixXcd& scale) {
    return residual.norm() / std::max(1.0, scale.norm());
}

}  // namespace detail

/// Number of (k-3)-subsets of monodromy eigenvectors, i.e. k choose 3.
inline int plane_branch_count(int k) {
    if (k < 3) throw InputError("plane reconstruction needs k >= 3");
    return static_cast<int>(detail::subsets(k, k - 3).size());
}

/// Plane polygon whose corrugated lift is polygon_from_xy(s). The projection kills a monodromy-invariant
/// (k-3)-plane spanned by eigenvectors; `branch` selects the subset.
inline PlanePolygon reconstruct_plane_polygon(const XYState<Rational>& s, int branch, PlaneOptions opt = {}) {
    const int k = s.shape.k;
    const int count = plane_branch_count(k);
    if (branch < 0 || branch >= count)
        throw BranchUnavailable("branch " + std::to_string(branch) + " out of range (" + std::to_string(count) + ")");
    LiftedPolygon lift = polygon_from_xy(s);
    Eigen::MatrixXcd M = detail::to_complex(lift.monodromy);

    Eigen::MatrixXcd U(3, k);
    if (k == 3) {
        U = Eigen::MatrixXcd::Identity(3, 3);
    } else {
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M);
        if (es.info() != Eigen::Success) throw BranchUnavailable("eigendecomposition failed");
        const auto& evals = es.eigenvalues();
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (std::abs(evals(a) - evals(b)) < opt.tolerance * std::max(1.0, std::abs(evals(a))))
                    throw BranchUnavailable("monodromy has a repeated eigenvalue");
        auto pick = detail::subsets(k, k - 3)[static_cast<std::size_t>(branch)];
        Eigen::MatrixXcd K(k, k - 3);
        for (int j = 0; j < k - 3; ++j) K.col(j) = es.eigenvectors().col(pick[j]);
        Eigen::MatrixXcd top = K.topRows(3), bot = K.bottomRows(k - 3);
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(bot);
        if (!lu.isInvertible()) throw BranchUnavailable("invariant subspace meets the first three coordinates");
        U.leftCols(3) = Eigen::MatrixXcd::Identity(3, 3);
        U.rightCols(k - 3) = -top * lu.inverse();
    }

    // The projected lift obeys the same recurrence, started from the columns of U.
    PlanePolygon out;
    std::vector<CVec3> V;
    for (int j = 0; j < k; ++j) V.push_back(U.col(j));
    for (int i = 1; V.size() < static_cast<std::size_t>(s.shape.n); ++i)
        V.push_back(s.y(i - 1).to_double() * V[i - 1] + s.x(i).to_double() * V[i] + V[i + k - 2]);
    V.resize(static_cast<std::size_t>(s.shape.n));
    out.vertices = V;
    out.monodromy = U * M.leftCols(3);
    double twist = detail::rel(U * M - out.monodromy * U, M);
    if (!(twist <= opt.tolerance)) throw ToleranceExceeded("twist residual " + std::to_string(twist));
    return out;
}

/// Intersection of lines (V_i, V_{i+k-1}) and (V_{i+1}, V_{i+k}) by cross products.
inline PlanePolygon skip_diagonal_map(const PlanePolygon& p, int k, PlaneOptions opt = {}) {
    PlanePolygon out = p;
    for (int i = 1; i <= p.n(); ++i) {
        CVec3 a = p.at(i), b = p.at(i + k - 1), c = p.at(i + 1), d = p.at(i + k);
        CVec3 l1 = a.cross(b), l2 = c.cross(d);
        if (l1.norm() <= opt.tolerance * a.norm() * b.norm() || l2.norm() <= opt.tolerance * c.norm() * d.norm())
            throw ToleranceExceeded("coincident vertices at index " + std::to_string(i));
        CVec3 v = l1.cross(l2);
        if (v.norm() <= opt.tolerance * l1.norm() * l2.norm())
            throw ToleranceExceeded("collinear configuration at index " + std::to_string(i));
        out.vertices[static_cast<std::size_t>(i - 1)] = v;
    }
    return out;
}

/// Corrugation coordinates of a plane polygon (the map psi), from V_{i+k} = a V_{i+k-1} + b V_{i+1} + c V_i.
struct PlaneCoords {
    std::vector<cplx> x, y;
};

inline PlaneCoords plane_coords(const PlanePolygon& p, int k, PlaneOptions opt = {}) {
    const int n = p.n();
    std::vector<cplx> a(n), b(n), c(n);
    for (int i = 1; i <= n; ++i) {
        const CVec3 cols[3] = {p.at(i + k - 1), p.at(i + 1), p.at(i)};
        const CVec3 rhs = p.at(i + k);
        Eigen::Matrix3cd A;
        for (int j = 0; j < 3; ++j) A.col(j) = cols[j] / cols[j].norm();
        Eigen::FullPivLU<Eigen::Matrix3cd> lu(A);
        lu.setThreshold(opt.tolerance);
        if (!lu.isInvertible()) throw ToleranceExceeded("three of V_i, V_{i+1}, V_{i+k-1} are collinear");
        CVec3 sol = lu.solve(rhs / rhs.norm()) * rhs.norm();
        a[cyc(i, n)] = sol(0) / cols[0].norm();
        b[cyc(i, n)] = sol(1) / cols[1].norm();
        c[cyc(i, n)] = sol(2) / cols[2].norm();
    }
    auto A = [&](int j) { return a[cyc(j - k + 1, n)]; };
    auto B = [&](int j) { return b[cyc(j - 1, n)]; };
    auto C = [&](int j) { return c[cyc(j, n)]; };
    PlaneCoords out;
    for (int i = 1; i <= n; ++i) {
        cplx pa(1);
        for (int j = i + 1; j <= i + k - 1; ++j) pa *= A(j);
        out.x.push_back(B(i + 1) / pa);
        out.y.push_back(C(i + 1) / (pa * A(i + k)));
    }
    return out;
}

/// Max relative deviation between floating coordinates and an exact state.
inline double coords_distance(const PlaneCoords& c, const XYState<Rational>& s) {
    double worst = 0;
    for (int i = 1; i <= s.shape.n; ++i) {
        double ex = s.x(i).to_double(), ey = s.y(i).to_double();
        worst = std::max(worst, std::abs(c.x[cyc(i, s.shape.n)] - ex) / std::max(1.0, std::abs(ex)));
        worst = std::max(worst, std::abs(c.y[cyc(i, s.shape.n)] - ey) / std::max(1.0, std::abs(ey)));
    }
    return worst;
}

/// Applies a 3x3 projective map to every vertex and conjugates the monodromy.
inline PlanePolygon transform(const PlanePolygon& p, const Eigen::Matrix3cd& g) {
    PlanePolygon out;
    for (const auto& v : p.vertices) out.vertices.push_back(g * v);
    out.monodromy = g * p.monodromy * g.inverse();
    return out;
}

inline bool plane_projectively_close(const PlanePolygon& a, const PlanePolygon& b, double tol) {
    if (a.n() != b.n()) return false;
    for (int i = 0; i < a.n(); ++i) {
        const CVec3 &u = a.vertices[i], &v = b.vertices[i];
        if (u.cross(v).norm() > tol * u.norm() * v.norm()) return false;
    }
    return true;
}

}  // namespace pentagram
