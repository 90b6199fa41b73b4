#include <gtest/gtest.h>

#include <cmath>

#include "pentagram/pentagram.hpp"

using namespace pentagram;
using P = BiPoly<Rational>;
using PM = PolyMatrix<Rational>;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

PM random_linear(RationalSampler& rs, int n) {
    PM m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = P(rs.next()) + P::lambda().scaled(rs.next()) + P::z().scaled(rs.next());
    return m;
}

}  // namespace

TEST(RationalTest, NormalizesSignAndGcd) {
    Rational a(6, -4);
    EXPECT_EQ(a.num(), -3);
    EXPECT_EQ(a.den(), 2);
    EXPECT_EQ(a.str(), "-3/2");
    EXPECT_EQ(Rational(4, 2).str(), "2");
}

TEST(RationalTest, ParseIsStrict) {
    EXPECT_EQ(Rational::parse("1/3"), q(1, 3));
    EXPECT_EQ(Rational::parse("-7"), q(-7));
    EXPECT_EQ(Rational::parse("10/-4"), q(-5, 2));
    for (const char* bad : {"", "1/", "/3", "0.5", "1/0", "abc", "1//2", "1e3"})
        EXPECT_THROW(Rational::parse(bad), InputError) << bad;
}

TEST(RationalTest, DivisionByZeroThrows) {
    EXPECT_THROW(q(1) / Rational(0), ZeroDivision);
    EXPECT_THROW(Rational(0).inverse(), ZeroDivision);
    EXPECT_THROW(Rational(1, 0), ZeroDivision);
}

TEST(RationalTest, RandomPairsInvertAndStayReduced) {
    RationalSampler rs(7);
    for (int t = 0; t < 10000; ++t) {
        Rational a = rs.next(), b = rs.next();
        Rational c = a / b;
        EXPECT_EQ(c * (b / a), Rational(1));
        EXPECT_GT(c.den(), 0);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), c.num().get_mpz_t(), c.den().get_mpz_t());
        EXPECT_EQ(g, 1);
    }
}

TEST(GaussRationalTest, FieldOperations) {
    GaussRational a(q(1), q(2)), b(q(-3, 2), q(1, 3));
    EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(a * a.conj(), GaussRational(a.norm()));
    EXPECT_THROW(a / GaussRational(), ZeroDivision);
}

TEST(JetTest, ProductRule) {
    Jet f = jet_eval([](const std::vector<Jet>& u) { return u[0] * u[1]; }, {q(2), q(3)});
    EXPECT_EQ(f.value(), q(6));
    EXPECT_EQ(f.d(0), q(3));
    EXPECT_EQ(f.d(1), q(2));
}

TEST(JetTest, QuotientRule) {
    Jet f = jet_eval([](const std::vector<Jet>& u) { return Jet(1) / u[0]; }, {q(2)});
    EXPECT_EQ(f.value(), q(1, 2));
    EXPECT_EQ(f.d(0), q(-1, 4));
}

TEST(JetTest, PoleThrows) {
    EXPECT_THROW(jet_eval([](const std::vector<Jet>& u) { return Jet(1) / u[0]; }, {q(0)}), ZeroDivision);
}

TEST(JetTest, MapGradientMatchesFiniteDifferences) {
    auto sh = MapShape::make(3, 5);
    std::vector<Rational> pt = {q(1), q(2), q(3), q(4), q(5), q(1), q(1), q(1), q(1), q(1)};
    Jet f = jet_eval([&](const std::vector<Jet>& u) { return map_T(unflatten_xy(sh, u)).x(1); }, pt);
    auto eval = [&](std::vector<double> v) {
        // x*_1 = x_4 sigma_1 / sigma_4 for r = 0, r' = 1
        return v[3] * (v[0] + v[5]) / (v[3] + v[8]);
    };
    for (int a = 0; a < 10; ++a) {
        std::vector<double> up, dn;
        for (const auto& r : pt) up.push_back(r.to_double());
        dn = up;
        const double h = 1e-6;
        up[a] += h;
        dn[a] -= h;
        double fd = (eval(up) - eval(dn)) / (2 * h);
        EXPECT_NEAR(f.d(a).to_double(), fd, 1e-8) << a;
    }
}

TEST(JetTest, ChainRuleOnRandomFunctions) {
    RationalSampler rs(11);
    for (int t = 0; t < 50; ++t) {
        std::vector<Rational> pt = rs.vec(3);
        auto g = [](const std::vector<Jet>& u) { return u[0] * u[1] / (u[2] * u[2] + Jet(1)); };
        auto f = [](const Jet& v) { return v * v + Jet(3) / (v + Jet(Rational(1, 7))); };
        Jet composed = jet_eval([&](const std::vector<Jet>& u) { return f(g(u)); }, pt);
        Jet inner = jet_eval(g, pt);
        Jet outer = jet_eval([&](const std::vector<Jet>& v) { return f(v[0]); }, {inner.value()});
        for (int a = 0; a < 3; ++a) EXPECT_EQ(composed.d(a), outer.d(0) * inner.d(a));
    }
}

TEST(BiPolyTest, RingBasics) {
    P l = P::lambda(), z = P::z();
    EXPECT_EQ((l + z) * (l - z), l * l - z * z);
    EXPECT_TRUE((l - l).is_zero());
    EXPECT_EQ((l * z).coeff(1, 1), q(1));
    EXPECT_EQ(divide_exact((P(1) + z).pow(3), P(1) + z), (P(1) + z).pow(2));
    EXPECT_THROW(divide_exact(P(1) + z, P(2) + l), ExactDivisionFailure);
}

TEST(PolyDetTest, OneByOne) {
    PM m(1, 1);
    m(0, 0) = P::lambda() * P::z();
    EXPECT_EQ(poly_det(m), P::lambda() * P::z());
}

TEST(PolyDetTest, TwoByTwo) {
    PM m(2, 2);
    m(0, 0) = P(1);
    m(0, 1) = P::z();
    m(1, 0) = P::lambda();
    m(1, 1) = P(1);
    EXPECT_EQ(poly_det(m), P(1) - P::lambda() * P::z());
}

TEST(PolyDetTest, SpectralTwoByTwo) {
    auto s = XYState<Rational>(MapShape::make(2, 2), {q(1), q(1)}, {q(1), q(1)});
    auto m = PM::identity(2) + lax_L(s, 1).scaled(P::z());
    P expected = P(1) + P::z() - P::lambda() * P::z() + P::lambda() * P::z() * P::z();
    EXPECT_EQ(poly_det(m), expected);
}

TEST(PolyDetTest, Multiplicative) {
    RationalSampler rs(3);
    for (int t = 0; t < 5; ++t) {
        PM a = random_linear(rs, 3), b = random_linear(rs, 3);
        EXPECT_EQ(poly_det(a * b), poly_det(a) * poly_det(b));
    }
}

TEST(PolyDetTest, FractionFreeMatchesCofactor) {
    RationalSampler rs(5);
    for (int n : {7, 8}) {
        PM a = random_linear(rs, n);
        std::vector<int> cols(n);
        for (int i = 0; i < n; ++i) cols[i] = i;
        EXPECT_EQ(poly_det(a), detail::cofactor_det(a, cols, 0));
    }
}

TEST(PolyDetTest, FractionFreeHandlesZeroPivot) {
    PM a = PM::identity(8);
    std::swap(a(0, 0), a(0, 1));
    std::swap(a(1, 0), a(1, 1));
    EXPECT_EQ(poly_det(a), P(-1));
}

TEST(PolyDetTest, RejectsNonSquare) { EXPECT_THROW(poly_det(PM(2, 3)), std::invalid_argument); }

TEST(RankTest, SmallCases) {
    EXPECT_EQ(int_matrix_rank(std::vector<std::vector<int>>(3, std::vector<int>(3, 0))), 0);
    std::vector<std::vector<int>> id(4, std::vector<int>(4, 0));
    for (int i = 0; i < 4; ++i) id[i][i] = 1;
    EXPECT_EQ(int_matrix_rank(id), 4);
    EXPECT_EQ(int_matrix_rank(build_bracket_xy(MapShape::make(3, 5)).Omega), 8);
}

TEST(DenseTest, SolveInverseAdjugate) {
    RationalSampler rs(9);
    Mat<Rational> m(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = rs.next();
    EXPECT_EQ(m * m.inverse(), Mat<Rational>::identity(4));
    EXPECT_EQ(m.adjugate() * m, Mat<Rational>::identity(4).scaled(m.det()));
    std::vector<Rational> b = rs.vec(4);
    EXPECT_EQ(m * *m.solve(b), b);
}
