#include <gtest/gtest.h>

#include "pentagram/pentagram.hpp"

using namespace pentagram;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }
RP1Point pt(long a, long b = 1) { return RP1Point::affine(q(a, b)); }

std::vector<Rational> affine(const std::vector<RP1Point>& v) {
    std::vector<Rational> o;
    for (const auto& p : v) o.push_back(p.affine_value());
    return o;
}

LeapfrogState sample(RationalSampler& rs, int n, bool twisted) {
    return rs.until(
        [&](RationalSampler& g) {
            auto s = LeapfrogState::closed(g.vec(n), g.vec(n));
            if (twisted) {
                Mat<Rational> M(2, 2);
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b) M(a, b) = g.next();
                s.monodromy = M;
            }
            return s;
        },
        [&](const LeapfrogState& s) {
            if (s.monodromy.det().is_zero()) return false;
            auto nx = leapfrog_step(s);
            map_T(leapfrog_coords(s));
            leapfrog_coords(nx);
            for (int i = 1; i <= n; ++i) {
                men2_value(s.at(i - 1), s.at(i), s.at(i + 1), s.minus_at(i), nx.at(i));
                men3_value(s.at(i - 1), s.at(i), s.at(i + 1), s.minus_at(i), nx.at(i));
            }
            if (!twisted)
                for (const auto& p : nx.S) p.affine_value();
            return true;
        });
}

Mat<Rational> moebius(long a, long b, long c, long d) {
    Mat<Rational> g(2, 2);
    g(0, 0) = a;
    g(0, 1) = b;
    g(1, 0) = c;
    g(1, 1) = d;
    return g;
}

}  // namespace

TEST(LeapfrogRuleTest, HandValues) {
    EXPECT_EQ(leapfrog_affine(q(0), q(1), q(2), q(1, 2)), q(3, 2));
    for (long a : {2L, -3L, 5L}) EXPECT_EQ(leapfrog_affine(q(-1), q(0), q(1), q(a)), q(-a));
    auto g = leapfrog_involution(pt(0), pt(1), pt(2));
    EXPECT_EQ(apply(g, pt(1, 2)), pt(3, 2));
    EXPECT_EQ(apply(g, pt(1)), pt(1));
    EXPECT_EQ(apply(g, pt(0)), pt(2));
}

TEST(LeapfrogRuleTest, InvolutionSquaresToScalar) {
    RationalSampler rs(3);
    for (int t = 0; t < 50; ++t) {
        RP1Point a = RP1Point::affine(rs.next()), f = RP1Point::affine(rs.next()), b = RP1Point::affine(rs.next());
        try {
            auto g = leapfrog_involution(a, f, b);
            auto g2 = g * g;
            EXPECT_TRUE(g2(0, 1).is_zero() && g2(1, 0).is_zero() && g2(0, 0) == g2(1, 1));
            EXPECT_EQ(apply(g, a), b);
            EXPECT_EQ(apply(g, f), f);
        } catch (const SingularConfiguration&) {
        }
    }
    EXPECT_THROW(leapfrog_involution(pt(1), pt(2), pt(1)), SingularConfiguration);
    EXPECT_THROW(leapfrog_involution(pt(1), pt(1), pt(2)), SingularConfiguration);
}

TEST(LeapfrogRuleTest, RelationsHoldOnOrbits) {
    RationalSampler rs(4);
    for (int t = 0; t < 20; ++t) {
        const int n = 3 + t % 4;
        auto st = sample(rs, n, t % 2);
        auto nx = leapfrog_step(st);
        for (int i = 1; i <= n; ++i) {
            EXPECT_EQ(men2_value(st.at(i - 1), st.at(i), st.at(i + 1), st.minus_at(i), nx.at(i)), q(-1));
            EXPECT_EQ(men3_value(st.at(i - 1), st.at(i), st.at(i + 1), st.minus_at(i), nx.at(i)), q(-1));
        }
        if (t % 2) continue;
        auto m = affine(st.S_minus), c = affine(st.S), p = affine(nx.S);
        EXPECT_EQ(leapfrog_affine_step(m, c), p);
        for (int i = 1; i <= n; ++i)
            EXPECT_TRUE(men1_residual(c[cyc(i - 1, n)], c[cyc(i, n)], c[cyc(i + 1, n)], m[cyc(i, n)], p[cyc(i, n)]).is_zero());
    }
}

TEST(LeapfrogRuleTest, RelationsFailTogetherOffOrbit) {
    RationalSampler rs(5);
    int checked = 0;
    for (int t = 0; t < 200; ++t) {
        Rational a = rs.next(), b = rs.next(), c = rs.next(), m = rs.next(), p = rs.next();
        try {
            bool r1 = men1_residual(a, b, c, m, p).is_zero();
            bool r2 = men2_value(RP1Point::affine(a), RP1Point::affine(b), RP1Point::affine(c), RP1Point::affine(m),
                                 RP1Point::affine(p)) == q(-1);
            bool r3 = men3_value(RP1Point::affine(a), RP1Point::affine(b), RP1Point::affine(c), RP1Point::affine(m),
                                 RP1Point::affine(p)) == q(-1);
            EXPECT_FALSE(r1);
            EXPECT_EQ(r1, r2);
            EXPECT_EQ(r2, r3);
            ++checked;
        } catch (const Error&) {
        }
    }
    EXPECT_GT(checked, 100);
}

TEST(LeapfrogCoordsTest, HandValue) {
    auto st = LeapfrogState::closed({q(0), q(2), q(4)}, {q(1), q(3), q(5)});
    EXPECT_EQ(leapfrog_coords(st).x(1), q(1, 3));
}

TEST(LeapfrogCoordsTest, MoebiusInvariance) {
    RationalSampler rs(6);
    auto g = moebius(2, 1, 1, 3);
    for (int t = 0; t < 10; ++t) {
        auto st = sample(rs, 4 + t % 3, t % 2);
        try {
            auto h = transform(st, g);
            EXPECT_EQ(leapfrog_coords(h), leapfrog_coords(st));
        } catch (const Error&) {
        }
    }
    EXPECT_THROW(transform(LeapfrogState::closed({q(0)}, {q(1)}), moebius(1, 2, 2, 4)), SingularConfiguration);
}

TEST(LeapfrogCoordsTest, ConjugateToSkipOneMap) {
    RationalSampler rs(7);
    for (int t = 0; t < 24; ++t) {
        auto st = sample(rs, 3 + t % 4, t % 2);
        EXPECT_EQ(leapfrog_coords(leapfrog_step(st)), map_T(leapfrog_coords(st))) << "trial " << t;
    }
}

TEST(LeapfrogCoordsTest, TwistedWraparoundUsesMonodromy) {
    auto st = LeapfrogState::closed({q(0), q(2)}, {q(1), q(3)});
    st.monodromy = moebius(1, 5, 0, 1);
    EXPECT_EQ(st.at(3), pt(6));
    EXPECT_EQ(st.at(0), pt(-2));
    EXPECT_EQ(st.minus_at(4), pt(7));
    EXPECT_FALSE(st.is_closed());
    EXPECT_TRUE(LeapfrogState::closed({q(0)}, {q(1)}).is_closed());
}

TEST(LagrangianTest, VanishesOnOrbitsAndIsLocal) {
    RationalSampler rs(8);
    for (int t = 0; t < 10; ++t) {
        const int n = 4 + t % 3;
        auto st = sample(rs, n, false);
        auto m = affine(st.S_minus), c = affine(st.S), p = affine(leapfrog_step(st).S);
        for (const auto& v : lagrangian_residual(m, c, p)) EXPECT_TRUE(v.is_zero());
        auto bumped = p;
        bumped[1] += q(1, 7);
        try {
            auto r = lagrangian_residual(m, c, bumped);
            for (int i = 0; i < n; ++i) EXPECT_EQ(r[i].is_zero(), i != 1);
        } catch (const SingularConfiguration&) {
        }
    }
    EXPECT_THROW(lagrangian_residual({q(0)}, {q(0)}, {q(1)}), SingularConfiguration);
}

TEST(TwoFormTest, ValuesAndAntisymmetry) {
    EXPECT_EQ(two_form_value({q(0)}, {q(2)}, {q(1), q(0)}, {q(0), q(1)}), q(1, 4));
    RationalSampler rs(9);
    auto m = rs.vec(3), c = rs.vec(3), u = rs.vec(6), v = rs.vec(6);
    EXPECT_EQ(two_form_value(m, c, u, v), -two_form_value(m, c, v, u));
    EXPECT_TRUE(two_form_value(m, c, u, u).is_zero());
    EXPECT_THROW(two_form_value(m, c, u, rs.vec(5)), InputError);
}

TEST(TwoFormTest, PreservedByTheMap) {
    RationalSampler rs(10);
    for (int t = 0; t < 10; ++t) {
        const int n = 3 + t % 4;
        auto st = sample(rs, n, false);
        auto m = affine(st.S_minus), c = affine(st.S), p = affine(leapfrog_step(st).S);
        auto u = rs.vec(2 * n), v = rs.vec(2 * n);
        EXPECT_EQ(two_form_value(m, c, u, v),
                  two_form_value(c, p, leapfrog_differential(m, c, u), leapfrog_differential(m, c, v)));
    }
}

TEST(CirclePatternTest, HandValue) {
    ComplexQuadruple quad{GaussRational(0), GaussRational(1), GaussRational(2), GaussRational(q(1, 2))};
    EXPECT_EQ(circle_pattern_plus(quad), GaussRational(q(3, 2)));
}

TEST(CirclePatternTest, RandomGaussianQuadruples) {
    RationalSampler rs(11);
    int done = 0;
    while (done < 100) {
        auto g = [&] { return GaussRational(rs.next(), rs.next()); };
        ComplexQuadruple quad{g(), g(), g(), g()};
        try {
            EXPECT_TRUE(circle_pattern_check(quad));
            ++done;
        } catch (const SingularConfiguration&) {
        }
    }
}
