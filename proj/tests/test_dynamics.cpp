#include <gtest/gtest.h>

#include "pentagram/pentagram.hpp"

using namespace pentagram;
using XY = XYState<Rational>;
using PQ = PQState<Rational>;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

std::vector<Rational> ints(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long a : v) out.push_back(q(a));
    return out;
}

XY ramp35() { return XY(MapShape::make(3, 5), ints({1, 2, 3, 4, 5}), ints({1, 1, 1, 1, 1})); }

XY regular(RationalSampler& rs, MapShape sh) {
    return rs.until([&](RationalSampler& g) { return g.xy(sh); },
                    [](const XY& s) {
                        map_T(s);
                        map_T_inv(s);
                        map_C(s);
                        map_D(s);
                        return true;
                    });
}

PQ regular_pq(RationalSampler& rs, MapShape sh) {
    return rs.until([&](RationalSampler& g) { return g.pq(sh); },
                    [](const PQ& s) {
                        map_Tbar(s);
                        map_Tbar_circ(s);
                        map_Dbar(s);
                        return true;
                    });
}

std::vector<MapShape> grid() {
    std::vector<MapShape> out;
    for (int k = 2; k <= 5; ++k)
        for (int n = k; n <= 11; ++n) out.push_back(MapShape::make(k, n));
    return out;
}

}  // namespace

TEST(MapShapeTest, Offsets) {
    auto s = MapShape::make(3, 5);
    EXPECT_EQ(s.r, 0);
    EXPECT_EQ(s.rprime, 1);
    auto t = MapShape::make(6, 13);
    EXPECT_EQ(t.r, 2);
    EXPECT_EQ(t.rprime, 2);
    EXPECT_THROW(MapShape::make(1, 5), InputError);
    EXPECT_THROW(MapShape::make(4, 3), InputError);
}

TEST(MapTTest, ConstantStateIsFixed) {
    XY s(MapShape::make(3, 5), ints({1, 1, 1, 1, 1}), ints({1, 1, 1, 1, 1}));
    EXPECT_EQ(map_T(s), s);
    EXPECT_EQ(map_T_inv(s), s);
}

TEST(MapTTest, HandValues) {
    EXPECT_EQ(map_T(ramp35()).x(1), q(8, 5));
    XY s(MapShape::make(2, 3), ints({1, 2, 3}), ints({1, 1, 1}));
    EXPECT_EQ(map_T(s).x(1), q(3, 2));
    EXPECT_EQ(map_T_inv(ramp35()).x(1), q(3, 2));
    EXPECT_EQ(map_T(map_T_inv(ramp35())), ramp35());
}

TEST(MapTTest, SingularSigmaThrows) {
    XY s(MapShape::make(3, 5), ints({1, 2, 3, 4, 5}), ints({-1, 1, 1, 1, 1}));
    EXPECT_THROW(map_T(s), SingularState);
}

TEST(MapTTest, InverseRoundTrip) {
    RationalSampler rs(1);
    for (auto sh : grid()) {
        auto s = regular(rs, sh);
        EXPECT_EQ(map_T_inv(map_T(s)), s);
        EXPECT_EQ(map_T(map_T_inv(s)), s);
    }
    EXPECT_EQ(map_T_inv(map_T(ramp35())), ramp35());
}

TEST(MapTTest, ScalingEquivariance) {
    RationalSampler rs(2);
    for (auto sh : grid()) {
        auto s = regular(rs, sh);
        Rational t = rs.next();
        XY ts = s;
        for (auto& v : ts.x.v) v *= t;
        for (auto& v : ts.y.v) v *= t;
        XY expect = map_T(s);
        for (auto& v : expect.x.v) v *= t;
        for (auto& v : expect.y.v) v *= t;
        EXPECT_EQ(map_T(ts), expect);
    }
}

TEST(AuxiliaryMapsTest, TwoByTwoEmptyProducts) {
    XY s(MapShape::make(2, 3), ints({2, 3, 5}), ints({7, 11, 13}));
    auto d = map_D(s);
    for (int i = 1; i <= 3; ++i) {
        EXPECT_EQ(d.x(i), Rational(1) / s.x(i));
        EXPECT_EQ(d.y(i), s.y(i) / (s.x(i) * s.x(i + 1)));
    }
    EXPECT_EQ(map_D(d), s);
}

TEST(AuxiliaryMapsTest, CompositionIdentities) {
    RationalSampler rs(3);
    for (auto sh : grid()) {
        auto s = regular(rs, sh);
        EXPECT_EQ(map_C(map_C(s)), s);
        EXPECT_EQ(map_D(map_D(s)), shift(s, sh.r - sh.rprime));
        EXPECT_EQ(map_D(map_C(s)), map_T(s));
    }
}

TEST(AuxiliaryMapsTest, InverseIsAlmostConjugatedByD) {
    RationalSampler rs(4);
    for (auto sh : grid()) {
        auto s = rs.until([&](RationalSampler& g) { return g.xy(sh); },
                          [](const XY& v) {
                              map_T_inv(map_D(v));
                              map_D(map_T(v));
                              return true;
                          });
        EXPECT_EQ(shift(map_T_inv(map_D(s)), sh.r - sh.rprime), map_D(map_T(s)));
    }
}

TEST(AuxiliaryMapsTest, CrossShapeInverse) {
    RationalSampler rs(5);
    for (auto sh : grid()) {
        const int m = sh.n - sh.k + 2;
        auto s = rs.until([&](RationalSampler& g) { return g.xy(sh); },
                          [&](const XY& v) {
                              map_T_inv(v);
                              map_T(map_D_kn(v, m));
                              return true;
                          });
        EXPECT_EQ(map_D_kn(map_T(map_D_kn(s, m)), sh.k), map_T_inv(s)) << sh.k << "," << sh.n;
    }
}

TEST(ProjectionTest, HandValues) {
    auto p = project_pq(ramp35());
    for (int i = 1; i <= 5; ++i) EXPECT_EQ(p.p(i), q(1, i));
    EXPECT_EQ(p.q(1), q(2));
    EXPECT_EQ(p.level(), q(1));
}

TEST(ProjectionTest, ScalingInvariantAndLevelOne) {
    RationalSampler rs(6);
    for (auto sh : grid()) {
        auto s = rs.xy(sh);
        EXPECT_EQ(project_pq(s).level(), q(1));
        XY t = s;
        Rational c = rs.next();
        for (auto& v : t.x.v) v *= c;
        for (auto& v : t.y.v) v *= c;
        EXPECT_EQ(project_pq(t), project_pq(s));
    }
}

TEST(ProjectionTest, ConjugatesTToTbar) {
    RationalSampler rs(7);
    for (auto sh : grid()) {
        auto s = rs.until([&](RationalSampler& g) { return g.xy(sh); },
                          [](const XY& v) {
                              map_Tbar(project_pq(v));
                              map_T(v);
                              return true;
                          });
        EXPECT_EQ(project_pq(map_T(s)), map_Tbar(project_pq(s)));
    }
}

TEST(PQMapTest, UnitStateIsFixed) {
    PQ s(MapShape::make(3, 5), ints({1, 1, 1, 1, 1}), ints({1, 1, 1, 1, 1}));
    EXPECT_EQ(map_Tbar(s), s);
}

TEST(PQMapTest, QUpdateForThreeFive) {
    RationalSampler rs(8);
    auto s = regular_pq(rs, MapShape::make(3, 5));
    auto t = map_Tbar(s);
    for (int i = 1; i <= 5; ++i) EXPECT_EQ(t.q(i), Rational(1) / s.p(i - 1));
}

TEST(PQMapTest, InverseAndLevel) {
    RationalSampler rs(9);
    for (auto sh : grid()) {
        auto s = regular_pq(rs, sh);
        EXPECT_EQ(map_Tbar_circ(map_Tbar(s)), s);
        EXPECT_EQ(map_Tbar(s).level(), s.level());
        EXPECT_EQ(map_Tbar_circ(s).level(), s.level());
        // level c goes to 1/c
        EXPECT_EQ(map_Dbar(s).level(), Rational(1) / s.level());
    }
}

TEST(PQMapTest, DbarIdentities) {
    RationalSampler rs(10);
    for (auto sh : grid()) {
        auto s = rs.until([&](RationalSampler& g) { return g.pq(sh); },
                          [](const PQ& v) {
                              map_Tbar_circ(map_Dbar(v));
                              map_Dbar(map_Tbar(v));
                              return true;
                          });
        EXPECT_EQ(map_Dbar(map_Dbar(s)), shift(s, sh.r - sh.rprime));
        EXPECT_EQ(shift(map_Tbar_circ(map_Dbar(s)), sh.r - sh.rprime), map_Dbar(map_Tbar(s)));
    }
}

TEST(PQMapTest, CrossShapeInverse) {
    RationalSampler rs(11);
    for (auto sh : grid()) {
        const int m = sh.n + 2 - sh.k;
        auto s = rs.until([&](RationalSampler& g) { return g.pq(sh); },
                          [&](const PQ& v) {
                              map_Tbar_circ(v);
                              map_Tbar(map_Dbar_kn(v, sh.k, m));
                              return true;
                          });
        EXPECT_EQ(map_Dbar_kn(map_Tbar(map_Dbar_kn(s, sh.k, m)), sh.k, sh.k), map_Tbar_circ(s));
    }
}

TEST(PQMapTest, SingularFactorThrows) {
    PQ s(MapShape::make(3, 5), ints({-1, 1, 1, 1, 1}), ints({1, 1, 1, 1, 1}));
    EXPECT_THROW(map_Tbar(s), SingularState);
}

TEST(ShiftTest, GroupLaw) {
    auto s = ramp35();
    EXPECT_EQ(shift(s, 0), s);
    EXPECT_EQ(shift(s, 5), s);
    EXPECT_EQ(shift(shift(s, 2), 4), shift(s, 6));
    EXPECT_EQ(shift(s, 1).x(1), q(2));
}

TEST(PentagramTest, ConstantStateIsFixed) {
    CornerState<Rational> c(std::vector<Rational>(5, q(2)), std::vector<Rational>(5, q(1, 3)));
    EXPECT_EQ(pentagram_corner(c), c);
}

TEST(PentagramTest, ExampleWithThirdsIsSingular) {
    CornerState<Rational> c(ints({1, 2, 3, 4, 5}), std::vector<Rational>(5, q(1, 3)));
    EXPECT_FALSE(c.pentagram_regular());
    EXPECT_THROW(pentagram_corner(c), SingularState);
}

TEST(PentagramTest, HandValueWithSixths) {
    CornerState<Rational> c(ints({1, 2, 3, 4, 5}), std::vector<Rational>(5, q(1, 6)));
    // X*_1 = X_1 (1 - X_5 Y_5) / (1 - X_2 Y_2) = (1/6) / (2/3)
    EXPECT_EQ(pentagram_corner(c).X(1), q(1, 4));
    // Y*_1 = Y_2 (1 - X_3 Y_3) / (1 - X_1 Y_1) = (1/6)(1/2) / (5/6)
    EXPECT_EQ(pentagram_corner(c).Y(1), q(1, 10));
    // X_4 Y_4 = 1 at Y = 1/4
    CornerState<Rational> bad(ints({1, 2, 3, 4, 5}), std::vector<Rational>(5, q(1, 4)));
    EXPECT_THROW(pentagram_corner(bad), SingularState);
}

TEST(PentagramTest, CornerChangeOfVariables) {
    CornerState<Rational> c(ints({1, 1, 1, 1, 1}), ints({1, 1, 1, 1, 1}));
    auto s = corner_to_xy(c);
    for (int i = 1; i <= 5; ++i) {
        EXPECT_EQ(s.x(i), q(1));
        EXPECT_EQ(s.y(i), q(-1));
    }
    RationalSampler rs(12);
    auto r = CornerState<Rational>(rs.vec(6), rs.vec(6));
    auto t = corner_to_xy(r);
    for (int i = 1; i <= 6; ++i) EXPECT_EQ(t.y(i) / t.x(i), -r.X(i + 1) * r.Y(i + 1));
}

TEST(PentagramTest, ConjugateToThreeMap) {
    RationalSampler rs(13);
    for (int n : {5, 6, 7, 9}) {
        for (int t = 0; t < 25; ++t) {
            auto c = rs.until([&](RationalSampler& g) { return CornerState<Rational>(g.vec(n), g.vec(n)); },
                              [](const CornerState<Rational>& v) {
                                  pentagram_corner(v);
                                  map_T(corner_to_xy(v));
                                  return true;
                              });
            EXPECT_EQ(corner_to_xy(shift(pentagram_corner(c), kPentagramShift)), map_T(corner_to_xy(c)));
        }
    }
}
