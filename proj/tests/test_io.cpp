#include <gtest/gtest.h>

#include <sstream>

#include "pentagram/io.hpp"
#include "pentagram/pentagram.hpp"

using namespace pentagram;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

void expect_round_trip(const io::AnyState& s) {
    auto text = io::print(s);
    auto back = io::parse(text);
    EXPECT_EQ(back.index(), s.index());
    EXPECT_EQ(io::to_json(back), io::to_json(s)) << text;
}

std::string error_of(const std::string& text) {
    try {
        io::parse(text);
    } catch (const InputError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST(IoTest, RoundTripEverySchema) {
    RationalSampler rs(1);
    auto xy = rs.xy(MapShape::make(3, 5));
    expect_round_trip(xy);
    EXPECT_EQ(std::get<XYState<Rational>>(io::parse(io::print(xy))), xy);
    auto pq = rs.pq(MapShape::make(4, 9));
    EXPECT_EQ(std::get<PQState<Rational>>(io::parse(io::print(pq))), pq);
    CornerState<Rational> c(rs.vec(6), rs.vec(6));
    EXPECT_EQ(std::get<CornerState<Rational>>(io::parse(io::print(c))), c);
    XYState<Rational> unit(MapShape::make(3, 5), std::vector<Rational>(5, q(1)), std::vector<Rational>(5, q(1)));
    expect_round_trip(polygon_from_xy(unit));
    auto lf = LeapfrogState::closed(rs.vec(4), rs.vec(4));
    lf.monodromy(0, 1) = q(2, 3);
    expect_round_trip(lf);
}

TEST(IoTest, RationalsStayExact) {
    auto s = io::parse(R"({"mode":"xy","k":2,"n":2,"x":["1/3","-2/6"],"y":[4,"0"]})");
    const auto& xy = std::get<XYState<Rational>>(s);
    EXPECT_EQ(xy.x(1), q(1, 3));
    EXPECT_EQ(xy.x(2), q(-1, 3));
    EXPECT_EQ(xy.y(1), q(4));
    EXPECT_NE(io::print(s).find("\"1/3\""), std::string::npos);
    EXPECT_NE(io::print(s).find("\"-1/3\""), std::string::npos);
}

TEST(IoTest, ModeDefaultsToPolygon) {
    auto s = io::parse(R"({"k":2,"n":2,"vertices":[["1","0"],["0","1"]],"monodromy":[["1","1"],["0","1"]]})");
    EXPECT_TRUE(std::holds_alternative<LiftedPolygon>(s));
}

TEST(IoTest, ErrorsNameTheProblem) {
    EXPECT_NE(error_of(R"({"mode":"xy","k":2,"n":2,"x":["1","1"],"y":["1","1"],"z":1})").find("unknown field \"z\""),
              std::string::npos);
    EXPECT_NE(error_of(R"({"mode":"xy","k":2,"n":2,"x":["1"],"y":["1","1"]})").find("\"x\" has 1 entries"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"mode":"xy","k":2,"n":2,"x":["1/0","1"],"y":["1","1"]})").find("x[0]"), std::string::npos);
    EXPECT_NE(error_of(R"({"mode":"xy","k":2,"n":2,"x":[0.5,"1"],"y":["1","1"]})").find("p/q"), std::string::npos);
    EXPECT_NE(error_of(R"({"mode":"banana"})").find("unknown mode"), std::string::npos);
    EXPECT_NE(error_of(R"({"k":2})").find("missing field \"mode\""), std::string::npos);
    EXPECT_NE(error_of(R"({"mode":"xy", "k":)").find("malformed JSON"), std::string::npos);
    EXPECT_NE(error_of("[1,2]").find("JSON object"), std::string::npos);
    EXPECT_NE(error_of(R"({"mode":"leapfrog","n":1,"S_minus":[["0","0"]],"S":[["1","1"]]})").find("RP^1"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"mode":"polygon","k":2,"n":2,"vertices":[["1","0"],["0","1"]],"monodromy":[["1","1"],["1","1"]]})")
                  .find("singular"),
              std::string::npos);
}

TEST(IoTest, CsvCells) {
    std::ostringstream a, b;
    io::csv_cells(a, q(1, 3), false);
    io::csv_cells(b, q(1, 3), true);
    EXPECT_EQ(a.str(), ",0.33333333333333331");
    EXPECT_EQ(b.str(), ",0.33333333333333331,1/3");
}
