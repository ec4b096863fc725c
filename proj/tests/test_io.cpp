#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace troplith;
using namespace troplith::testing;
using troplith::io::json;

namespace {

TropicalCycle round_trip(const TropicalCycle& X) { return io::cycle_from(json::parse(io::to_json(X).dump())); }

}  // namespace

TEST(Io, RoundTripFixtures) {
  for (const auto& X : {tropical_line(), tropical_line({Rational(1, 3), -7}), line_with_vertical(), five_vertex_curve(),
                        TropicalCycle::whole_space(3), tropical_line().scaled(-2)}) {
    TropicalCycle Y = round_trip(X);
    EXPECT_EQ(Y, X);
    EXPECT_EQ(io::to_json(Y).dump(), io::to_json(X).dump());
  }
}

TEST(Io, RoundTripRandomCorpus) {
  std::mt19937 rng(17);
  for (int i = 0; i < 15; ++i) {
    TropicalCycle X = i % 3 == 0 ? random_hypersurface(rng, 3) : random_curve(rng, 2 + i % 2);
    EXPECT_EQ(round_trip(X), X) << i;
  }
}

TEST(Io, BigIntegersTravelAsStrings) {
  Integer big("123456789012345678901234567890");
  json j = io::to_json(big);
  EXPECT_TRUE(j.is_string());
  EXPECT_EQ(io::integer_from(j), big);
  EXPECT_TRUE(io::to_json(Integer(-5)).is_number_integer());
  EXPECT_EQ(io::rational_from(json("-3/6")), Rational(-1, 2));
}

TEST(Io, MalformedDocuments) {
  auto code = [](const json& j) {
    try {
      io::cycle_from(j);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  json good = io::to_json(tropical_line());
  json no_cells = good;
  no_cells.erase("cells");
  EXPECT_EQ(code(no_cells), ErrorCode::Malformed);
  json float_coord = good;
  float_coord["cells"][0]["vertices"][0][0] = 0.5;
  EXPECT_EQ(code(float_coord), ErrorCode::Malformed);
  json unbalanced = good;
  unbalanced["cells"][0]["weight"] = 2;
  EXPECT_EQ(code(unbalanced), ErrorCode::NotBalanced);
  json wrong_dim = good;
  wrong_dim["dim"] = 2;
  EXPECT_EQ(code(wrong_dim), ErrorCode::NotAComplex);
}

TEST(Io, ValidationReportsDefect) {
  json j = io::to_json(tropical_line());
  j["cells"][0]["weight"] = 3;
  io::ValidationReport r = io::validate(io::cycle_document_from(j));
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_FALSE(r.ok());
  // the weights (1,1), (-1,0) x 3, (0,-1) leave -2 e_1
  QVec defect = r.violations[0].defect;
  EXPECT_TRUE(defect == (QVec{-2, 0}) || defect == (QVec{2, 0}));
}

TEST(Io, FunctionsMapsWitnesses) {
  auto f = TropicalPolynomial::make(2, {{{1, 0}, Rational(1, 2)}, {{0, 1}, 0}, {{0, 0}, -3}});
  RationalFunctionExpr r{f, TropicalPolynomial::make(2, {{{1, 1}, 0}, {{0, 0}, 0}})};
  RationalFunctionExpr r2 = io::function_from(io::to_json(r));
  EXPECT_EQ(io::to_json(r2).dump(), io::to_json(r).dump());
  RationalFunctionExpr single = io::function_from(io::to_json(f));
  EXPECT_TRUE(cycle_equal(divisor(single, TropicalCycle::whole_space(2)), divisor(f, TropicalCycle::whole_space(2))));

  auto m = IntegerAffineMap::make(3, {{1, 0, 2}, {0, -1, 1}}, {Rational(1, 2), 0});
  EXPECT_EQ(io::to_json(io::map_from(io::to_json(m))).dump(), io::to_json(m).dump());

  auto w = decompose(five_vertex_curve());
  auto w2 = io::witness_from(io::to_json(w));
  EXPECT_TRUE(w2.verify());
  EXPECT_EQ(w2.summands.size(), w.summands.size());
}

TEST(Io, ParsePoint) {
  EXPECT_EQ(io::parse_point("1,-2/3,0"), (QVec{1, Rational(-2, 3), 0}));
  EXPECT_THROW(io::parse_point("1,x"), Error);
}

TEST(Plot, DecimalRounding) {
  EXPECT_EQ(detail::decimal(Rational(1, 3)), "0.333");
  EXPECT_EQ(detail::decimal(Rational(2, 3)), "0.667");
  EXPECT_EQ(detail::decimal(Rational(-1, 8)), "-0.125");
  EXPECT_EQ(detail::decimal(Rational(1, 2000)), "0.001");
  EXPECT_EQ(detail::decimal(Rational(-7)), "-7.000");
}

TEST(Plot, ClipRayAndSegment) {
  BoundingBox b{-2, -2, 2, 2};
  auto s = detail::clip({0, 0}, {1, 1}, Rational(0), std::nullopt, b);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->second, (QVec{2, 2}));
  auto outside = detail::clip({3, 3}, {1, 0}, Rational(0), std::nullopt, b);
  EXPECT_FALSE(outside);
  auto line = detail::clip({0, 1}, {1, 0}, std::nullopt, std::nullopt, b);
  ASSERT_TRUE(line);
  EXPECT_EQ(line->first, (QVec{-2, 1}));
  EXPECT_EQ(line->second, (QVec{2, 1}));
}

TEST(Plot, TropicalLineHasThreeClippedRays) {
  std::string svg = plot_svg(tropical_line());
  std::size_t lines = 0;
  for (std::size_t at = svg.find("<line"); at != std::string::npos; at = svg.find("<line", at + 1)) ++lines;
  EXPECT_EQ(lines, 3u);
  // default box [-2,2]^2 scaled to 600 px: rays end on the frame
  EXPECT_NE(svg.find("x2=\"620.000\" y2=\"20.000\""), std::string::npos);
  EXPECT_EQ(svg.find("dasharray"), std::string::npos);
  EXPECT_EQ(plot_svg(tropical_line()), svg);
}

TEST(Plot, NegativeWeightsDashed) {
  std::string svg = plot_svg(tropical_line().scaled(-1), BoundingBox{-1, -1, 1, 1});
  EXPECT_NE(svg.find("dasharray"), std::string::npos);
  EXPECT_NE(svg.find(">-1</text>"), std::string::npos);
}

TEST(Plot, RejectsSurfaces) {
  EXPECT_THROW(plot_svg(TropicalCycle::whole_space(2)), Error);
  EXPECT_THROW(plot_svg(tropical_line_n(3, {0, 0, 0})), Error);
}
