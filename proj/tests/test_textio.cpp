#include <gtest/gtest.h>

#include "support.hpp"

using namespace jt;

namespace {

const Ring& R = Ring::xy();
const MPoly x = MPoly::var(R, "x");
const MPoly y = MPoly::var(R, "y");

TEST(Parse, SpecExamples) {
  EXPECT_EQ(parse_poly("x + y + x^2"), x + y + x * x);
  EXPECT_EQ(parse_poly("3/2*x*y - y"), x * y * Q("3/2") - y);
}

TEST(Parse, Grammar) {
  EXPECT_EQ(parse_poly("(x + y)^2"), x * x + x * y * Rat(2) + y * y);
  EXPECT_EQ(parse_poly("-x + 1"), MPoly(R, 1) - x);
  EXPECT_EQ(parse_poly("2*-3"), MPoly(R, -6));
  EXPECT_EQ(parse_poly("x^0"), MPoly(R, 1));
  EXPECT_EQ(parse_poly("  x\n  +  y "), x + y);
  EXPECT_EQ(parse_poly("0"), MPoly(R));
  EXPECT_EQ(parse_poly("4/6"), MPoly(R, Q("2/3")));
  EXPECT_EQ(parse_poly("t^2 - t", Ring({"t"})), MPoly::var(Ring({"t"}), "t") * MPoly::var(Ring({"t"}), "t") - MPoly::var(Ring({"t"}), "t"));
}

void expect_parse_error(const char* src, std::size_t line, std::size_t col) {
  try {
    parse_poly(src);
    ADD_FAILURE() << "no error for '" << src << "'";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << src << ": " << e.what();
    EXPECT_EQ(e.column(), col) << src << ": " << e.what();
  }
}

TEST(Parse, ErrorsCarryPositions) {
  expect_parse_error("x^", 1, 3);
  expect_parse_error("x +", 1, 4);
  expect_parse_error("2x", 1, 2);        // implicit multiplication
  expect_parse_error("x*z", 1, 3);       // unknown variable
  expect_parse_error("1/0", 1, 3);       // zero denominator
  expect_parse_error("x\n+ (y", 2, 5);   // unclosed parenthesis
  expect_parse_error("x^-1", 1, 3);
  expect_parse_error("", 1, 1);
  EXPECT_THROW(parse_poly("x^99999"), ParseError);
}

TEST(Print, SpecExamples) {
  EXPECT_EQ(print_poly(x * x + x + y), "x^2 + x + y");
  EXPECT_EQ(print_poly(MPoly(R)), "0");
  EXPECT_EQ(print_poly(MPoly(R, 1) - x), "-x + 1");
}

TEST(Print, Formatting) {
  EXPECT_EQ(print_poly(x * x * y * Q("-3/4") + y * Rat(2) - Rat(1)), "-3/4*x^2*y + 2*y - 1");
  EXPECT_EQ(print_poly(MPoly(R, Q("-1/2"))), "-1/2");
  EXPECT_EQ(print_poly(U("x^3 - 1")), "x^3 - 1");
  EXPECT_EQ(print_poly(parse_poly("y^2 + x*y + x^2")), "x^2 + x*y + y^2");
}

TEST(Print, RoundTripAndInjective) {
  std::mt19937_64 rng(71);
  std::map<std::string, MPoly> seen;
  for (int i = 0; i < 300; ++i) {
    MPoly f = rand_poly(rng, 4, 3, 0.4);
    f = f * rand_rat(rng, 4);
    const std::string s = print_poly(f);
    EXPECT_EQ(parse_poly(s), f) << s;
    EXPECT_EQ(s.find("+ -"), std::string::npos);
    auto [it, fresh] = seen.emplace(s, f);
    if (!fresh) {
      EXPECT_EQ(it->second, f) << s;
    }
  }
}

template <class T>
void expect_roundtrip(const T& v) {
  const Json j = to_json(v);
  EXPECT_EQ(from_json<T>(j), v);
  // text roundtrip as well
  EXPECT_EQ(from_json<T>(Json::parse(dump(j))), v);
}

TEST(Json, RoundTripDomainTypes) {
  expect_roundtrip(Q("-7/3"));
  expect_roundtrip(P("x^2 - 1/2*y"));
  expect_roundtrip(U("x^2 - x"));
  expect_roundtrip(PlanePoint{Q("1/2"), -3});
  expect_roundtrip(example_pair(3));
  expect_roundtrip(analyze(P("x*y"), x));  // n absent, not discrete
  expect_roundtrip(solve_y_equation(example_pair(2)));
  expect_roundtrip(solve_bounded(P("y + x^3"), P("x + y + x^3"), x * x, 3, 3));
  for (const AutoStep& s : std::vector<AutoStep>{Translation{1, Q("-1/2")}, Shear{U("x^3")},
                                                 LinearMap{Side::left, {1, 2, 3, 4}}, GeneratorMix{1, -1}, Swap{}})
    expect_roundtrip(s);
  expect_roundtrip(rational_intersection(P("x^2 - x"), y));
  expect_roundtrip(intersection_data(example_pair(2)));
  expect_roundtrip(verify_theorem1(example_pair(2)));
  expect_roundtrip(decompose(example_pair(2)));
  ExploreOptions opt;
  opt.entry_degree = 0;
  expect_roundtrip(explore_conjecture(2, 1, opt));
}

TEST(Json, ReductionReportRoundTrip) {
  const ReductionReport rep = reduce_full(apply_shear(analyze(P("x^2 - x + y"), P("x^2 - x + y*(1 + x)")), U("-x^2")));
  const ReductionReport back = from_json<ReductionReport>(to_json(rep));
  EXPECT_EQ(back.chain, rep.chain);
  EXPECT_EQ(back.before, rep.before);
  EXPECT_EQ(back.after, rep.after);
  EXPECT_EQ(back.points_before, rep.points_before);
  EXPECT_EQ(back.points_after, rep.points_after);
  EXPECT_EQ(back.shear_offset, rep.shear_offset);
  EXPECT_EQ(back.jacobian_constant, rep.jacobian_constant);
  EXPECT_EQ(back.phi_x, rep.phi_x);
  EXPECT_EQ(back.phi_y, rep.phi_y);
  EXPECT_EQ(back.jacobian_preserved, rep.jacobian_preserved);
  EXPECT_EQ(back.intersection_number_after, rep.intersection_number_after);
}

TEST(Json, TopCoefficientReportContents) {
  const Json j = to_json(verify_theorem1(example_pair(2)));
  EXPECT_EQ(j.at("g2_top_coeff"), "1");
  EXPECT_EQ(j.at("oracle_total"), 1);
  EXPECT_EQ(j.at("agree"), true);
  EXPECT_EQ(j.at("g1"), "-x");
  EXPECT_EQ(j.at("g2"), "x + 1");
}

void expect_pointer(const Json& j, const std::string& ptr) {
  try {
    (void)from_json<PolyPair>(j);
    ADD_FAILURE() << "accepted " << j.dump();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.pointer(), ptr) << e.what();
  }
}

TEST(Json, MalformedDocumentsNamePointer) {
  Json good = to_json(example_pair(2));
  Json j = good;
  j.erase("f2");
  expect_pointer(j, "/f2");
  j = good;
  j["f1"] = "x +";
  expect_pointer(j, "/f1");
  j = good;
  j["d1"] = "2";
  expect_pointer(j, "/d1");
  j = good;
  j["rc1"] = false;  // contradicts the polynomials
  expect_pointer(j, "/rc1");
  expect_pointer(Json::array(), "/");
  Json pts = Json::array({{{"x", "1"}, {"y", "1/0"}}});
  try {
    std::vector<PlanePoint> v;
    read_array(JsonCursor(pts), v);
    ADD_FAILURE();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.pointer(), "/0/y");
  }
}

}  // namespace
