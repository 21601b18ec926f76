#include <gtest/gtest.h>

#include "support.hpp"

using namespace jt;

namespace {

const Ring& R = Ring::xy();
const MPoly x = MPoly::var(R, "x");
const MPoly y = MPoly::var(R, "y");

std::vector<MPoly> gens_of(const GroebnerBasis& gb) { return gb.generators(); }

bool same_set(std::vector<MPoly> a, std::vector<MPoly> b) {
  if (a.size() != b.size()) return false;
  for (const auto& f : a)
    if (std::find(b.begin(), b.end(), f) == b.end()) return false;
  return true;
}

TEST(Buchberger, SpecExamples) {
  const auto lex = MonomialOrder::lex(R);
  EXPECT_TRUE(same_set(gens_of(buchberger({x, y}, lex)), {x, y}));
  EXPECT_TRUE(same_set(gens_of(buchberger({y - x * x, y}, lex)), {y, x * x}));
  EXPECT_TRUE(same_set(gens_of(buchberger({P("x + y + x^2"), P("y + x^2")}, lex)), {x, y}));
}

TEST(Buchberger, ReducedAndMonic) {
  const auto gb = buchberger({P("x^2*y - 1"), P("x*y^2 - x")});
  for (const auto& g : gb.generators()) {
    EXPECT_EQ(leading_term(g, gb.order()), MPoly::monomial(R, detail::ordered(g, gb.order()).front().mono, 1));
  }
  EXPECT_TRUE(satisfies_buchberger_criterion(gb));
}

TEST(Buchberger, OrderPrecedenceValidated) {
  EXPECT_THROW(MonomialOrder::make(MonomialOrder::Kind::lex, R, {"x"}), InputError);
  EXPECT_THROW(buchberger({}), InputError);
}

TEST(NormalForm, SpecExamples) {
  const MPoly f1 = P("x + y + x^2"), f2 = P("y + x^2");
  const auto gb = buchberger({f1, f2});
  EXPECT_TRUE(normal_form(y * jacobian2(f1, f2), gb).is_zero());
  EXPECT_EQ(normal_form(MPoly(R, 1), buchberger({x, y})), MPoly(R, 1));
  EXPECT_TRUE(normal_form(x * x, buchberger({x})).is_zero());
}

TEST(Buchberger, RandomPropertySuite) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 25; ++i) {
    const MPoly a = rand_poly(rng, 3, 3, 0.5), b = rand_poly(rng, 3, 3, 0.5);
    if (a.is_zero() || b.is_zero()) continue;
    for (const auto& order : {MonomialOrder::grlex(R), MonomialOrder::lex(R)}) {
      if (order.kind == MonomialOrder::Kind::lex && (a.total_degree() > Degree(2) || b.total_degree() > Degree(2))) continue;
      const auto gb = buchberger({a, b}, order);
      EXPECT_TRUE(satisfies_buchberger_criterion(gb));
      EXPECT_TRUE(normal_form(a, gb).is_zero());
      EXPECT_TRUE(normal_form(b, gb).is_zero());
      const MPoly h = rand_poly(rng, 3, 5);
      const MPoly nf = normal_form(h, gb);
      EXPECT_EQ(normal_form(nf, gb), nf);
      // h - nf lies in the ideal; multiples of generators reduce to zero
      EXPECT_TRUE(normal_form(h - nf, gb).is_zero());
      EXPECT_TRUE(normal_form(a * h + b * (h + x), gb).is_zero());
    }
  }
}

TEST(Buchberger, UniqueReducedBasis) {
  // reordering and recombining generators gives the same reduced basis
  const MPoly a = P("x^2 + y^2 - 5"), b = P("x*y - 2");
  const auto g1 = buchberger({a, b}), g2 = buchberger({b, a + b * x}), g3 = buchberger({a * Rat(3), b, a + b});
  EXPECT_EQ(g1.generators(), g2.generators());
  EXPECT_EQ(g1.generators(), g3.generators());
}

TEST(QuotientDimension, SpecExamples) {
  EXPECT_EQ(quotient_dimension(buchberger({P("x + y + x^2"), P("y + x^2")})), 1u);
  EXPECT_EQ(quotient_dimension(buchberger({x * x, y})), 2u);
  EXPECT_FALSE(quotient_dimension(buchberger({x})));
  EXPECT_EQ(quotient_dimension(buchberger({MPoly(R, 1)})), 0u);
}

TEST(QuotientDimension, FactoredInstances) {
  // (r(x) + y s, y^e) with squarefree r of degree k: k points, each of
  // multiplicity e, total k e, independent of s
  std::mt19937_64 rng(42);
  for (int i = 0; i < 20; ++i) {
    const int k = 1 + static_cast<int>(rng() % 3), e = 1 + static_cast<int>(rng() % 3);
    UPoly r = U("1");
    for (int j = 0; j < k; ++j) r = r * UPoly::linear_factor("x", Rat(j * 2 - 1));
    const MPoly s = rand_poly(rng, 2, 3);
    const MPoly f1 = to_mpoly(r, R) + y * s, f2 = pow(y, static_cast<unsigned>(e));
    EXPECT_EQ(quotient_dimension(buchberger({f1, f2})), static_cast<std::size_t>(k * e));
    // elementary generator operations keep the ideal
    const MPoly g1 = f1 + f2 * x, g2 = f2 + g1 * Rat(2) * y;
    EXPECT_EQ(quotient_dimension(buchberger({g1, g2})), static_cast<std::size_t>(k * e)) << print_poly(f1);
  }
}

TEST(QuotientDimension, BezoutForGenericLines) {
  // product of distinct lines against another product: transversal, count = d1 d2
  const MPoly f = (x - Rat(1)) * (x + Rat(2)) * (x - Rat(5)), g = (y - Rat(1)) * (y + Rat(3));
  EXPECT_EQ(quotient_dimension(buchberger({f, g})), 6u);
}

TEST(QuotientDimension, TransversalMatchesResultantDegree) {
  // squarefree-adjusted resultant degree equals the count when all points are
  // transversal and have distinct x-coordinates
  const MPoly f1 = P("y - x^2 + 1"), f2 = P("y - x + 1");  // points x = 0, 1
  const UPoly res = resultant_y(f1, f2);
  EXPECT_EQ(squarefree_part(res).degree(), Degree(2));
  EXPECT_EQ(quotient_dimension(buchberger({f1, f2})), 2u);
}

TEST(Rc2, SpecExamples) {
  EXPECT_TRUE(rc2_check(P("x + y + x^2"), P("y + x^2")));
  EXPECT_FALSE(rc2_check(x * x, y - Rat(1)));
  EXPECT_TRUE(rc2_check(x, y));
  EXPECT_THROW(rc2_check(x, x * y), PreconditionError);
}

TEST(Rc2, ConsistentWithRationalPoints) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 15; ++i) {
    const Rat a = rand_rat(rng, 4), b = rand_rat(rng, 4);
    if (a == 0 && b == 0) continue;
    // the line through (0, 0) and (a, b) against the circle on that diameter
    const MPoly f1 = x * b - y * a, f2 = (x - a) * x + (y - b) * y;
    ASSERT_EQ(quotient_dimension(buchberger({f1, f2})), 2u);
    EXPECT_EQ(rc2_check(f1, f2), b == 0);
    const auto ri = rational_intersection(f1, f2);
    for (const auto& p : ri.points) {
      EXPECT_EQ(eval_xy(f1, p.point.x, p.point.y), 0);
      EXPECT_EQ(eval_xy(f2, p.point.x, p.point.y), 0);
      if (rc2_check(f1, f2)) {
        EXPECT_EQ(p.point.y, 0);
      }
    }
  }
}

TEST(NormalCrossing, SpecExamples) {
  EXPECT_TRUE(normal_crossing_check(P("x + y + x^2"), P("y + x^2")));
  EXPECT_FALSE(normal_crossing_check(x * x, y));
  EXPECT_TRUE(normal_crossing_check(x * x - Rat(1), y));
}

TEST(RadicalMember, Basics) {
  EXPECT_TRUE(radical_member({x * x, y}, x));
  EXPECT_FALSE(radical_member({x * x, y - Rat(1)}, y));
  EXPECT_TRUE(radical_member({x * x - Rat(1), y}, (x - Rat(1)) * (x + Rat(1))));
  EXPECT_FALSE(radical_member({x * x - Rat(1), y}, x - Rat(1)));
}

TEST(LocalMultiplicity, KnownValues) {
  EXPECT_EQ(local_multiplicity(P("y + x^2"), P("y + 2*x^2"), 0, 0, 4), 2u);
  EXPECT_EQ(local_multiplicity(P("y - x^3"), y, 0, 0, 3), 3u);
  EXPECT_EQ(local_multiplicity(x * x - Rat(1), y, 1, 0, 2), 1u);
  EXPECT_EQ(local_multiplicity(x * x - Rat(1), y, -1, 0, 2), 1u);
  // y^2 = x^3 cusp against y: multiplicity 3; against x: 2
  EXPECT_EQ(local_multiplicity(P("y^2 - x^3"), y, 0, 0, 6), 3u);
  EXPECT_EQ(local_multiplicity(P("y^2 - x^3"), x, 0, 0, 6), 2u);
}

TEST(LocalMultiplicity, SumsToQuotientDimension) {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 10; ++i) {
    const int e = 1 + static_cast<int>(rng() % 3);
    const MPoly f1 = P("x^3 - x") + y * rand_poly(rng, 1, 2), f2 = pow(y, static_cast<unsigned>(e)) + f1 * x;
    const auto total = quotient_dimension(buchberger({f1, f2}));
    ASSERT_TRUE(total);
    const auto ri = rational_intersection(f1, f2);
    std::size_t sum = 0;
    for (const auto& p : ri.points) sum += p.multiplicity;
    EXPECT_EQ(sum, *total);
    EXPECT_EQ(ri.total, *total);
    EXPECT_EQ(*total, static_cast<std::size_t>(3 * e));
  }
}

}  // namespace
