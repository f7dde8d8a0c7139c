#include <gtest/gtest.h>

#include <random>

#include "dct/ore.hpp"
#include "dct/parse.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace dct;

namespace {

OrePoly op(const char* s) { return parse_operator(s); }
RationalFunction rf(const char* num) { return RationalFunction(parse_operator(num).coeff(0)); }
const RationalFunction X{Polynomial::x()};

}  // namespace

TEST(Ore, ProductExamples) {
  EXPECT_EQ(OrePoly::D() * OrePoly::scalar(X), op("x*D + 1"));
  EXPECT_EQ(OrePoly::D() * OrePoly::D(), OrePoly::D(2));
  OrePoly a = op(fixtures::F2F1A);
  EXPECT_EQ(a * OrePoly::scalar(1), a);
}

TEST(Ore, ApplyExamples) {
  EXPECT_TRUE(apply(op("x*D - 1"), X).is_zero());
  EXPECT_EQ(apply(OrePoly::D(2), rf("x^3")), rf("6*x"));
  EXPECT_TRUE(apply(op(fixtures::EX1), RationalFunction(1)).is_zero());
}

TEST(Ore, AdjointExamples) {
  EXPECT_EQ(adjoint(OrePoly::D()), -OrePoly::D());
  EXPECT_EQ(adjoint(OrePoly::scalar(X)), OrePoly::scalar(X));
  EXPECT_EQ(adjoint(op("x*D")), op("-x*D - 1"));
}

TEST(Ore, RightDivisionExamples) {
  auto [q1, r1] = right_divmod(OrePoly::D(2), OrePoly::D());
  EXPECT_EQ(q1, OrePoly::D());
  EXPECT_TRUE(r1.is_zero());
  auto [q2, r2] = right_divmod(op("D^2 - D"), OrePoly::D());
  EXPECT_EQ(q2, op("D - 1"));
  EXPECT_TRUE(r2.is_zero());
  auto [q3, r3] = right_divmod(OrePoly::D(), OrePoly::D(2));
  EXPECT_TRUE(q3.is_zero());
  EXPECT_EQ(r3, OrePoly::D());
  EXPECT_THROW(right_divmod(OrePoly::D(), OrePoly()), OreError);
}

TEST(Ore, LclmExamples) {
  EXPECT_EQ(lclm(OrePoly::D(), op("D - 1")), op("D^2 - D"));
  OrePoly a = op(fixtures::F2F1A);
  OrePoly l2 = lclm(OrePoly::D(2), a);
  EXPECT_EQ(l2.order(), 4);
  EXPECT_TRUE(right_divmod(l2, a).second.is_zero());
  EXPECT_TRUE(right_divmod(l2, OrePoly::D(2)).second.is_zero());
  EXPECT_EQ(lclm(a, a), a.monic());
}

TEST(Ore, SymmetricProductExamples) {
  OrePoly a = op(fixtures::F2F1A);
  EXPECT_EQ(symmetric_product(OrePoly::D(), a), a.monic());
  OrePoly e = op(fixtures::EXP);
  EXPECT_EQ(symmetric_product(e, e), op("D^3 - 4*D"));
  EXPECT_EQ(symmetric_power(e, 2), op("D^3 - 4*D"));
  // products f*g with f in {1, x}: the span of 1, x, f_i, x f_i
  EXPECT_EQ(symmetric_product(a, OrePoly::D(2)).order(), 4);
}

TEST(Ore, SymmetricPowerOrders) {
  OrePoly e = op(fixtures::EXP);
  for (int s = 1; s <= 5; ++s) EXPECT_EQ(symmetric_power(e, s).order(), s + 1);
  OrePoly q = op(fixtures::QUINTIC);
  const int expected[] = {4, 9, 15};
  for (int s = 1; s <= 3; ++s) {
    OrePoly ls = symmetric_power(q, s);
    EXPECT_EQ(ls.order(), expected[s - 1]);
    EXPECT_EQ(symmetric_power_order(q, s), expected[s - 1]);
  }
  EXPECT_THROW(symmetric_power(e, 0), OreError);
}

TEST(Ore, SymmetricPowerAnnihilatesPowersOfSolutions) {
  // x^(1/2) is a solution of 2xD - 1; its square x must solve the square
  OrePoly l = op("2*x*D - 1");
  OrePoly l2 = symmetric_power(l, 2);
  EXPECT_EQ(l2.order(), 1);
  EXPECT_TRUE(apply(l2, X).is_zero());
  // solutions 1, x; cubes span 1, x, x^2, x^3
  OrePoly d3 = symmetric_power(OrePoly::D(2), 3);
  EXPECT_EQ(d3, OrePoly::D(4));
}

TEST(Ore, SingularSupportExamples) {
  SingularSupport a = singular_support(op(fixtures::F2F1A));
  EXPECT_EQ(a.finite_points, (std::vector<Rational>{0, 1}));
  EXPECT_TRUE(a.infinity_singular);
  EXPECT_FALSE(a.has_irrational_singularities);
  SingularSupport b = singular_support(op(fixtures::ORD3));
  EXPECT_EQ(b.finite_points, (std::vector<Rational>{-1, 0, 1}));
  EXPECT_TRUE(b.infinity_singular);
  SingularSupport c = singular_support(OrePoly::D(2));
  EXPECT_TRUE(c.finite_points.empty());
  EXPECT_FALSE(c.has_irrational_singularities);
  // the solution x has a pole at infinity
  EXPECT_TRUE(c.infinity_singular);
  EXPECT_FALSE(singular_support(OrePoly::D()).infinity_singular);
  SingularSupport q = singular_support(op(fixtures::QUINTIC));
  EXPECT_TRUE(q.finite_points.empty());
  EXPECT_TRUE(q.has_irrational_singularities);
  EXPECT_EQ(q.irrational_locus, op("x^5 + 3125/256").coeff(0).num());
}

TEST(Ore, SubstituteInfinity) {
  // x D at t = 1/x becomes -t D_t
  EXPECT_EQ(substitute_infinity(op("x*D")), op("-x*D"));
  EXPECT_EQ(substitute_infinity(substitute_infinity(op(fixtures::F2F1A))).monic(), op(fixtures::F2F1A).monic());
}

TEST(Ore, IntegerForm) {
  OrePoly a = op(fixtures::F2F1A);
  std::vector<IntPoly> p = integer_form(a);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(from_integer_form(p).monic(), a.monic());
  EXPECT_EQ(p[2], IntPoly(std::vector<Integer>{0, -48, 48}));
}

TEST(Parse, Fixtures) {
  OrePoly a = op(fixtures::F2F1A);
  EXPECT_EQ(a.order(), 2);
  EXPECT_EQ(a.coeff(0), RationalFunction(Rational(1, 48)));
  EXPECT_EQ(to_string(a), "(x^2 - x)*D^2 + (31/24*x - 5/6)*D + 1/48");
  EXPECT_EQ(op(fixtures::EXP), OrePoly::D(2) - OrePoly::scalar(1));
  OrePoly e = op(fixtures::EX1);
  EXPECT_EQ(e.coeff(2), rf("3*x^3 - 3*x"));
  EXPECT_EQ(e.coeff(1), rf("6*x^2 - 2"));
  EXPECT_TRUE(e.coeff(0).is_zero());
}

TEST(Parse, Errors) {
  try {
    parse_operator("D*x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
    EXPECT_NE(std::string(e.what()).find("D appears left of x"), std::string::npos);
  }
  EXPECT_THROW(parse_operator("(x + 1"), ParseError);
  EXPECT_THROW(parse_operator("x +* D"), ParseError);
  EXPECT_THROW(parse_operator("1/0"), ParseError);
  EXPECT_THROW(parse_operator("x/D"), ParseError);
  EXPECT_THROW(parse_operator("0"), ParseError);
  EXPECT_THROW(parse_operator("y*D"), ParseError);
  try {
    parse_operator("x^2 + $");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
}

TEST(Parse, RoundTripFixtures) {
  for (const char* s : {fixtures::EX1, fixtures::F2F1A, fixtures::F2F1B, fixtures::F2F1C, fixtures::F2F1D, fixtures::EXP,
                        fixtures::ORD3, fixtures::ORD3B, fixtures::QUINTIC}) {
    OrePoly l = op(s);
    EXPECT_EQ(parse_operator(to_string(l)), l) << s;
  }
}

TEST(OreProperty, ParsePrintRoundTrip) {
  std::mt19937_64 g(101);
  for (int t = 0; t < 200; ++t) {
    OrePoly l = gen::op(g, 3, 3, 9);
    std::string s = to_string(l);
    EXPECT_EQ(parse_operator(s), l) << s;
  }
}

TEST(OreProperty, AdjointInvolutionAndAntiHomomorphism) {
  std::mt19937_64 g(102);
  for (int t = 0; t < 200; ++t) {
    OrePoly a = gen::op(g, 3, 2, 5), b = gen::op(g, 3, 2, 5);
    EXPECT_EQ(adjoint(adjoint(a)), a);
    EXPECT_EQ(adjoint(a).order(), a.order());
    EXPECT_EQ(adjoint(a * b), adjoint(b) * adjoint(a));
  }
}

TEST(OreProperty, RightDivisionReconstructs) {
  std::mt19937_64 g(103);
  for (int t = 0; t < 200; ++t) {
    OrePoly a = gen::op(g, 5, 2, 5), b = gen::op(g, 3, 2, 5);
    auto [q, r] = right_divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.order(), b.order());
  }
}

TEST(OreProperty, ProductOrderAdds) {
  std::mt19937_64 g(104);
  for (int t = 0; t < 200; ++t) {
    OrePoly a = gen::op(g, 3, 2, 5), b = gen::op(g, 3, 2, 5);
    EXPECT_EQ((a * b).order(), a.order() + b.order());
  }
}

TEST(OreProperty, ApplyIsAction) {
  std::mt19937_64 g(105);
  for (int t = 0; t < 200; ++t) {
    OrePoly a = gen::op(g, 2, 2, 5), b = gen::op(g, 2, 2, 5);
    RationalFunction f = gen::ratfun(g, 3, 7);
    EXPECT_EQ(apply(a * b, f), apply(a, apply(b, f)));
  }
}

TEST(OreProperty, LclmDoubleDivisibility) {
  std::mt19937_64 g(106);
  for (int t = 0; t < 100; ++t) {
    OrePoly a = gen::op_of_order(g, 1 + t % 2, 2, 5), b = gen::op_of_order(g, 1 + (t / 2) % 2, 2, 5);
    OrePoly l = lclm(a, b);
    EXPECT_TRUE(l.leading() == RationalFunction(1));
    EXPECT_TRUE(right_divmod(l, a).second.is_zero());
    EXPECT_TRUE(right_divmod(l, b).second.is_zero());
    EXPECT_LE(l.order(), a.order() + b.order());
    EXPECT_GE(l.order(), std::max(a.order(), b.order()));
  }
}

TEST(OreProperty, LclmWithLeftMultipleIsMinimal) {
  // C*B is already a common left multiple of B and C*B, so nothing smaller exists
  std::mt19937_64 g(107);
  for (int t = 0; t < 100; ++t) {
    OrePoly b = gen::op_of_order(g, 1 + t % 2, 2, 5), c = gen::op_of_order(g, 1, 2, 5);
    OrePoly cb = c * b;
    EXPECT_EQ(lclm(b, cb), cb.monic());
    EXPECT_EQ(lclm(cb, b), cb.monic());
  }
}

TEST(OreProperty, SymmetricPowerOne) {
  std::mt19937_64 g(108);
  for (int t = 0; t < 100; ++t) {
    OrePoly l = gen::op_of_order(g, 1 + t % 3, 2, 5);
    EXPECT_EQ(symmetric_power(l, 1), l.monic());
  }
}

TEST(OreProperty, SymmetricPowerOrderBoundForOrderTwo) {
  std::mt19937_64 g(109);
  for (int t = 0; t < 100; ++t) {
    OrePoly l = gen::op_of_order(g, 1 + t % 2, 1, 4, false);
    int s = 2 + t % 3;
    OrePoly ls = symmetric_power(l, s);
    EXPECT_LE(ls.order(), s + 1);
    EXPECT_EQ(symmetric_power_order(l, s), ls.order());
  }
}

TEST(OreProperty, SymmetricSquareOfFirstOrder) {
  // for L = D - g the square is D - 2g
  std::mt19937_64 g(110);
  for (int t = 0; t < 100; ++t) {
    RationalFunction c = gen::ratfun(g, 2, 5);
    OrePoly l = OrePoly::D() - OrePoly::scalar(c);
    EXPECT_EQ(symmetric_power(l, 2), OrePoly::D() - OrePoly::scalar(c + c));
  }
}
