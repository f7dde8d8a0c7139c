#include <gtest/gtest.h>

#include <random>

#include "dct/localsolve.hpp"
#include "dct/parse.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace dct;

namespace {

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

std::vector<Rational> qs(std::initializer_list<Rational> v) { return v; }

std::vector<Rational> exps(const char* op, const Point& p) { return classify_point(parse_operator(op), p).exponents; }

// Reference tables list exponents in descending order; compare ascending.
std::vector<Rational> desc(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// theta = t d/dt at t = x - xi, or at t = 1/x.
OrePoly theta(const Point& p) {
  if (p.is_infinity()) return OrePoly({0, RationalFunction(Polynomial(std::vector<Rational>{0, -1}))});
  return OrePoly({0, RationalFunction(Polynomial(std::vector<Rational>{-p.xi, 1}))});
}

OrePoly eval_theta(const Polynomial& q, const OrePoly& th) {
  OrePoly acc;
  for (int k = q.degree(); k >= 0; --k) acc = acc * th + OrePoly::scalar(q.coeff(k));
  return acc;
}

// sum_n t^n Q_n(theta) with Q_0 = prod (theta - roots[i]); Q_n random.
OrePoly theta_op(std::mt19937_64& g, const Point& p, const std::vector<Rational>& roots, int tail) {
  OrePoly th = theta(p);
  Polynomial q0(1);
  for (const Rational& r : roots) q0 = q0 * Polynomial(std::vector<Rational>{-r, 1});
  OrePoly l = eval_theta(q0, th);
  RationalFunction t = p.is_infinity() ? RationalFunction(Polynomial(1), Polynomial::x())
                                       : RationalFunction(Polynomial(std::vector<Rational>{-p.xi, 1}));
  RationalFunction tn(1);
  for (int n = 1; n <= tail; ++n) {
    tn = tn * t;
    Polynomial qn = gen::poly(g, static_cast<int>(roots.size()) - 1, 4, 3);
    l += tn * eval_theta(qn, th);
  }
  return l;
}

Rational small_rational(std::mt19937_64& g) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 4);
  return q(num(g), den(g));
}

void expect_annihilated(const OrePoly& l, const PuiseuxSeries& f) {
  PuiseuxSeries z = apply_to_series(l, f);
  for (const Rational& c : z.coeffs) ASSERT_EQ(c, 0) << to_string(l) << " at " << to_string(f.point);
}

}  // namespace

TEST(LocalSolve, PointOrderAndNames) {
  Point a = Point::at(q(-1)), b = Point::at(q(1, 2)), h = Point::roots_of(Polynomial::x() * Polynomial::x() - 2),
        i = Point::infinity();
  EXPECT_TRUE(a < b && b < h && h < i);
  EXPECT_FALSE(i < a);
  EXPECT_EQ(to_string(b), "1/2");
  EXPECT_EQ(to_string(i), "inf");
  EXPECT_EQ(to_string(h), "RootOf(x^2 - 2)");
  EXPECT_EQ(parse_point("inf"), i);
  EXPECT_EQ(parse_point("-3/4"), Point::at(q(-3, 4)));
  EXPECT_EQ(parse_point_kind("puiseux_regular"), PointKind::puiseux_regular);
}

TEST(LocalSolve, IndicialPolynomialExamples) {
  OrePoly a = parse_operator(fixtures::F2F1A);
  EXPECT_EQ(rational_roots(indicial_polynomial(a, Point::at(0))).roots, qs({0, q(1, 6)}));
  EXPECT_EQ(rational_roots(indicial_polynomial(parse_operator("D^2"), Point::at(q(5, 3)))).roots, qs({0, 1}));
  // At infinity the exponents are 1/6 and 1/8 (the second series starts (1/x)^(1/8)).
  EXPECT_EQ(rational_roots(indicial_polynomial(a, Point::infinity())).roots, qs({q(1, 8), q(1, 6)}));
  EXPECT_THROW(indicial_polynomial(OrePoly(), Point::at(0)), OreError);
}

TEST(LocalSolve, ClassificationExamples) {
  PointClassification c = classify_point(parse_operator(fixtures::EX1), Point::at(0));
  EXPECT_EQ(c.kind, PointKind::puiseux_regular);
  EXPECT_EQ(c.exponents, qs({0, q(1, 3)}));
  EXPECT_EQ(classify_point(parse_operator(fixtures::EXP), Point::infinity()).kind, PointKind::irregular);
  c = classify_point(parse_operator("2*x*D - 1"), Point::at(0));
  EXPECT_EQ(c.kind, PointKind::puiseux_regular);
  EXPECT_EQ(c.exponents, qs({q(1, 2)}));
  EXPECT_EQ(classify_point(parse_operator("x^2*D^2 + x*D"), Point::at(0)).kind, PointKind::logarithmic);
  EXPECT_EQ(classify_point(parse_operator("x*D^2 + D"), Point::at(0)).kind, PointKind::logarithmic);
  // exponents 0 and 1 with a log-free completion
  c = classify_point(parse_operator("x*D^2 - D"), Point::at(0));
  EXPECT_EQ(c.kind, PointKind::puiseux_regular);
  EXPECT_EQ(c.exponents, qs({0, 2}));
  EXPECT_EQ(classify_point(parse_operator("x^2*D^2 - 2"), Point::at(0)).exponents, qs({-1, 2}));
  EXPECT_EQ(classify_point(parse_operator("x^2*D^2 + x*D - 2"), Point::at(0)).kind, PointKind::irrational_exponent);
  EXPECT_EQ(classify_point(parse_operator("x^2*D - 1"), Point::at(0)).kind, PointKind::irregular);
  EXPECT_EQ(classify_point(parse_operator("D^2"), Point::at(3)).kind, PointKind::ordinary);
  EXPECT_EQ(classify_point(parse_operator("D^2"), Point::infinity()).kind, PointKind::puiseux_regular);
  EXPECT_EQ(classify_point(parse_operator("D^2"), Point::infinity()).exponents, qs({-1, 0}));
  // x^2 - 1 vanishes at 1 but the solutions 1 and x stay analytic there
  EXPECT_EQ(classify_point(parse_operator("(x-1)*D^2"), Point::at(1)).kind, PointKind::ordinary);
}

TEST(LocalSolve, SeriesCoefficientsOfProductExample) {
  OrePoly a = parse_operator(fixtures::F2F1A);
  LocalBasis b0 = local_basis(a, Point::at(0), 2);
  ASSERT_EQ(b0.exponents, qs({0, q(1, 6)}));
  EXPECT_EQ(b0.solutions[0].coeffs, qs({1, q(1, 40)}));
  EXPECT_EQ(b0.solutions[1].coeffs, qs({1, q(1, 12)}));
  EXPECT_EQ(b0.solutions[1].ramification(), 6);

  LocalBasis b1 = local_basis(a, Point::at(1), 2);
  ASSERT_EQ(b1.exponents, qs({0, q(13, 24)}));
  EXPECT_EQ(b1.solutions[0].coeffs, qs({1, q(-1, 22)}));
  EXPECT_EQ(b1.solutions[1].coeffs, qs({1, q(-34, 111)}));

  LocalBasis bi = local_basis(a, Point::infinity(), 2);
  ASSERT_EQ(bi.exponents, qs({q(1, 8), q(1, 6)}));
  EXPECT_EQ(bi.solutions[0].coeffs, qs({1, q(7, 184)}));
  EXPECT_EQ(bi.solutions[1].coeffs, qs({1, q(4, 75)}));
}

TEST(LocalSolve, ExponentTableOrderThree) {
  const char* l = fixtures::ORD3;
  EXPECT_EQ(exps(l, Point::at(0)), desc({q(-1, 8), q(-3, 4), -1}));
  EXPECT_EQ(exps(l, Point::at(1)), desc({q(5, 7), q(4, 9), -2}));
  EXPECT_EQ(exps(l, Point::at(-1)), desc({q(5171, 630), q(3, 8), q(-2, 3)}));
  EXPECT_EQ(exps(l, Point::infinity()), desc({q(4, 5), q(3, 4), q(-3, 4)}));
  for (Point p : {Point::at(0), Point::at(1), Point::at(-1), Point::infinity()})
    EXPECT_EQ(classify_point(parse_operator(l), p).kind, PointKind::puiseux_regular) << to_string(p);
}

TEST(LocalSolve, ExponentTableOrderThreeMoved) {
  const char* l = fixtures::ORD3B;
  EXPECT_EQ(exps(l, Point::at(0)), desc({q(5, 7), q(4, 9), -2}));
  EXPECT_EQ(exps(l, Point::at(1)), desc({q(5171, 630), q(3, 8), q(-2, 3)}));
  EXPECT_EQ(exps(l, Point::at(2)), desc({q(-1, 8), q(-3, 4), -1}));
  EXPECT_EQ(exps(l, Point::infinity()), desc({q(4, 5), q(3, 4), q(-3, 4)}));
}

TEST(LocalSolve, ExponentTableHypergeometric) {
  const char* l = fixtures::F2F1C;
  EXPECT_EQ(exps(l, Point::at(0)), qs({q(-1, 6), 0}));
  EXPECT_EQ(exps(l, Point::at(1)), qs({q(-13, 24), 0}));
  EXPECT_EQ(exps(l, Point::infinity()), qs({q(5, 6), q(7, 8)}));
}

TEST(LocalSolve, OrdinaryBases) {
  LocalBasis b = ordinary_series_basis(parse_operator("D^2"), 0, 4);
  EXPECT_EQ(b.solutions[0].coeffs, qs({1, 0, 0, 0}));
  EXPECT_EQ(b.solutions[1].coeffs, qs({0, 1, 0, 0}));
  b = ordinary_series_basis(parse_operator(fixtures::EXP), 0, 5);
  EXPECT_EQ(b.solutions[0].coeffs, qs({1, 0, q(1, 2), 0, q(1, 24)}));
  EXPECT_EQ(b.solutions[1].coeffs, qs({0, 1, 0, q(1, 6), 0}));
  OrePoly quintic = parse_operator(fixtures::QUINTIC);
  b = ordinary_series_basis(quintic, 0, 12);
  ASSERT_EQ(b.solutions.size(), 4u);
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) EXPECT_EQ(b.solutions[i].coeffs[k], i == k ? 1 : 0);
    expect_annihilated(quintic, b.solutions[i]);
  }
  EXPECT_THROW(ordinary_series_basis(parse_operator(fixtures::EX1), 0, 4), AlgebraError);
}

TEST(LocalSolve, NotPuiseuxCarriesClassification) {
  try {
    local_basis(parse_operator("x^2*D^2 + x*D"), Point::at(0), 3);
    FAIL();
  } catch (const NotPuiseux& e) {
    EXPECT_EQ(e.classification().kind, PointKind::logarithmic);
    EXPECT_EQ(e.classification().exponents, qs({0, 0}));
  }
}

TEST(LocalSolve, ApplyExamples) {
  PuiseuxSeries f{Point::at(0), q(1, 6), {1, q(1, 12)}};
  PuiseuxSeries g = apply_to_series(OrePoly::D(), f);
  EXPECT_EQ(g.exponent, q(-5, 6));
  EXPECT_EQ(g.coeffs, qs({q(1, 6), q(7, 72)}));
  EXPECT_EQ(apply_to_series(OrePoly::scalar(1), f).coeffs, f.coeffs);
  PuiseuxSeries h{Point::infinity(), q(7, 8), {1, 5, 7}};
  PuiseuxSeries xh = apply_to_series(OrePoly::scalar(Polynomial::x()), h);
  EXPECT_EQ(xh.exponent, q(-1, 8));
  EXPECT_EQ(xh.coeffs, h.coeffs);
  // 1/(1-x) applied to 1 at 0 is the geometric series
  PuiseuxSeries one{Point::at(0), 0, {1, 0, 0, 0}};
  PuiseuxSeries geo = apply_to_series(OrePoly::scalar(RationalFunction(1, Polynomial(std::vector<Rational>{1, -1}))), one);
  EXPECT_EQ(geo.coeffs, qs({1, 1, 1, 1}));
  EXPECT_EQ(*geo.valuation(), 0);
  EXPECT_EQ(geo.coeff_at(2), 1);
  EXPECT_EQ(geo.coeff_at(q(1, 2)), 0);
}

TEST(LocalSolve, ImageValuations) {
  OrePoly a = parse_operator(fixtures::F2F1A);
  for (Point p : {Point::at(0), Point::at(1), Point::infinity()})
    EXPECT_TRUE(image_valuations(OrePoly::scalar(1), a, p, 5).integral);
  ImageValuations v = image_valuations(OrePoly::D(), a, Point::at(0), 5);
  EXPECT_FALSE(v.integral);
  EXPECT_EQ(*v.worst, q(-5, 6));
  EXPECT_EQ(v.witness, 1);
  // D lowers the exponent 1/8 at infinity to 9/8
  v = image_valuations(OrePoly::D(), a, Point::infinity(), 5);
  EXPECT_TRUE(v.integral);
  EXPECT_EQ(*v.worst, q(9, 8));
  std::vector<QVector> rows = negative_part_rows({OrePoly::scalar(1), OrePoly::D()}, a, Point::at(0), 5);
  ASSERT_FALSE(rows.empty());
  for (const QVector& r : rows) EXPECT_EQ(r[0], 0);
  EXPECT_THROW(image_valuations(OrePoly::scalar(1), parse_operator("x^2*D^2 + x*D"), Point::at(0), 5), NotPuiseux);
}

TEST(LocalSolve, AlgebraicLoci) {
  Polynomial h = Polynomial::x() * Polynomial::x() - 2;
  auto c = classify_locus(parse_operator("(x^2 - 2)*D - x"), h);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].kind, PointKind::puiseux_regular);
  EXPECT_EQ(c[0].exponents, qs({q(1, 2)}));
  c = classify_locus(parse_operator("(x^2 - 2)*D - 1"), h);
  EXPECT_EQ(c[0].kind, PointKind::irrational_exponent);
  c = classify_locus(parse_operator("(x^2 - 2)*(x^2 - 2)*D - 1"), h);
  EXPECT_EQ(c[0].kind, PointKind::irregular);

  // solution (x^2-2)^(1/2) (x^2-3)^(1/3): the locus splits into two parts
  Polynomial h3 = Polynomial::x() * Polynomial::x() - 3;
  OrePoly l = parse_operator("(x^2 - 2)*(x^2 - 3)*D - x*(x^2 - 3) - 2/3*x*(x^2 - 2)");
  c = classify_locus(l, h * h3);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].point.locus, h);
  EXPECT_EQ(c[0].exponents, qs({q(1, 2)}));
  EXPECT_EQ(c[1].point.locus, h3);
  EXPECT_EQ(c[1].exponents, qs({q(1, 3)}));
  auto norm = rational_roots(indicial_norm(l, h * h3)).roots;
  EXPECT_EQ(norm, qs({q(1, 3), q(1, 3), q(1, 2), q(1, 2)}));

  std::vector<ImageValuations> iv = image_valuations_locus(OrePoly::D(), l, h * h3, 5);
  ASSERT_EQ(iv.size(), 2u);
  EXPECT_EQ(*iv[0].worst, q(-1, 2));
  EXPECT_EQ(*iv[1].worst, q(-2, 3));
  auto rows = negative_part_rows({OrePoly::scalar(1), OrePoly::D()}, l, Point::roots_of(h * h3), 5);
  ASSERT_FALSE(rows.empty());
  for (const QVector& r : rows) {
    EXPECT_EQ(r[0], 0);
    EXPECT_NE(r[1], 0);
  }
}

TEST(LocalSolve, QuinticBranchLocus) {
  OrePoly l = parse_operator(fixtures::QUINTIC);
  Polynomial h = Polynomial(std::vector<Rational>{q(3125, 256), 0, 0, 0, 0, 1});
  auto c = classify_locus(l, h);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_TRUE(is_puiseux(c[0].kind));
  EXPECT_EQ(c[0].exponents, qs({0, q(1, 2), 1, 2}));
  auto iv = image_valuations_locus(OrePoly::scalar(1), l, h, 5);
  EXPECT_TRUE(iv[0].integral);
}

// ---------------------------------------------------------------------------
// Properties
// ---------------------------------------------------------------------------

TEST(LocalSolveProperty, ExponentsAreIndicialRoots) {
  std::mt19937_64 g(101);
  std::uniform_int_distribution<int> ord(1, 3), tail(0, 2);
  for (int it = 0; it < 150; ++it) {
    Point p = it % 3 == 0 ? Point::infinity() : Point::at(small_rational(g));
    std::vector<Rational> roots;
    int r = ord(g);
    for (int i = 0; i < r; ++i) roots.push_back(small_rational(g));
    OrePoly l = theta_op(g, p, roots, tail(g));
    std::sort(roots.begin(), roots.end());
    EXPECT_EQ(rational_roots(indicial_polynomial(l, p)).roots, roots) << to_string(l);
    PointClassification c = classify_point(l, p);
    if (c.kind != PointKind::logarithmic) EXPECT_EQ(c.exponents, roots) << to_string(l);
    bool dup = std::adjacent_find(roots.begin(), roots.end()) != roots.end();
    if (dup) EXPECT_EQ(c.kind, PointKind::logarithmic);
  }
}

TEST(LocalSolveProperty, BasisIsAnnihilated) {
  std::mt19937_64 g(202);
  std::uniform_int_distribution<int> ord(1, 3), tail(1, 2);
  int checked = 0;
  for (int it = 0; it < 150; ++it) {
    Point p = it % 3 == 0 ? Point::infinity() : Point::at(small_rational(g));
    std::vector<Rational> roots;
    int r = ord(g);
    for (int i = 0; i < r; ++i) roots.push_back(small_rational(g));
    OrePoly l = theta_op(g, p, roots, tail(g));
    PointClassification c = classify_point(l, p);
    if (!is_puiseux(c.kind)) {
      EXPECT_THROW(local_basis(l, p, 4), NotPuiseux);
      continue;
    }
    LocalBasis b = local_basis(l, p, 8);
    ASSERT_EQ(static_cast<int>(b.solutions.size()), l.order());
    for (const PuiseuxSeries& f : b.solutions) {
      EXPECT_EQ(f.coeffs[0], 1);
      int lcm_den = 1;
      for (const Rational& e : c.exponents) lcm_den = std::lcm(lcm_den, static_cast<int>(e.get_den().get_si()));
      EXPECT_EQ(lcm_den % f.ramification(), 0);
      expect_annihilated(l, f);
    }
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(LocalSolveProperty, OrdinaryPointsOfRandomOperators) {
  std::mt19937_64 g(303);
  int checked = 0;
  for (int it = 0; it < 200; ++it) {
    OrePoly l = gen::op_of_order(g, 1 + it % 3, 2, 4);
    Rational xi = small_rational(g);
    PointClassification c = classify_point(l, Point::at(xi));
    if (c.kind != PointKind::ordinary) continue;
    std::vector<Rational> want;
    for (int i = 0; i < l.order(); ++i) want.emplace_back(i);
    EXPECT_EQ(c.exponents, want);
    LocalBasis b = ordinary_series_basis(l, xi, 7);
    for (const PuiseuxSeries& f : b.solutions) {
      EXPECT_GE(*f.valuation(), 0);
      expect_annihilated(l, f);
    }
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(LocalSolveProperty, ApplyIsAction) {
  std::mt19937_64 g(404);
  for (int it = 0; it < 200; ++it) {
    Point p = it % 4 == 0 ? Point::infinity() : Point::at(small_rational(g));
    OrePoly a = gen::op(g, 2, 2, 3), b = gen::op(g, 2, 2, 3);
    PuiseuxSeries f{p, small_rational(g), {}};
    for (int k = 0; k < 8; ++k) f.coeffs.push_back(small_rational(g));
    f.coeffs[0] = 1;
    PuiseuxSeries lhs = apply_to_series(a * b, f), rhs = apply_to_series(a, apply_to_series(b, f));
    Rational lo = std::max(lhs.exponent, rhs.exponent), hi = std::min(lhs.precision(), rhs.precision());
    for (Rational e = lo; e < hi; e += 1) EXPECT_EQ(lhs.coeff_at(e), rhs.coeff_at(e)) << to_string(a) << " | " << to_string(b);
    // linearity
    PuiseuxSeries s = apply_to_series(a + b, f), sa = apply_to_series(a, f), sb = apply_to_series(b, f);
    Rational top = std::min({s.precision(), sa.precision(), sb.precision()});
    Rational bot = std::min({s.exponent, sa.exponent, sb.exponent});
    for (Rational e = bot; e < top; e += 1) EXPECT_EQ(s.coeff_at(e), sa.coeff_at(e) + sb.coeff_at(e));
  }
}
