#include <gtest/gtest.h>

#include <random>

#include "dct/algebra.hpp"
#include "dct/modular.hpp"

using namespace dct;

namespace {

Polynomial P(std::initializer_list<int> c) {
  std::vector<Rational> v;
  for (int a : c) v.emplace_back(a);
  return Polynomial(v);
}

Polynomial random_poly(std::mt19937_64& g, int maxdeg, int range) {
  std::uniform_int_distribution<int> d(0, maxdeg), c(-range, range), den(1, 5);
  int n = d(g);
  std::vector<Rational> v;
  for (int i = 0; i <= n; ++i) v.emplace_back(c(g), den(g));
  return Polynomial(v);
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-31/24"), Rational(-31, 24));
  EXPECT_EQ(to_string(Rational(-31, 24)), "-31/24");
  EXPECT_THROW(parse_rational("1/0"), AlgebraError);
  EXPECT_THROW(parse_rational("1.5"), AlgebraError);
  EXPECT_THROW(parse_rational(""), AlgebraError);
  EXPECT_EQ(ceil(Rational(-7, 2)), -3);
  EXPECT_EQ(floor(Rational(-7, 2)), -4);
}

TEST(Polynomial, PrintGrammar) {
  Polynomial p = P({0, -1, 1}) + Polynomial::monomial(3, Rational(31, 24));
  EXPECT_EQ(to_string(p), "31/24*x^3 + x^2 - x");
  EXPECT_EQ(to_string(Polynomial()), "0");
  EXPECT_EQ(to_string(P({-5})), "-5");
}

TEST(Polynomial, ShiftAndReverse) {
  Polynomial p = P({1, 2, 3});  // 3x^2+2x+1
  EXPECT_EQ(p.shift(1), P({6, 8, 3}));
  EXPECT_EQ(p.reverse(3), P({0, 3, 2, 1}));
}

TEST(Polynomial, GcdKnown) {
  // (x-1)^2 (x+2) and (x-1)(x+3)
  Polynomial a = P({-1, 1}).pow(2) * P({2, 1});
  Polynomial b = P({-1, 1}) * P({3, 1});
  EXPECT_EQ(gcd(a, b), P({-1, 1}));
  EXPECT_EQ(squarefree_part(a), P({-1, 1}) * P({2, 1}));
}

TEST(Polynomial, ResultantKnown) {
  // Res(x^2 - 2, x - 3) = 9 - 2 = 7 ; Res(x^2+1, x^2-1) = 4
  EXPECT_EQ(resultant(P({-2, 0, 1}), P({-3, 1})), Rational(7));
  EXPECT_EQ(resultant(P({1, 0, 1}), P({-1, 0, 1})), Rational(4));
}

TEST(Polynomial, RationalRootsKnown) {
  // 6x^3 - 5x^2 - 2x + 1 = (x-1)(2x+1)(3x-1)
  auto r = rational_roots(P({1, -2, -5, 6}));
  ASSERT_EQ(r.roots.size(), 3u);
  EXPECT_EQ(r.roots[0], Rational(-1, 2));
  EXPECT_EQ(r.roots[1], Rational(1, 3));
  EXPECT_EQ(r.roots[2], Rational(1));
  EXPECT_FALSE(r.has_irrational_factor);
  auto q = rational_roots(P({0, 0, -2, 0, 1}));  // x^2 (x^2 - 2)
  ASSERT_EQ(q.roots.size(), 2u);
  EXPECT_TRUE(q.has_irrational_factor);
}

TEST(Polynomial, RationalRootsLargeDenominators) {
  // (630x - 5171)(8x - 3)(x^2 + x + 1)
  Polynomial p = P({-5171, 630}) * P({-3, 8}) * P({1, 1, 1});
  auto r = rational_roots(p);
  ASSERT_EQ(r.roots.size(), 2u);
  EXPECT_EQ(r.roots[0], Rational(3, 8));
  EXPECT_EQ(r.roots[1], Rational(5171, 630));
  EXPECT_TRUE(r.has_irrational_factor);
}

TEST(IntPoly, KroneckerMatchesSchoolbook) {
  std::mt19937_64 g(7);
  std::uniform_int_distribution<long> c(-1000000000L, 1000000000L);
  for (int t = 0; t < 20; ++t) {
    std::vector<Integer> a(40 + t), b(30 + 2 * t);
    for (auto& x : a) x = Integer(c(g)) * Integer(c(g));
    for (auto& x : b) x = c(g);
    IntPoly A(a), B(b);
    IntPoly K = A * B;
    std::vector<Integer> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    EXPECT_EQ(K, IntPoly(r));
    IntPoly q;
    ASSERT_TRUE(exact_divide(K, B, q));
    EXPECT_EQ(q, A);
  }
}

TEST(LinearAlgebra, RrefAndNullspace) {
  QMatrix m(2, 3);
  m(0, 0) = 1, m(0, 1) = 2, m(0, 2) = 3;
  m(1, 0) = 2, m(1, 1) = 4, m(1, 2) = 7;
  Echelon e = rref(m);
  ASSERT_EQ(e.pivots, (std::vector<std::size_t>{0, 2}));
  auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(ns[0], (QVector{-2, 1, 0}));
  QVector v;
  EXPECT_TRUE(solve(m, {1, 3}, v));
  EXPECT_EQ(v, (QVector{-2, 0, 1}));
}

TEST(Modular, RationalReconstruction) {
  Integer m = Integer(1) << 100;
  m += 1;
  Rational q(-5171, 630), out;
  Integer a = q.get_num() * Integer(0);
  Integer inv;
  Integer den = q.get_den();
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  a = (q.get_num() * inv) % m;
  if (a < 0) a += m;
  ASSERT_TRUE(rational_reconstruct(a, m, out));
  EXPECT_EQ(out, q);
}

// ---------------------------------------------------------------------------
// Property tests
// ---------------------------------------------------------------------------

TEST(AlgebraProperty, GcdDividesAndIsMaximal) {
  std::mt19937_64 g(11);
  for (int t = 0; t < 120; ++t) {
    Polynomial c = random_poly(g, 4, 9);
    if (c.is_zero()) continue;
    Polynomial a = random_poly(g, 8, 9) * c, b = random_poly(g, 8, 9) * c;
    if (a.is_zero() || b.is_zero()) continue;
    Polynomial d = gcd(a, b);
    EXPECT_TRUE(divmod(a, d).second.is_zero());
    EXPECT_TRUE(divmod(b, d).second.is_zero());
    EXPECT_TRUE(divmod(d, c.monic()).second.is_zero()) << to_string(a) << " | " << to_string(b);
    // cofactors coprime
    EXPECT_EQ(gcd(exact_quotient(a, d), exact_quotient(b, d)).degree(), 0);
  }
}

TEST(AlgebraProperty, DivmodIdentity) {
  std::mt19937_64 g(12);
  for (int t = 0; t < 500; ++t) {
    Polynomial a = random_poly(g, 12, 20), b = random_poly(g, 6, 20);
    if (b.is_zero()) continue;
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(AlgebraProperty, RationalRootsOfProducts) {
  std::mt19937_64 g(13);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 30), k(1, 5), mult(1, 3);
  for (int t = 0; t < 120; ++t) {
    int n = k(g);
    std::vector<Rational> want;
    Polynomial p(1);
    for (int i = 0; i < n; ++i) {
      Rational r(num(g), den(g));
      r.canonicalize();
      int m = mult(g);
      for (int j = 0; j < m; ++j) {
        p = p * (Polynomial::x() - Polynomial(r));
        want.push_back(r);
      }
    }
    bool extra = t % 2 == 0;
    if (extra) p = p * P({3, 0, 1});  // x^2 + 3
    std::sort(want.begin(), want.end());
    auto got = rational_roots(p);
    EXPECT_EQ(got.roots, want);
    EXPECT_EQ(got.has_irrational_factor, extra);
  }
}

TEST(AlgebraProperty, RationalFunctionFieldAxioms) {
  std::mt19937_64 g(14);
  for (int t = 0; t < 100; ++t) {
    auto rf = [&] {
      Polynomial d = random_poly(g, 3, 5);
      if (d.is_zero()) d = Polynomial(1);
      return RationalFunction(random_poly(g, 3, 5), d);
    };
    RationalFunction a = rf(), b = rf(), c = rf();
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b).derivative(), a.derivative() * b + a * b.derivative());
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(gcd(a.num(), a.den()).degree(), 0);
    EXPECT_EQ(a.den().leading(), 1);
  }
}

TEST(AlgebraProperty, ResultantVanishesOnCommonRoot) {
  std::mt19937_64 g(15);
  for (int t = 0; t < 100; ++t) {
    Polynomial c = random_poly(g, 2, 7);
    if (c.degree() < 1) c = P({1, 1});
    Polynomial a = random_poly(g, 4, 7), b = random_poly(g, 4, 7);
    if (a.is_zero() || b.is_zero()) continue;
    EXPECT_EQ(resultant(a * c, b * c), Rational(0));
    Rational r = resultant(a, b);
    EXPECT_EQ(r == 0, gcd(a, b).degree() > 0);
  }
}

TEST(AlgebraProperty, NullspaceAnnihilates) {
  std::mt19937_64 g(16);
  std::uniform_int_distribution<int> dim(1, 8), c(-6, 6);
  for (int t = 0; t < 120; ++t) {
    std::size_t r = static_cast<std::size_t>(dim(g)), n = static_cast<std::size_t>(dim(g));
    QMatrix m(r, n);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(c(g), 1 + std::abs(c(g)));
    if (r > 2) {  // force dependency
      for (std::size_t j = 0; j < n; ++j) m(r - 1, j) = m(0, j) * 3 - m(1, j);
    }
    auto ns = nullspace(m);
    EXPECT_EQ(ns.size() + rank(m), n);
    for (const auto& v : ns)
      for (std::size_t i = 0; i < r; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < n; ++j) s += m(i, j) * v[j];
        EXPECT_EQ(s, 0);
      }
  }
}
