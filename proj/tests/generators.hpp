#pragma once

// Seeded random generators for property tests.

#include <random>

#include "dct/algebra.hpp"
#include "dct/ore.hpp"

namespace gen {

inline dct::Polynomial poly(std::mt19937_64& g, int maxdeg, int range, int maxden = 5) {
  std::uniform_int_distribution<int> d(0, maxdeg), c(-range, range), den(1, maxden);
  int n = d(g);
  std::vector<dct::Rational> v;
  for (int i = 0; i <= n; ++i) v.emplace_back(c(g), den(g));
  return dct::Polynomial(v);
}

inline dct::Polynomial nonzero_poly(std::mt19937_64& g, int maxdeg, int range, int maxden = 5) {
  for (;;) {
    dct::Polynomial p = poly(g, maxdeg, range, maxden);
    if (!p.is_zero()) return p;
  }
}

// Polynomial with probability 1/2, otherwise a quotient by a small polynomial.
inline dct::RationalFunction ratfun(std::mt19937_64& g, int maxdeg, int range) {
  dct::Polynomial n = poly(g, maxdeg, range);
  if (g() % 2 == 0) return dct::RationalFunction(n);
  return dct::RationalFunction(n, nonzero_poly(g, 1, 3, 2));
}

inline dct::OrePoly op_of_order(std::mt19937_64& g, int r, int maxdeg, int range, bool rational = true) {
  std::vector<dct::RationalFunction> c;
  for (int i = 0; i < r; ++i)
    c.push_back(rational ? ratfun(g, maxdeg, range) : dct::RationalFunction(poly(g, maxdeg, range)));
  c.emplace_back(nonzero_poly(g, maxdeg, range));
  return dct::OrePoly(std::move(c));
}

inline dct::OrePoly op(std::mt19937_64& g, int maxorder, int maxdeg, int range, bool rational = true) {
  std::uniform_int_distribution<int> o(0, maxorder);
  return op_of_order(g, o(g), maxdeg, range, rational);
}

}  // namespace gen
