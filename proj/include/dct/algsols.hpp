#pragma once

// Rational solutions, annihilators of algebraic functions, and the search
// for algebraic solutions of bounded degree via symmetric powers.

#include <cstdint>
#include <optional>
#include <vector>

#include "dct/algebra.hpp"
#include "dct/localsolve.hpp"
#include "dct/ore.hpp"

namespace dct {

// A Q-basis of the rational solutions of L, in reduced echelon form with
// respect to the numerator coefficients.
std::vector<RationalFunction> rational_solutions(const OrePoly& l);

// The same for ls = symmetric_power(l, s), with pole bounds taken from the
// local exponents of l. Falls back to the general routine when l has no
// Puiseux basis at one of its singular points.
std::vector<RationalFunction> rational_solutions_of_power(const OrePoly& l, int s, const OrePoly& ls);

// Monic polynomial in y over Q(x); coeffs[i] multiplies y^i and coeffs[d] = 1.
struct MinPoly {
  std::vector<RationalFunction> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};
bool operator==(const MinPoly& a, const MinPoly& b);
std::string to_string(const MinPoly& m);  // "y^5 + x*y + 1"

// Makes a polynomial in y monic.
MinPoly make_minpoly(std::vector<RationalFunction> coeffs);

// The polynomial whose roots are lambda times the roots of m: coefficient i
// is multiplied by lambda^(d - i).
MinPoly scale_roots(const MinPoly& m, const Rational& lambda);

// The representative of {scale_roots(m, l)} with the smallest integral
// weighted content and positive leading coefficient on the first odd-weight
// coefficient.
MinPoly normalize_scaling(const MinPoly& m);

// Monic operator of least order annihilating every root of m. Throws
// AlgebraError when m is not squarefree.
OrePoly annihilator_of_algebraic(const MinPoly& m);

// Smallest nonnegative integer ordinary point.
Rational algsols_expansion_point(const OrePoly& l);

// Seeded small-integer combination of the ordinary series basis.
PuiseuxSeries series_for_algsols(const OrePoly& l, int nterms, std::uint64_t seed);

struct AlgDecision {
  enum class Kind { minimal_polynomial, bottom, inconclusive_budget };
  Kind kind = Kind::bottom;
  std::optional<MinPoly> minpoly;
  int truncation = 0;  // last truncation order used
};
std::string to_string(AlgDecision::Kind k);

struct AlgOptions {
  int budget = 6;  // doublings of the truncation order
  std::uint64_t seed = 0;
};

AlgDecision all_algebraic_of_degree(const OrePoly& l, int d, const AlgOptions& opt = {});

}  // namespace dct
