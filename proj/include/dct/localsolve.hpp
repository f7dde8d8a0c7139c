#pragma once

// Local analysis of an operator at rational points, at infinity and along
// irrational singular loci.
//
// The local parameter is t = x - xi at a finite point and t = 1/x at
// infinity. Solutions are expanded as t^lambda * sum_k c_k t^k with rational
// lambda, so one series covers the exponents lambda + Z; the ramification is
// the denominator of lambda.
//
// An algebraic point stands for all roots of a squarefree polynomial h
// without rational roots. Computations there run in Q[x]/(h); when an
// element turns out to vanish at some roots of h but not at others, h is
// split along the gcd and each part is handled separately.

#include <optional>
#include <string>
#include <vector>

#include "dct/algebra.hpp"
#include "dct/ore.hpp"

namespace dct {

struct Point {
  enum class Kind { finite, infinity, algebraic };
  Kind kind = Kind::finite;
  Rational xi;        // finite
  Polynomial locus;   // algebraic: monic, squarefree, no rational roots

  static Point at(const Rational& xi);
  static Point infinity();
  static Point roots_of(const Polynomial& h);

  bool is_finite() const { return kind == Kind::finite; }
  bool is_infinity() const { return kind == Kind::infinity; }
  bool is_algebraic() const { return kind == Kind::algebraic; }
};
bool operator==(const Point& a, const Point& b);
bool operator<(const Point& a, const Point& b);  // finite by value, then algebraic, then infinity
std::string to_string(const Point& p);            // "a/b", "inf" or "RootOf(...)"
Point parse_point(const std::string& s);          // inverse of to_string

enum class PointKind { ordinary, puiseux_regular, logarithmic, irrational_exponent, irregular };
std::string to_string(PointKind k);
PointKind parse_point_kind(const std::string& s);
inline bool is_puiseux(PointKind k) { return k == PointKind::ordinary || k == PointKind::puiseux_regular; }

struct PointClassification {
  Point point;
  PointKind kind = PointKind::ordinary;
  std::vector<Rational> exponents;  // rational indicial roots, ascending, with multiplicity
};

// Raised when a Puiseux basis is requested where none exists. The carried
// classification is itself a transcendence certificate.
class NotPuiseux : public std::runtime_error {
 public:
  explicit NotPuiseux(PointClassification c);
  const PointClassification& classification() const { return c_; }

 private:
  PointClassification c_;
};

struct PuiseuxSeries {
  Point point;                  // finite or infinity
  Rational exponent;            // exponent of coeffs[0]
  std::vector<Rational> coeffs; // coeffs[k] multiplies t^(exponent + k); all exact

  int ramification() const;
  Rational precision() const { return exponent + static_cast<long>(coeffs.size()); }  // exact below
  std::optional<Rational> valuation() const;  // nullopt if zero within the window
  Rational coeff_at(const Rational& e) const;  // 0 outside the stored range
};

struct LocalBasis {
  Point point;
  std::vector<PuiseuxSeries> solutions;
  std::vector<Rational> exponents;  // starting exponent of each solution
};

// Indicial polynomial in lambda at a finite point or infinity, monic.
Polynomial indicial_polynomial(const OrePoly& l, const Point& p);

// For an algebraic point: the product of the indicial polynomials over the
// roots of the locus, as a polynomial in lambda (up to a constant factor).
Polynomial indicial_norm(const OrePoly& l, const Polynomial& locus);

PointClassification classify_point(const OrePoly& l, const Point& p);

// Classification of every part of an algebraic locus after splitting.
std::vector<PointClassification> classify_locus(const OrePoly& l, const Polynomial& locus);

// A full basis of Puiseux solutions with nterms coefficients each.
LocalBasis local_basis(const OrePoly& l, const Point& p, int nterms);

// Power series solutions at an ordinary point, normalized to x^i + O(x^r).
LocalBasis ordinary_series_basis(const OrePoly& l, const Rational& xi, int nterms);

// P applied to f. The result keeps the number of coefficients of f; its
// window starts lower when P lowers valuations.
PuiseuxSeries apply_to_series(const OrePoly& p, const PuiseuxSeries& f);

// Valuations of P f over a basis of local solutions f of L.
struct ImageValuations {
  Point point;
  bool integral = true;
  std::optional<Rational> worst;  // least valuation; nullopt if every image vanishes to the window
  int witness = -1;               // basis index attaining worst
};

// At a finite point or infinity; guard extends the window past exponent 0.
ImageValuations image_valuations(const OrePoly& p, const OrePoly& l, const Point& pt, int guard);

// At an algebraic point, one entry per part of the split locus.
std::vector<ImageValuations> image_valuations_locus(const OrePoly& p, const OrePoly& l, const Polynomial& locus,
                                                    int guard);

// Linear conditions for integrality of sum_j c_j P_j at a point: one row per
// (basis solution, negative exponent, and at algebraic points, coefficient
// of x^e in Q[x]/(h)); the row holds the coefficients of c_j.
std::vector<QVector> negative_part_rows(const std::vector<OrePoly>& ops, const OrePoly& l, const Point& pt, int guard);

}  // namespace dct
