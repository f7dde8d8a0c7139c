#pragma once

// Linear differential operators over Q(x): p_0 + p_1 D + ... + p_r D^r with
// D x = x D + 1.

#include <cstddef>
#include <vector>

#include "dct/algebra.hpp"

namespace dct {

class OreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OrePoly {
 public:
  OrePoly() = default;
  explicit OrePoly(std::vector<RationalFunction> c);
  static OrePoly D(int k = 1);
  static OrePoly scalar(const RationalFunction& f);

  int order() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<RationalFunction>& coeffs() const { return c_; }
  RationalFunction coeff(int i) const;
  const RationalFunction& leading() const { return c_.back(); }
  OrePoly monic() const;

  OrePoly& operator+=(const OrePoly& b);
  OrePoly& operator-=(const OrePoly& b);
  OrePoly operator-() const;

  friend bool operator==(const OrePoly&, const OrePoly&) = default;

 private:
  void trim();
  std::vector<RationalFunction> c_;
};

OrePoly operator+(OrePoly a, const OrePoly& b);
OrePoly operator-(OrePoly a, const OrePoly& b);
OrePoly operator*(const OrePoly& a, const OrePoly& b);
OrePoly operator*(const RationalFunction& f, const OrePoly& a);  // left scalar

RationalFunction apply(const OrePoly& a, const RationalFunction& f);
OrePoly adjoint(const OrePoly& l);
std::pair<OrePoly, OrePoly> right_divmod(const OrePoly& a, const OrePoly& b);

// Primitive integer coefficients p_i with L = c * sum p_i D^i, c in Q(x);
// the leading polynomial has positive leading coefficient.
std::vector<IntPoly> integer_form(const OrePoly& l);
OrePoly from_integer_form(const std::vector<IntPoly>& p);

OrePoly lclm(const OrePoly& a, const OrePoly& b);
OrePoly symmetric_product(const OrePoly& a, const OrePoly& b);
OrePoly symmetric_power(const OrePoly& l, int s);

// Order of the symmetric power. Uses a modular rank certificate when the
// rank reaches the number of s-fold monomials, otherwise builds the operator.
int symmetric_power_order(const OrePoly& l, int s);

struct SingularSupport {
  std::vector<Rational> finite_points;  // sorted
  bool has_irrational_singularities = false;
  Polynomial irrational_locus = Polynomial(1);  // squarefree, no rational roots
  bool infinity_singular = false;
};
SingularSupport singular_support(const OrePoly& l);

// The operator in t = 1/x, expressed with d/dt.
OrePoly substitute_infinity(const OrePoly& l);

}  // namespace dct
