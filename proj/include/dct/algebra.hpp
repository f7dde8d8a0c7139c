#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dct {

using Integer = mpz_class;
using Rational = mpq_class;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational parse_rational(std::string_view s);
std::string to_string(const Rational& q);

// Ceiling and floor of a rational as an Integer.
Integer ceil(const Rational& q);
Integer floor(const Rational& q);

// ---------------------------------------------------------------------------
// Integer polynomials. Used for the heavy paths (products, gcds, modular
// images); coefficient vectors are kept trimmed.
// ---------------------------------------------------------------------------
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> c);
  static IntPoly constant(const Integer& a);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Integer>& coeffs() const { return c_; }
  const Integer& operator[](std::size_t i) const { return c_[i]; }
  Integer coeff(int i) const;
  const Integer& leading() const { return c_.back(); }

  Integer content() const;
  IntPoly primitive() const;  // positive leading coefficient
  IntPoly derivative() const;
  std::size_t max_bits() const;
  Integer eval(const Integer& a) const;
  std::uint64_t eval_mod(std::uint64_t a, std::uint64_t p) const;

  IntPoly& operator+=(const IntPoly& b);
  IntPoly& operator-=(const IntPoly& b);
  IntPoly& operator*=(const Integer& a);
  IntPoly operator-() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<Integer> c_;
};

IntPoly operator+(IntPoly a, const IntPoly& b);
IntPoly operator-(IntPoly a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(IntPoly a, const Integer& k);
// q with a = q*b when b divides a in Z[x]; nullopt-like flag otherwise.
bool exact_divide(const IntPoly& a, const IntPoly& b, IntPoly& q);

// ---------------------------------------------------------------------------
// Dense polynomials over Q.
// ---------------------------------------------------------------------------
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> c);
  Polynomial(const Rational& a);  // NOLINT: constants convert implicitly
  Polynomial(int a) : Polynomial(Rational(a)) {}  // NOLINT
  static Polynomial x();
  static Polynomial monomial(int k, const Rational& a = 1);
  static Polynomial from_int(const IntPoly& p, const Integer& den = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return c_.back(); }
  int valuation() const;  // order at 0; -1 for the zero polynomial

  Polynomial derivative() const;
  Polynomial shift(const Rational& xi) const;  // p(x + xi)
  Polynomial reverse(int n) const;             // x^n p(1/x)
  Rational eval(const Rational& a) const;
  Polynomial monic() const;
  Polynomial pow(unsigned k) const;

  // p = ip / den with ip primitive, den > 0 rational scale.
  IntPoly to_int(Rational& scale) const;
  // Integer numerator with common denominator: p = ip / den.
  IntPoly clear_denominators(Integer& den) const;

  Polynomial& operator+=(const Polynomial& b);
  Polynomial& operator-=(const Polynomial& b);
  Polynomial& operator*=(const Rational& a);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Rational& k);
Polynomial operator*(const Rational& k, Polynomial a);
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);
Polynomial gcd(const Polynomial& a, const Polynomial& b);  // monic
Polynomial lcm(const Polynomial& a, const Polynomial& b);  // monic
Polynomial squarefree_part(const Polynomial& a);           // monic
// Multiplicity of the root xi in a (a nonzero).
int root_multiplicity(const Polynomial& a, const Rational& xi);
Rational resultant(const Polynomial& a, const Polynomial& b);

struct RationalRoots {
  std::vector<Rational> roots;  // sorted, repeated by multiplicity
  bool has_irrational_factor = false;
};
RationalRoots rational_roots(const Polynomial& p);

std::string to_string(const Polynomial& p, std::string_view var = "x");

// ---------------------------------------------------------------------------
// Normalized rational functions: den monic, gcd(num, den) = 1.
// ---------------------------------------------------------------------------
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Polynomial num);  // NOLINT
  RationalFunction(const Rational& a) : RationalFunction(Polynomial(a)) {}  // NOLINT
  RationalFunction(int a) : RationalFunction(Polynomial(a)) {}              // NOLINT
  RationalFunction(Polynomial num, Polynomial den);
  // Caller guarantees den monic and coprime to num.
  static RationalFunction trusted(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RationalFunction derivative() const;
  RationalFunction inverse() const;
  Rational eval(const Rational& a) const;

  RationalFunction& operator+=(const RationalFunction& b);
  RationalFunction& operator-=(const RationalFunction& b);
  RationalFunction& operator*=(const RationalFunction& b);
  RationalFunction& operator/=(const RationalFunction& b);
  RationalFunction operator-() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  Polynomial num_, den_;
};

RationalFunction operator+(RationalFunction a, const RationalFunction& b);
RationalFunction operator-(RationalFunction a, const RationalFunction& b);
RationalFunction operator*(RationalFunction a, const RationalFunction& b);
RationalFunction operator/(RationalFunction a, const RationalFunction& b);

std::string to_string(const RationalFunction& f, std::string_view var = "x");

// ---------------------------------------------------------------------------
// Exact linear algebra over Q.
// ---------------------------------------------------------------------------
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void append_row(const std::vector<Rational>& row);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

using QVector = std::vector<Rational>;

// Reduced row echelon form; pivot rule: leftmost column, smallest row index.
struct Echelon {
  std::vector<QVector> rows;        // nonzero rows, pivot entries equal to 1
  std::vector<std::size_t> pivots;  // pivot column of each row
};
Echelon rref(const QMatrix& m);
std::vector<QVector> nullspace(const QMatrix& m);
std::size_t rank(const QMatrix& m);
// Particular solution of m*v = b, or false when inconsistent.
bool solve(const QMatrix& m, const QVector& b, QVector& v);

}  // namespace dct
