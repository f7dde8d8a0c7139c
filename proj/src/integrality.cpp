#include "dct/integrality.hpp"

#include <algorithm>

#include "dct/algsols.hpp"

namespace dct {

ModClass reduce(const OrePoly& p, const OrePoly& l) {
  if (l.is_zero()) throw OreError("reduction modulo the zero operator");
  return ModClass{l, right_divmod(p, l).second};
}

bool is_constant(const ModClass& c) { return reduce(OrePoly::D() * c.rep, c.modulus).is_zero(); }

ImageValuations local_integrality(const ModClass& c, const Point& p, int guard) {
  return image_valuations(c.rep, c.modulus, p, guard);
}

namespace {

// Removes the rational roots of a squarefree polynomial.
Polynomial irrational_part(Polynomial h) {
  if (h.degree() < 1) return Polynomial(1);
  for (const Rational& r : rational_roots(h).roots) h = exact_quotient(h, Polynomial(std::vector<Rational>{-r, 1}));
  return h.monic();
}

struct Support {
  std::vector<Rational> finite;
  Polynomial locus = Polynomial(1);
};

Support support_of(const ModClass& c) {
  SingularSupport ss = singular_support(c.modulus);
  Support s{ss.finite_points, ss.irrational_locus};
  Polynomial den(1);
  for (const RationalFunction& a : c.rep.coeffs()) den = lcm(den, a.den());
  if (den.degree() > 0) {
    Polynomial sq = squarefree_part(den);
    for (const Rational& r : rational_roots(sq).roots) s.finite.push_back(r);
    s.locus = lcm(s.locus, irrational_part(sq));
  }
  std::sort(s.finite.begin(), s.finite.end());
  s.finite.erase(std::unique(s.finite.begin(), s.finite.end()), s.finite.end());
  return s;
}

}  // namespace

std::vector<Point> relevant_points(const ModClass& c) {
  Support s = support_of(c);
  std::vector<Point> out;
  for (const Rational& xi : s.finite) out.push_back(Point::at(xi));
  if (s.locus.degree() > 0) out.push_back(Point::roots_of(s.locus));
  out.push_back(Point::infinity());
  return out;
}

IntegralityReport complete_integrality(const ModClass& c, int guard) {
  IntegralityReport r{c, {}, true};
  if (c.is_zero()) return r;
  Support s = support_of(c);
  for (const Rational& xi : s.finite) r.per_point.push_back(local_integrality(c, Point::at(xi), guard));
  if (s.locus.degree() > 0)
    for (ImageValuations& v : image_valuations_locus(c.rep, c.modulus, s.locus, guard)) r.per_point.push_back(std::move(v));
  r.per_point.push_back(local_integrality(c, Point::infinity(), guard));
  for (const ImageValuations& v : r.per_point) r.completely_integral = r.completely_integral && v.integral;
  return r;
}

bool is_pseudoconstant(const ModClass& c, int guard) {
  if (c.is_zero() || is_constant(c)) return false;
  return complete_integrality(c, guard).completely_integral;
}

std::optional<OrePoly> left_divide_by_d(const OrePoly& a) {
  if (a.is_zero()) return OrePoly();
  int r = a.order();
  if (r == 0) return std::nullopt;
  // D P = sum (p_i' + p_{i-1}) D^i + p_{r-1} D^r
  std::vector<RationalFunction> p(static_cast<std::size_t>(r));
  p[static_cast<std::size_t>(r - 1)] = a.coeff(r);
  for (int i = r - 1; i >= 1; --i)
    p[static_cast<std::size_t>(i - 1)] = a.coeff(i) - p[static_cast<std::size_t>(i)].derivative();
  if (p[0].derivative() != a.coeff(0)) return std::nullopt;
  return OrePoly(std::move(p));
}

ConstantSpace constant_space(const OrePoly& l) {
  if (l.is_zero()) throw OreError("constant space of the zero operator");
  ConstantSpace cs{l, {}};
  for (const RationalFunction& q : rational_solutions(adjoint(l)))
    if (auto p = left_divide_by_d(q * l)) cs.basis.emplace_back(*p, q);
  return cs;
}

}  // namespace dct
