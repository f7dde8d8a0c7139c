#include "dct/ore.hpp"

#include <algorithm>

#include "dct/dependency.hpp"

namespace dct {

OrePoly::OrePoly(std::vector<RationalFunction> c) : c_(std::move(c)) { trim(); }

OrePoly OrePoly::D(int k) {
  std::vector<RationalFunction> c(static_cast<std::size_t>(k) + 1);
  c.back() = RationalFunction(1);
  return OrePoly(std::move(c));
}

OrePoly OrePoly::scalar(const RationalFunction& f) { return OrePoly(std::vector<RationalFunction>{f}); }

void OrePoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RationalFunction OrePoly::coeff(int i) const {
  if (i < 0 || i > order()) return RationalFunction();
  return c_[static_cast<std::size_t>(i)];
}

OrePoly OrePoly::monic() const {
  if (is_zero()) return *this;
  RationalFunction li = leading().inverse();
  std::vector<RationalFunction> c(c_.size());
  for (std::size_t i = 0; i + 1 < c_.size(); ++i) c[i] = c_[i] * li;
  c.back() = RationalFunction(1);
  return OrePoly(std::move(c));
}

OrePoly& OrePoly::operator+=(const OrePoly& b) {
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size());
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
  trim();
  return *this;
}

OrePoly& OrePoly::operator-=(const OrePoly& b) {
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size());
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
  trim();
  return *this;
}

OrePoly OrePoly::operator-() const {
  std::vector<RationalFunction> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return OrePoly(std::move(c));
}

OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
OrePoly operator-(OrePoly a, const OrePoly& b) { return a -= b; }

OrePoly operator*(const RationalFunction& f, const OrePoly& a) {
  std::vector<RationalFunction> c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f * a.coeffs()[i];
  return OrePoly(std::move(c));
}

namespace {

// D * B
OrePoly d_times(const OrePoly& b) {
  std::vector<RationalFunction> c(b.coeffs().size() + 1);
  for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
    c[j] += b.coeffs()[j].derivative();
    c[j + 1] += b.coeffs()[j];
  }
  return OrePoly(std::move(c));
}

}  // namespace

OrePoly operator*(const OrePoly& a, const OrePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  OrePoly res, t = b;  // t = D^i * B
  for (int i = 0; i <= a.order(); ++i) {
    if (i > 0) t = d_times(t);
    const RationalFunction& ai = a.coeffs()[static_cast<std::size_t>(i)];
    if (!ai.is_zero()) res += ai * t;
  }
  return res;
}

RationalFunction apply(const OrePoly& a, const RationalFunction& f) {
  RationalFunction res, g = f;
  for (int i = 0; i <= a.order(); ++i) {
    if (i > 0) g = g.derivative();
    const RationalFunction& ai = a.coeffs()[static_cast<std::size_t>(i)];
    if (!ai.is_zero()) res += ai * g;
  }
  return res;
}

OrePoly adjoint(const OrePoly& l) {
  // sum (-D)^i p_i
  OrePoly res;
  for (int i = 0; i <= l.order(); ++i) {
    OrePoly t = OrePoly::scalar(l.coeffs()[static_cast<std::size_t>(i)]);
    for (int k = 0; k < i; ++k) t = -d_times(t);
    res += t;
  }
  return res;
}

std::pair<OrePoly, OrePoly> right_divmod(const OrePoly& a, const OrePoly& b) {
  if (b.is_zero()) throw OreError("right division by the zero operator");
  OrePoly q, r = a;
  RationalFunction lbi = b.leading().inverse();
  while (!r.is_zero() && r.order() >= b.order()) {
    int k = r.order() - b.order();
    RationalFunction c = r.leading() * lbi;
    OrePoly term = OrePoly::scalar(c) * OrePoly::D(k);
    q += term;
    OrePoly sub = term * b;
    // the leading terms cancel exactly; drop them to avoid relying on trim
    std::vector<RationalFunction> rc = r.coeffs();
    for (std::size_t i = 0; i < sub.coeffs().size(); ++i) rc[i] -= sub.coeffs()[i];
    rc.pop_back();
    r = OrePoly(std::move(rc));
  }
  return {q, r};
}

std::vector<IntPoly> integer_form(const OrePoly& l) {
  if (l.is_zero()) throw OreError("integer form of the zero operator");
  Polynomial den(1);
  for (const auto& c : l.coeffs()) den = lcm(den, c.den());
  std::vector<Polynomial> q;
  for (const auto& c : l.coeffs()) q.push_back(c.is_zero() ? Polynomial() : c.num() * exact_quotient(den, c.den()));
  Integer d = 1;
  for (const auto& p : q)
    for (const auto& c : p.coeffs()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  std::vector<IntPoly> out;
  Integer g = 0;
  for (const auto& p : q) {
    Integer dd;
    IntPoly ip = p.clear_denominators(dd);
    ip *= Integer(d / dd);
    Integer c = ip.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    out.push_back(std::move(ip));
  }
  if (out.back().leading() < 0) g = -g;
  for (auto& p : out) {
    std::vector<Integer> c = p.coeffs();
    for (auto& a : c) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    p = IntPoly(std::move(c));
  }
  return out;
}

OrePoly from_integer_form(const std::vector<IntPoly>& p) {
  std::vector<RationalFunction> c;
  for (const auto& a : p) c.emplace_back(Polynomial::from_int(a));
  return OrePoly(std::move(c));
}

namespace {

OrePoly from_relation(const std::vector<RationalFunction>& n) { return OrePoly(n); }

}  // namespace

OrePoly lclm(const OrePoly& a, const OrePoly& b) {
  if (a.is_zero() || b.is_zero()) throw OreError("lclm of the zero operator");
  if (a.order() == 0) return b.monic();
  if (b.order() == 0) return a.monic();
  return from_relation(first_dependency(direct_sum_system(integer_form(a), integer_form(b))));
}

OrePoly symmetric_product(const OrePoly& a, const OrePoly& b) {
  if (a.is_zero() || b.is_zero()) throw OreError("symmetric product of the zero operator");
  if (a.order() == 0 || b.order() == 0) return OrePoly::scalar(1);
  return from_relation(first_dependency(product_system(integer_form(a), integer_form(b))));
}

OrePoly symmetric_power(const OrePoly& l, int s) {
  if (s < 1) throw OreError("symmetric power needs s >= 1");
  if (l.is_zero()) throw OreError("symmetric power of the zero operator");
  if (l.order() == 0) return OrePoly::scalar(1);
  if (s == 1) return l.monic();
  return from_relation(first_dependency(sympow_system(integer_form(l), s)));
}

int symmetric_power_order(const OrePoly& l, int s) {
  if (s < 1) throw OreError("symmetric power needs s >= 1");
  if (l.order() <= 0) return 0;
  if (s == 1) return l.order();
  DerivationSystem sys = sympow_system(integer_form(l), s);
  if (krylov_rank(sys) == sys.dim) return static_cast<int>(sys.dim);
  return static_cast<int>(first_dependency(sys).size()) - 1;
}

OrePoly substitute_infinity(const OrePoly& l) {
  // x = 1/t, D_x = -t^2 D_t
  RationalFunction mt2(Polynomial::monomial(2, -1));
  OrePoly step = OrePoly::scalar(mt2) * OrePoly::D(1);
  OrePoly res, pw = OrePoly::scalar(1);
  for (int i = 0; i <= l.order(); ++i) {
    if (i > 0) pw = step * pw;
    const RationalFunction& c = l.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    int dn = c.num().degree(), dd = c.den().degree();
    // c(1/t) = t^(dd-dn) rev(num)/rev(den)
    Polynomial num = c.num().reverse(dn), den = c.den().reverse(dd);
    if (dd >= dn)
      num = num * Polynomial::monomial(dd - dn);
    else
      den = den * Polynomial::monomial(dn - dd);
    res += RationalFunction(num, den) * pw;
  }
  return res;
}

SingularSupport singular_support(const OrePoly& l) {
  if (l.is_zero()) throw OreError("singular support of the zero operator");
  SingularSupport s;
  OrePoly m = l.monic();
  Polynomial poles(1);
  for (const auto& c : m.coeffs()) poles = lcm(poles, c.den());
  if (poles.degree() > 0) {
    RationalRoots rr = rational_roots(poles);
    Polynomial rest = squarefree_part(poles);
    for (const auto& r : rr.roots) {
      if (s.finite_points.empty() || s.finite_points.back() != r) {
        s.finite_points.push_back(r);
        rest = exact_quotient(rest, Polynomial::x() - Polynomial(r));
      }
    }
    s.has_irrational_singularities = rr.has_irrational_factor;
    s.irrational_locus = rest.monic();
  }
  OrePoly inf = substitute_infinity(l).monic();
  for (const auto& c : inf.coeffs())
    if (c.den().eval(0) == 0) s.infinity_singular = true;
  return s;
}

}  // namespace dct
