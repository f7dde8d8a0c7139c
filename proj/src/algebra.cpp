#include "dct/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "dct/modular.hpp"

namespace dct {

Rational parse_rational(std::string_view s) {
  std::string t(s);
  std::size_t i = 0;
  if (i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
  std::size_t digits = 0, slash = 0;
  for (std::size_t j = i; j < t.size(); ++j) {
    if (std::isdigit(static_cast<unsigned char>(t[j]))) {
      ++digits;
    } else if (t[j] == '/' && slash == 0 && digits > 0 && j + 1 < t.size()) {
      ++slash;
    } else {
      throw AlgebraError("malformed rational: '" + t + "'");
    }
  }
  if (digits == 0) throw AlgebraError("malformed rational: '" + t + "'");
  if (t[0] == '+') t.erase(0, 1);
  Rational q;
  if (q.set_str(t, 10) != 0) throw AlgebraError("malformed rational: '" + t + "'");
  if (q.get_den() == 0) throw AlgebraError("zero denominator in '" + t + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// ---------------------------------------------------------------------------
// IntPoly
// ---------------------------------------------------------------------------

IntPoly::IntPoly(std::vector<Integer> c) : c_(std::move(c)) { trim(); }

IntPoly IntPoly::constant(const Integer& a) { return IntPoly(std::vector<Integer>{a}); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& a : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive() const {
  if (c_.empty()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(r[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Integer> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(r));
}

std::size_t IntPoly::max_bits() const {
  std::size_t b = 0;
  for (const auto& a : c_) b = std::max(b, mpz_sizeinbase(a.get_mpz_t(), 2));
  return b;
}

Integer IntPoly::eval(const Integer& a) const {
  Integer r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * a + c_[i];
  return r;
}

std::uint64_t IntPoly::eval_mod(std::uint64_t a, std::uint64_t p) const {
  modp::Field F{p};
  std::uint64_t r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = F.add(F.mul(r, a), F.from(c_[i]));
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& b) {
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size());
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& b) {
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size());
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& a) {
  if (a == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= a;
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
IntPoly operator*(IntPoly a, const Integer& k) { return a *= k; }

namespace {

std::size_t bit_length(std::size_t n) {
  std::size_t b = 0;
  while (n) {
    ++b;
    n >>= 1;
  }
  return b;
}

Integer kronecker_pack(const std::vector<Integer>& a, std::size_t bits) {
  Integer x = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), bits);
    x += a[i];
  }
  return x;
}

}  // namespace

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& A = a.coeffs();
  const auto& B = b.coeffs();
  std::size_t n = A.size(), m = B.size();
  std::vector<Integer> r(n + m - 1);
  if (std::min(n, m) <= 16) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) mpz_addmul(r[i + j].get_mpz_t(), A[i].get_mpz_t(), B[j].get_mpz_t());
    return IntPoly(std::move(r));
  }
  // Kronecker substitution with signed slots
  std::size_t bits = a.max_bits() + b.max_bits() + bit_length(std::min(n, m)) + 2;
  Integer c = kronecker_pack(A, bits) * kronecker_pack(B, bits);
  Integer half = Integer(1) << static_cast<unsigned>(bits - 1);
  Integer full = Integer(1) << static_cast<unsigned>(bits);
  for (std::size_t k = 0; k < r.size(); ++k) {
    Integer low;
    mpz_fdiv_r_2exp(low.get_mpz_t(), c.get_mpz_t(), bits);
    if (low >= half) low -= full;
    r[k] = low;
    c -= low;
    mpz_fdiv_q_2exp(c.get_mpz_t(), c.get_mpz_t(), bits);
  }
  return IntPoly(std::move(r));
}

bool exact_divide(const IntPoly& a, const IntPoly& b, IntPoly& q) {
  if (b.is_zero()) throw AlgebraError("division by zero polynomial");
  if (a.is_zero()) {
    q = IntPoly();
    return true;
  }
  if (a.degree() < b.degree()) return false;
  std::vector<Integer> r = a.coeffs();
  const auto& B = b.coeffs();
  std::size_t db = B.size() - 1;
  std::vector<Integer> qc(r.size() - db);
  for (std::size_t k = r.size() - 1;; --k) {
    if (r[k] != 0) {
      if (!mpz_divisible_p(r[k].get_mpz_t(), B.back().get_mpz_t())) return false;
      Integer c;
      mpz_divexact(c.get_mpz_t(), r[k].get_mpz_t(), B.back().get_mpz_t());
      qc[k - db] = c;
      for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[k - db + j].get_mpz_t(), c.get_mpz_t(), B[j].get_mpz_t());
    }
    if (k == db) break;
  }
  for (std::size_t k = 0; k < db; ++k)
    if (r[k] != 0) return false;
  q = IntPoly(std::move(qc));
  return true;
}

// ---------------------------------------------------------------------------
// Polynomial
// ---------------------------------------------------------------------------

Polynomial::Polynomial(std::vector<Rational> c) : c_(std::move(c)) {
  for (auto& a : c_) a.canonicalize();
  trim();
}

Polynomial::Polynomial(const Rational& a) {
  if (a != 0) c_.push_back(a);
}

Polynomial Polynomial::x() { return Polynomial(std::vector<Rational>{0, 1}); }

Polynomial Polynomial::monomial(int k, const Rational& a) {
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
  c[static_cast<std::size_t>(k)] = a;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::from_int(const IntPoly& p, const Integer& den) {
  std::vector<Rational> c(p.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = Rational(p[i], den);
    c[i].canonicalize();
  }
  Polynomial r;
  r.c_ = std::move(c);
  r.trim();
  return r;
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

int Polynomial::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return Polynomial(std::move(r));
}

Polynomial Polynomial::shift(const Rational& xi) const {
  // Horner with (x + xi)
  if (xi == 0) return *this;
  std::vector<Rational> r;
  for (std::size_t i = c_.size(); i-- > 0;) {
    // r = r*(x+xi) + c_i
    std::vector<Rational> t(r.size() + 1);
    for (std::size_t k = 0; k < r.size(); ++k) {
      t[k + 1] += r[k];
      t[k] += r[k] * xi;
    }
    t[0] += c_[i];
    r = std::move(t);
  }
  return Polynomial(std::move(r));
}

Polynomial Polynomial::reverse(int n) const {
  std::vector<Rational> r(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= degree(); ++i) {
    if (i > n) throw AlgebraError("reverse: degree exceeds bound");
    r[static_cast<std::size_t>(n - i)] = c_[static_cast<std::size_t>(i)];
  }
  return Polynomial(std::move(r));
}

Rational Polynomial::eval(const Rational& a) const {
  Rational r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * a + c_[i];
  return r;
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return *this;
  Rational l = leading();
  Polynomial r = *this;
  for (auto& a : r.c_) a /= l;
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r(1), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

IntPoly Polynomial::clear_denominators(Integer& den) const {
  den = 1;
  for (const auto& a : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.get_den_mpz_t());
  std::vector<Integer> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Integer f;
    mpz_divexact(f.get_mpz_t(), den.get_mpz_t(), c_[i].get_den_mpz_t());
    r[i] = c_[i].get_num() * f;
  }
  return IntPoly(std::move(r));
}

IntPoly Polynomial::to_int(Rational& scale) const {
  Integer den;
  IntPoly ip = clear_denominators(den);
  if (ip.is_zero()) {
    scale = 0;
    return ip;
  }
  Integer g = ip.content();
  if (ip.leading() < 0) g = -g;
  scale = Rational(g, den);
  scale.canonicalize();
  return ip.primitive();
}

Polynomial& Polynomial::operator+=(const Polynomial& b) {
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size());
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& b) {
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size());
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& a) {
  if (a == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= a;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator*(Polynomial a, const Rational& k) { return a *= k; }
Polynomial operator*(const Rational& k, Polynomial a) { return a *= k; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.degree() == 0) return b * a.leading();
  if (b.degree() == 0) return a * b.leading();
  Integer da, db;
  IntPoly A = a.clear_denominators(da);
  IntPoly B = b.clear_denominators(db);
  return Polynomial::from_int(A * B, da * db);
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw AlgebraError("division by zero polynomial");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> r = a.coeffs();
  const auto& B = b.coeffs();
  std::size_t db = B.size() - 1;
  std::vector<Rational> q(r.size() - db);
  Rational li = 1 / B.back();
  for (std::size_t k = r.size() - 1;; --k) {
    if (r[k] != 0) {
      Rational c = r[k] * li;
      q[k - db] = c;
      for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= c * B[j];
    }
    if (k == db) break;
  }
  r.resize(db);
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw AlgebraError("division by zero polynomial");
  if (a.is_zero()) return {};
  if (b.degree() == 0) return a * (1 / b.leading());
  Rational sa, sb;
  IntPoly A = a.to_int(sa), B = b.to_int(sb);
  IntPoly q;
  if (!exact_divide(A, B, q)) throw AlgebraError("exact_quotient: not divisible");
  Rational s = sa / sb;
  Integer den = s.get_den();
  q *= Integer(s.get_num());
  return Polynomial::from_int(q, den);
}

namespace {

Polynomial euclid_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
    if (!b.is_zero()) {
      Rational s;
      IntPoly ib = b.to_int(s);
      b = Polynomial::from_int(ib);
    }
  }
  return a.monic();
}

Integer symmetric(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  if (r * 2 > m) r -= m;
  return r;
}

// gcd of primitive integer polynomials of positive degree
IntPoly modular_gcd(const IntPoly& A, const IntPoly& B) {
  Integer gamma;
  mpz_gcd(gamma.get_mpz_t(), A.leading().get_mpz_t(), B.leading().get_mpz_t());
  int cur = std::min(A.degree(), B.degree()) + 1;
  std::vector<Integer> acc;
  Integer M = 1;
  IntPoly last;
  for (std::size_t i = 0;; ++i) {
    modp::Field F{modp::prime(i)};
    if (F.from(A.leading()) == 0 || F.from(B.leading()) == 0) continue;
    modp::NPoly g = modp::gcd(modp::reduce(A, F), modp::reduce(B, F), F);
    int d = modp::degree(g);
    if (d == 0) return IntPoly::constant(1);
    if (d > cur) continue;
    modp::NPoly gg = modp::scale(g, F.from(gamma), F);
    gg.resize(static_cast<std::size_t>(d) + 1, 0);
    if (d < cur) {
      cur = d;
      acc.assign(static_cast<std::size_t>(d) + 1, 0);
      for (int k = 0; k <= d; ++k) acc[static_cast<std::size_t>(k)] = static_cast<unsigned long>(gg[static_cast<std::size_t>(k)]);
      M = static_cast<unsigned long>(F.p);
      last = IntPoly();
      continue;
    }
    for (int k = 0; k <= d; ++k) crt_combine(acc[static_cast<std::size_t>(k)], M, gg[static_cast<std::size_t>(k)], F.p);
    M *= static_cast<unsigned long>(F.p);
    std::vector<Integer> sym(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) sym[k] = symmetric(acc[k], M);
    IntPoly cand = IntPoly(sym).primitive();
    if (cand == last) {
      IntPoly q;
      if (exact_divide(A, cand, q) && exact_divide(B, cand, q)) return cand;
    }
    last = cand;
  }
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return Polynomial(1);
  if (a.degree() + b.degree() <= 8) return euclid_gcd(a, b);
  Rational sa, sb;
  IntPoly A = a.to_int(sa), B = b.to_int(sb);
  return Polynomial::from_int(modular_gcd(A, B)).monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return (exact_quotient(a, gcd(a, b)) * b).monic();
}

Polynomial squarefree_part(const Polynomial& a) {
  if (a.is_zero()) throw AlgebraError("squarefree part of zero");
  if (a.degree() <= 0) return Polynomial(1);
  return exact_quotient(a, gcd(a, a.derivative())).monic();
}

int root_multiplicity(const Polynomial& a, const Rational& xi) {
  if (a.is_zero()) throw AlgebraError("root multiplicity in zero polynomial");
  int m = 0;
  std::vector<Rational> c = a.coeffs();
  while (c.size() > 1) {
    // synthetic division by (x - xi)
    std::vector<Rational> q(c.size() - 1);
    Rational carry = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      Rational v = c[i] + carry * xi;
      if (i == 0) {
        if (v != 0) return m;
      } else {
        q[i - 1] = v;
      }
      carry = v;
    }
    ++m;
    c = std::move(q);
  }
  return m;
}

Rational resultant(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  Rational sign = 1, acc = 1;
  Polynomial f = a, g = b;
  for (;;) {
    int df = f.degree(), dg = g.degree();
    if (dg == 0) {
      Rational p = 1;
      for (int i = 0; i < df; ++i) p *= g.leading();
      return sign * acc * p;
    }
    if (df < dg) {
      if ((df * dg) % 2 == 1) sign = -sign;
      std::swap(f, g);
      continue;
    }
    Polynomial r = divmod(f, g).second;
    if (r.is_zero()) return 0;
    if ((df * dg) % 2 == 1) sign = -sign;
    int dr = r.degree();
    for (int i = 0; i < df - dr; ++i) acc *= g.leading();
    f = std::move(g);
    g = std::move(r);
    // now Res(f_old, g_old) = (-1)^{df dg} lc(g)^{df-dr} Res(g_old, r)
  }
}

namespace {

// Rational roots of a squarefree primitive integer polynomial with nonzero
// constant term and degree >= 2, via p-adic lifting of roots mod p.
std::vector<Rational> padic_roots(const IntPoly& G) {
  std::vector<Rational> out;
  IntPoly dG = G.derivative();
  for (std::size_t i = 0;; ++i) {
    modp::Field F{modp::prime(i)};
    if (F.from(G.leading()) == 0) continue;
    modp::NPoly g = modp::reduce(G, F);
    modp::NPoly dg = modp::reduce(dG, F);
    if (modp::degree(modp::gcd(g, dg, F)) != 0) continue;
    std::vector<modp::u64> rs = modp::roots(g, F);
    Integer nb = abs(G[0]) + 1, db = abs(G.leading()) + 1;
    Integer target = 2 * nb * db;
    Integer p = static_cast<unsigned long>(F.p);
    for (modp::u64 r0 : rs) {
      Integer r = static_cast<unsigned long>(r0), M = p;
      while (M <= target) {
        Integer M2 = M * M;
        Integer num = G.eval(r) % M2;
        Integer den = dG.eval(r) % M2;
        Integer inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), M2.get_mpz_t()) == 0) break;
        r = (r - num * inv) % M2;
        if (r < 0) r += M2;
        M = M2;
      }
      Rational q;
      if (!rational_reconstruct(r, M, nb, db, q)) continue;
      // exact check: sum g_i a^i b^(n-i) = 0
      Integer a = q.get_num(), b = q.get_den(), acc = 0, bp = 1;
      int n = G.degree();
      std::vector<Integer> apow(static_cast<std::size_t>(n) + 1);
      apow[0] = 1;
      for (int k = 1; k <= n; ++k) apow[static_cast<std::size_t>(k)] = apow[static_cast<std::size_t>(k - 1)] * a;
      for (int k = n; k >= 0; --k) {
        acc += G[static_cast<std::size_t>(k)] * apow[static_cast<std::size_t>(k)] * bp;
        bp *= b;
      }
      if (acc == 0) out.push_back(q);
    }
    return out;
  }
}

}  // namespace

RationalRoots rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw AlgebraError("rational_roots of the zero polynomial");
  RationalRoots res;
  if (p.degree() == 0) return res;
  Polynomial sq = squarefree_part(p);
  Rational s;
  IntPoly G = sq.to_int(s);
  std::vector<Rational> distinct;
  if (G[0] == 0) {
    distinct.push_back(0);
    std::vector<Integer> c(G.coeffs().begin() + 1, G.coeffs().end());
    G = IntPoly(std::move(c));
  }
  if (G.degree() == 1) {
    Rational q(-G[0], G[1]);
    q.canonicalize();
    distinct.push_back(q);
  } else if (G.degree() >= 2) {
    auto rs = padic_roots(G);
    distinct.insert(distinct.end(), rs.begin(), rs.end());
  }
  std::sort(distinct.begin(), distinct.end());
  int total = 0;
  for (const auto& r : distinct) {
    int m = root_multiplicity(p, r);
    total += m;
    for (int k = 0; k < m; ++k) res.roots.push_back(r);
  }
  res.has_irrational_factor = total < p.degree();
  return res;
}

std::string to_string(const Polynomial& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (c == 0) continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// RationalFunction
// ---------------------------------------------------------------------------

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw AlgebraError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den.degree() > 0 && num.degree() >= 0) {
    Polynomial g = gcd(num, den);
    if (g.degree() > 0) {
      num = exact_quotient(num, g);
      den = exact_quotient(den, g);
    }
  }
  Rational l = den.leading();
  num_ = num * (1 / l);
  den_ = den * (1 / l);
}

RationalFunction RationalFunction::trusted(Polynomial num, Polynomial den) {
  RationalFunction r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

RationalFunction RationalFunction::derivative() const {
  if (den_.degree() == 0) return RationalFunction(num_.derivative());
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw AlgebraError("inverse of zero rational function");
  return RationalFunction(den_, num_);
}

Rational RationalFunction::eval(const Rational& a) const {
  Rational d = den_.eval(a);
  if (d == 0) throw AlgebraError("evaluation at a pole");
  return num_.eval(a) / d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& b) {
  if (b.is_zero()) return *this;
  if (is_zero()) return *this = b;
  if (den_ == b.den_) {
    *this = RationalFunction(num_ + b.num_, den_);
  } else if (den_.degree() == 0 && b.den_.degree() == 0) {
    num_ += b.num_;
  } else {
    *this = RationalFunction(num_ * b.den_ + b.num_ * den_, den_ * b.den_);
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& b) { return *this += -b; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& b) {
  if (is_zero() || b.is_zero()) return *this = RationalFunction();
  if (den_.degree() == 0 && b.den_.degree() == 0) {
    num_ = num_ * b.num_;
    return *this;
  }
  Polynomial g1 = gcd(num_, b.den_), g2 = gcd(b.num_, den_);
  Polynomial n1 = g1.degree() > 0 ? exact_quotient(num_, g1) : num_;
  Polynomial d2 = g1.degree() > 0 ? exact_quotient(b.den_, g1) : b.den_;
  Polynomial n2 = g2.degree() > 0 ? exact_quotient(b.num_, g2) : b.num_;
  Polynomial d1 = g2.degree() > 0 ? exact_quotient(den_, g2) : den_;
  Polynomial n = n1 * n2, d = d1 * d2;
  Rational l = d.leading();
  num_ = n * (1 / l);
  den_ = d * (1 / l);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& b) { return *this *= b.inverse(); }

RationalFunction RationalFunction::operator-() const { return trusted(-num_, den_); }

RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

std::string to_string(const RationalFunction& f, std::string_view var) {
  if (f.den().degree() == 0) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

// ---------------------------------------------------------------------------
// Linear algebra
// ---------------------------------------------------------------------------

void QMatrix::append_row(const std::vector<Rational>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw AlgebraError("row length mismatch");
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

namespace {

using IntRow = std::vector<Integer>;

void reduce_content(IntRow& r) {
  Integer g = 0;
  for (const auto& a : r) {
    if (a == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& a : r)
    if (a != 0) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
}

IntRow integer_row(const QMatrix& m, std::size_t i) {
  Integer den = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den_mpz_t());
  IntRow r(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer f;
    mpz_divexact(f.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den_mpz_t());
    r[j] = m(i, j).get_num() * f;
  }
  reduce_content(r);
  return r;
}

}  // namespace

Echelon rref(const QMatrix& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(integer_row(m, i));
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  Integer g, f1, f2;
  for (std::size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    if (p != r) {
      auto row = std::move(rows[p]);
      rows.erase(rows.begin() + static_cast<long>(p));
      rows.insert(rows.begin() + static_cast<long>(r), std::move(row));
    }
    const IntRow& pr = rows[r];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      IntRow& ri = rows[i];
      mpz_gcd(g.get_mpz_t(), pr[c].get_mpz_t(), ri[c].get_mpz_t());
      mpz_divexact(f1.get_mpz_t(), pr[c].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(f2.get_mpz_t(), ri[c].get_mpz_t(), g.get_mpz_t());
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j == c) {
          ri[j] = 0;
          continue;
        }
        if (pr[j] == 0) {
          if (ri[j] != 0) ri[j] *= f1;
          continue;
        }
        ri[j] *= f1;
        mpz_submul(ri[j].get_mpz_t(), f2.get_mpz_t(), pr[j].get_mpz_t());
      }
      reduce_content(ri);
    }
    pivots.push_back(c);
    ++r;
  }
  Echelon e;
  e.pivots = pivots;
  for (std::size_t i = 0; i < r; ++i) {
    QVector v(m.cols());
    const Integer& pv = rows[i][pivots[i]];
    for (std::size_t j = 0; j < m.cols(); ++j) {
      v[j] = Rational(rows[i][j], pv);
      v[j].canonicalize();
    }
    e.rows.push_back(std::move(v));
  }
  return e;
}

std::vector<QVector> nullspace(const QMatrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

bool solve(const QMatrix& m, const QVector& b, QVector& v) {
  if (b.size() != m.rows()) throw AlgebraError("solve: dimension mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = rref(aug);
  v.assign(m.cols(), 0);
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == m.cols()) return false;
    v[e.pivots[i]] = e.rows[i][m.cols()];
  }
  return true;
}

}  // namespace dct
