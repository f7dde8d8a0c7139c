#include "dct/algsols.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <random>

namespace dct {

namespace {

std::vector<Integer> integer_roots(const Polynomial& p) {
  std::vector<Integer> out;
  if (p.degree() < 1) return out;
  for (const Rational& r : rational_roots(p).roots)
    if (r.get_den() == 1) out.push_back(r.get_num());
  return out;
}

Polynomial linear(const Rational& xi) { return Polynomial(std::vector<Rational>{-xi, 1}); }

// Rational solutions N/den with deg N <= dn.
std::vector<RationalFunction> solutions_with_bound(const OrePoly& l, const Polynomial& den, long dn) {
  if (dn < 0) return {};
  // polynomial solutions of L * (1/den)
  std::vector<IntPoly> p =
      integer_form(den.degree() == 0 ? l : l * OrePoly::scalar(RationalFunction(Polynomial(1), den)));
  int pdeg = 0;
  for (const IntPoly& pi : p) pdeg = std::max(pdeg, pi.degree());
  std::size_t cols = static_cast<std::size_t>(dn) + 1;
  QMatrix m(static_cast<std::size_t>(pdeg + dn) + 1, cols);
  for (std::size_t k = 0; k < cols; ++k) {
    Integer ff = 1;  // k (k-1) ... (k-i+1)
    for (std::size_t i = 0; i < p.size() && i <= k; ++i) {
      if (i > 0) ff *= static_cast<long>(k - i + 1);
      for (int j = 0; j <= p[i].degree(); ++j)
        m(static_cast<std::size_t>(j) + k - i, k) += Rational(p[i].coeff(j) * ff);
    }
  }
  std::vector<QVector> ns = nullspace(m);
  if (ns.empty()) return {};
  QMatrix basis(0, 0);
  for (const QVector& v : ns) basis.append_row(v);
  std::vector<RationalFunction> out;
  for (const QVector& v : rref(basis).rows) out.emplace_back(Polynomial(v), den);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Rational solutions
// ---------------------------------------------------------------------------

std::vector<RationalFunction> rational_solutions(const OrePoly& l) {
  if (l.is_zero()) throw OreError("rational solutions of the zero operator");
  if (l.order() == 0) return {};
  // A nonzero rational solution has an integer valuation at every point, and
  // it is a root of the indicial polynomial there.
  SingularSupport ss = singular_support(l);
  Polynomial den(1);
  for (const Rational& xi : ss.finite_points) {
    std::vector<Integer> e = integer_roots(indicial_polynomial(l, Point::at(xi)));
    if (e.empty()) return {};
    Integer lo = *std::min_element(e.begin(), e.end());
    if (lo < 0) den = den * linear(xi).pow(static_cast<unsigned>(-lo.get_si()));
  }
  if (ss.irrational_locus.degree() > 0) {
    std::vector<Integer> e = integer_roots(indicial_norm(l, ss.irrational_locus));
    if (e.empty()) return {};
    Integer lo = *std::min_element(e.begin(), e.end());
    if (lo < 0) den = den * ss.irrational_locus.pow(static_cast<unsigned>(-lo.get_si()));
  }
  std::vector<Integer> einf = integer_roots(indicial_polynomial(l, Point::infinity()));
  if (einf.empty()) return {};
  long dn = den.degree() - std::min_element(einf.begin(), einf.end())->get_si();
  return solutions_with_bound(l, den, dn);
}

std::vector<RationalFunction> rational_solutions_of_power(const OrePoly& l, int s, const OrePoly& ls) {
  if (s < 1) throw AlgebraError("power must be positive");
  if (ls.order() == 0) return {};
  // Solutions of the power are sums of products of s solutions of L, so a
  // pole needs a pole of order s*e at a singular point of L with exponent e.
  auto lowest = [&](const std::vector<Rational>& e) -> Rational { return s * e.front(); };
  SingularSupport ss = singular_support(l);
  Polynomial den(1);
  for (const Rational& xi : ss.finite_points) {
    PointClassification c = classify_point(l, Point::at(xi));
    if (!is_puiseux(c.kind)) return rational_solutions(ls);
    Integer v = ceil(lowest(c.exponents));
    if (v < 0) den = den * linear(xi).pow(static_cast<unsigned>(-v.get_si()));
  }
  if (ss.irrational_locus.degree() > 0)
    for (const PointClassification& c : classify_locus(l, ss.irrational_locus)) {
      if (!is_puiseux(c.kind)) return rational_solutions(ls);
      Integer v = ceil(lowest(c.exponents));
      if (v < 0) den = den * c.point.locus.pow(static_cast<unsigned>(-v.get_si()));
    }
  PointClassification c = classify_point(l, Point::infinity());
  if (!is_puiseux(c.kind)) return rational_solutions(ls);
  long dn = den.degree() - ceil(lowest(c.exponents)).get_si();
  return solutions_with_bound(ls, den, dn);
}

// ---------------------------------------------------------------------------
// Minimal polynomials
// ---------------------------------------------------------------------------

bool operator==(const MinPoly& a, const MinPoly& b) { return a.coeffs == b.coeffs; }

std::string to_string(const MinPoly& m) {
  std::string out;
  for (int k = m.degree(); k >= 0; --k) {
    const RationalFunction& c = m.coeffs[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string s = to_string(c);
    bool neg = !s.empty() && s[0] == '-';
    std::string body = neg ? s.substr(1) : s;
    bool simple = body.find_first_of("+-/") == std::string::npos;
    if (!simple) {
      neg = false;
      body = "(" + s + ")";
    }
    std::string term;
    std::string yk = k == 0 ? "" : k == 1 ? "y" : "y^" + std::to_string(k);
    if (k == 0)
      term = body;
    else if (body == "1")
      term = yk;
    else
      term = body + "*" + yk;
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

MinPoly make_minpoly(std::vector<RationalFunction> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.size() < 2) throw AlgebraError("a minimal polynomial needs degree >= 1");
  RationalFunction lc = coeffs.back();
  for (auto& c : coeffs) c = c / lc;
  return MinPoly{std::move(coeffs)};
}

MinPoly scale_roots(const MinPoly& m, const Rational& lambda) {
  if (lambda == 0) throw AlgebraError("scaling by zero");
  MinPoly out = m;
  Rational w = 1;
  for (int k = m.degree(); k >= 0; --k) {
    out.coeffs[static_cast<std::size_t>(k)] = out.coeffs[static_cast<std::size_t>(k)] * RationalFunction(w);
    w *= lambda;
  }
  return out;
}

namespace {

Integer rho_split(const Integer& n) {
  // Pollard rho with Floyd cycle detection; n is odd, composite and not a prime power in practice
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto f = [&](const Integer& v) -> Integer { return Integer((v * v + c) % n); };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = gcd(Integer(abs(x - y)), n);
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::vector<Integer>& primes) {
  for (unsigned long p = 2; p < 1000 && p * p <= n; ++p)
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.emplace_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
    }
  if (n <= 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    primes.push_back(n);
    return;
  }
  Integer r;
  for (unsigned long k = 2; k < 64; ++k)
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      factor_into(r, primes);
      return;
    }
  Integer d = rho_split(n);
  factor_into(d, primes);
  factor_into(Integer(n / d), primes);
}

// The primes dividing any of the inputs, sorted.
std::vector<Integer> prime_support(const std::vector<Integer>& in) {
  std::vector<Integer> primes;
  for (const Integer& n : in) factor_into(abs(n), primes);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

long valuation_at(Integer n, const Integer& b) {
  long v = 0;
  n = abs(n);
  while (n != 0 && mpz_divisible_p(n.get_mpz_t(), b.get_mpz_t())) {
    n /= b;
    ++v;
  }
  return v;
}

long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

MinPoly normalize_scaling(const MinPoly& m) {
  int d = m.degree();
  // numerator coefficients (the denominators are monic) with their weight
  std::vector<std::pair<Rational, int>> cs;
  std::vector<Integer> ints;
  for (int k = 0; k < d; ++k)
    for (const Rational& c : m.coeffs[static_cast<std::size_t>(k)].num().coeffs()) {
      if (c == 0) continue;
      cs.emplace_back(c, d - k);
      ints.push_back(c.get_num());
      ints.push_back(c.get_den());
    }
  if (cs.empty()) return m;
  Rational lambda = 1;
  for (const Integer& b : prime_support(ints)) {
    long k = LONG_MAX;
    for (const auto& [c, w] : cs) k = std::min(k, floor_div(valuation_at(c.get_num(), b) - valuation_at(c.get_den(), b), w));
    Rational f = 1;
    for (long i = 0; i < std::labs(k); ++i) f *= Rational(b);
    lambda *= k >= 0 ? f : 1 / f;
  }
  MinPoly out = scale_roots(m, 1 / lambda);
  for (int w = 1; w <= d; w += 2) {
    const RationalFunction& c = out.coeffs[static_cast<std::size_t>(d - w)];
    if (c.is_zero()) continue;
    if (c.num().leading() < 0) out = scale_roots(out, -1);
    break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Annihilators of algebraic functions
// ---------------------------------------------------------------------------

namespace {

using RPoly = std::vector<RationalFunction>;  // polynomial in y over Q(x)

void trim(RPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

RPoly sub(RPoly a, const RPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
  trim(a);
  return a;
}

RPoly mul(const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!a[i].is_zero() && !b[j].is_zero()) c[i + j] = c[i + j] + a[i] * b[j];
  trim(c);
  return c;
}

std::pair<RPoly, RPoly> divmod(RPoly a, const RPoly& b) {
  RPoly q;
  if (a.size() >= b.size()) q.resize(a.size() - b.size() + 1);
  RationalFunction inv = b.back().inverse();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t s = a.size() - b.size();
    RationalFunction f = a.back() * inv;
    q[s] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[s + i] = a[s + i] - f * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

// s with s*a = 1 mod m; nullopt when gcd(a, m) is not constant.
std::optional<RPoly> inverse_mod(const RPoly& a, const RPoly& m) {
  RPoly r0 = m, r1 = a, s0, s1{RationalFunction(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    RPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) return std::nullopt;
  RationalFunction inv = r0[0].inverse();
  for (auto& c : s0) c = c * inv;
  return divmod(s0, m).second;
}

RPoly derivative_coeffs(const RPoly& a) {
  RPoly out;
  for (const auto& c : a) out.push_back(c.derivative());
  trim(out);
  return out;
}

RPoly derivative_y(const RPoly& a) {
  RPoly out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * RationalFunction(static_cast<int>(i)));
  trim(out);
  return out;
}

RPoly add(RPoly a, const RPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] + b[i];
  trim(a);
  return a;
}

// n with sum_j n_j v_j = 0 and n_last = 1, or nullopt.
std::optional<std::vector<RationalFunction>> dependency(const std::vector<RPoly>& v, std::size_t dim) {
  std::size_t k = v.size() - 1;
  // rows: coordinates; columns: v_0..v_{k-1} | -v_k
  std::vector<std::vector<RationalFunction>> a(dim, std::vector<RationalFunction>(k + 1));
  for (std::size_t j = 0; j <= k; ++j)
    for (std::size_t i = 0; i < dim; ++i) {
      RationalFunction c = i < v[j].size() ? v[j][i] : RationalFunction(0);
      a[i][j] = j == k ? -c : c;
    }
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < dim; ++col) {
    std::size_t p = row;
    while (p < dim && a[p][col].is_zero()) ++p;
    if (p == dim) continue;
    std::swap(a[p], a[row]);
    RationalFunction inv = a[row][col].inverse();
    for (auto& e : a[row]) e = e * inv;
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      RationalFunction f = a[r][col];
      for (std::size_t c = col; c <= k; ++c) a[r][c] = a[r][c] - f * a[row][c];
    }
    piv.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < dim; ++r)
    if (!a[r][k].is_zero()) return std::nullopt;
  std::vector<RationalFunction> n(k + 1);
  n[k] = 1;
  for (std::size_t r = 0; r < piv.size(); ++r) n[piv[r]] = a[r][k];
  return n;
}

}  // namespace

OrePoly annihilator_of_algebraic(const MinPoly& m) {
  if (m.degree() < 1) throw AlgebraError("annihilator of a constant polynomial");
  RPoly mm = m.coeffs;
  std::size_t d = static_cast<std::size_t>(m.degree());
  std::optional<RPoly> inv = inverse_mod(derivative_y(mm), mm);
  if (!inv) throw AlgebraError("minimal polynomial is not squarefree");
  // y' = -m_x / m_y
  RPoly yp = divmod(mul(derivative_coeffs(mm), *inv), mm).second;
  for (auto& c : yp) c = -c;
  auto deriv = [&](const RPoly& a) {
    return divmod(add(derivative_coeffs(a), mul(derivative_y(a), yp)), mm).second;
  };
  std::vector<RPoly> v{divmod(RPoly{RationalFunction(0), RationalFunction(1)}, mm).second};
  for (;;) {
    if (auto n = dependency(v, d)) return OrePoly(*n);
    v.push_back(deriv(v.back()));
  }
}

// ---------------------------------------------------------------------------
// Algebraic solutions of bounded degree
// ---------------------------------------------------------------------------

std::string to_string(AlgDecision::Kind k) {
  switch (k) {
    case AlgDecision::Kind::minimal_polynomial:
      return "minimal_polynomial";
    case AlgDecision::Kind::bottom:
      return "bottom";
    case AlgDecision::Kind::inconclusive_budget:
      return "inconclusive_budget";
  }
  return {};
}

Rational algsols_expansion_point(const OrePoly& l) {
  for (long a = 0;; ++a)
    if (classify_point(l, Point::at(a)).kind == PointKind::ordinary) return a;
}

PuiseuxSeries series_for_algsols(const OrePoly& l, int nterms, std::uint64_t seed) {
  Rational a = algsols_expansion_point(l);
  LocalBasis b = ordinary_series_basis(l, a, nterms);
  std::mt19937_64 g(seed);
  std::uniform_int_distribution<int> pick(1, 5), sign(0, 1);
  PuiseuxSeries f{Point::at(a), 0, std::vector<Rational>(static_cast<std::size_t>(nterms))};
  for (const PuiseuxSeries& s : b.solutions) {
    int c = pick(g) * (sign(g) ? 1 : -1);
    for (std::size_t k = 0; k < s.coeffs.size(); ++k) f.coeffs[k] += c * s.coeffs[k];
  }
  return f;
}

namespace {

// Truncated product with the window of the shorter factor.
PuiseuxSeries mul_series(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
  PuiseuxSeries c{a.point, a.exponent + b.exponent, std::vector<Rational>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) c.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return c;
}

PuiseuxSeries expand(const RationalFunction& q, const Point& p, int n) {
  PuiseuxSeries one{p, 0, std::vector<Rational>(static_cast<std::size_t>(n))};
  one.coeffs[0] = 1;
  return apply_to_series(OrePoly::scalar(q), one);
}

enum class Outcome { solved, unsolvable, underdetermined };

struct Ansatz {
  int d = 0;
  std::vector<std::pair<int, RationalFunction>> terms;  // (i, q_ij): c * q * y^(d-i)
};

// Equations sum c_ij q_ij f^(d-i) = -f^d at every exponent below the common window.
Outcome solve_ansatz(const Ansatz& an, const PuiseuxSeries& f, std::vector<Rational>& c) {
  int n = static_cast<int>(f.coeffs.size());
  std::vector<PuiseuxSeries> pw{PuiseuxSeries{f.point, 0, std::vector<Rational>(static_cast<std::size_t>(n))}};
  pw[0].coeffs[0] = 1;
  for (int i = 1; i <= an.d; ++i) pw.push_back(mul_series(pw.back(), f));
  std::vector<PuiseuxSeries> cols;
  for (const auto& [i, q] : an.terms) cols.push_back(mul_series(expand(q, f.point, n), pw[static_cast<std::size_t>(an.d - i)]));
  const PuiseuxSeries& rhs = pw[static_cast<std::size_t>(an.d)];
  Rational top = rhs.precision();
  for (const auto& s : cols) top = std::min(top, s.precision());
  std::map<Rational, std::pair<QVector, Rational>> eqs;
  auto row = [&](const Rational& e) -> std::pair<QVector, Rational>& {
    auto it = eqs.find(e);
    if (it == eqs.end()) it = eqs.emplace(e, std::make_pair(QVector(cols.size()), Rational(0))).first;
    return it->second;
  };
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t k = 0; k < cols[j].coeffs.size(); ++k) {
      Rational e = cols[j].exponent + static_cast<long>(k);
      if (e >= top || cols[j].coeffs[k] == 0) continue;
      row(e).first[j] += cols[j].coeffs[k];
    }
  for (std::size_t k = 0; k < rhs.coeffs.size(); ++k) {
    Rational e = rhs.exponent + static_cast<long>(k);
    if (e >= top || rhs.coeffs[k] == 0) continue;
    row(e).second -= rhs.coeffs[k];
  }
  QMatrix m(0, 0);
  QVector b;
  for (const auto& [e, r] : eqs) {
    m.append_row(r.first);
    b.push_back(r.second);
  }
  if (cols.empty()) {
    for (const Rational& v : b)
      if (v != 0) return Outcome::unsolvable;
    return Outcome::underdetermined;
  }
  if (m.rows() == 0) return Outcome::underdetermined;
  if (!solve(m, b, c)) return Outcome::unsolvable;
  return rank(m) < cols.size() ? Outcome::underdetermined : Outcome::solved;
}

bool verify(const OrePoly& l, const MinPoly& m) {
  OrePoly a;
  try {
    a = annihilator_of_algebraic(m);
  } catch (const AlgebraError&) {
    return false;
  }
  if (a.order() == 0) return false;
  OrePoly g = lclm(l, a);
  return g.order() == l.order() && right_divmod(g, a).second.is_zero();
}

}  // namespace

AlgDecision all_algebraic_of_degree(const OrePoly& l, int d, const AlgOptions& opt) {
  if (d < 1) throw AlgebraError("degree bound must be at least 1");
  if (l.is_zero()) throw OreError("algebraic solutions of the zero operator");
  Ansatz an;
  an.d = d;
  std::size_t maxn = 0;
  for (int i = 1; i <= d; ++i) {
    std::vector<RationalFunction> qs = i == 1 ? rational_solutions(l) : rational_solutions_of_power(l, i, symmetric_power(l, i));
    maxn = std::max(maxn, qs.size());
    for (auto& q : qs) an.terms.emplace_back(i, std::move(q));
  }
  int t0 = (d + 1) * (1 + static_cast<int>(maxn)) + l.order() + 10;

  // The seeded generic solution first, then single local solutions at the
  // singular points: a root of the minimal polynomial is rarely generic.
  std::vector<std::function<PuiseuxSeries(int)>> candidates;
  candidates.emplace_back([&](int n) { return series_for_algsols(l, n, opt.seed); });
  std::vector<Point> pts;
  SingularSupport ss = singular_support(l);
  for (const Rational& xi : ss.finite_points) pts.push_back(Point::at(xi));
  pts.push_back(Point::infinity());
  for (const Point& p : pts) {
    PointClassification c = classify_point(l, p);
    if (!is_puiseux(c.kind) || c.kind == PointKind::ordinary) continue;
    for (std::size_t b = 0; b < c.exponents.size(); ++b)
      candidates.emplace_back([&l, p, b](int n) { return local_basis(l, p, n).solutions[b]; });
  }

  AlgDecision out;
  bool exhausted = false;
  for (const auto& make : candidates) {
    int t = t0;
    for (int attempt = 0; attempt <= opt.budget; ++attempt, t *= 2) {
      out.truncation = t;
      std::vector<Rational> c;
      Outcome o = solve_ansatz(an, make(t), c);
      if (o == Outcome::unsolvable) break;
      if (o == Outcome::underdetermined) {
        if (attempt == opt.budget) exhausted = true;
        continue;
      }
      std::vector<RationalFunction> coeffs(static_cast<std::size_t>(d) + 1);
      coeffs[static_cast<std::size_t>(d)] = 1;
      for (std::size_t j = 0; j < an.terms.size(); ++j)
        coeffs[static_cast<std::size_t>(d - an.terms[j].first)] += RationalFunction(c[j]) * an.terms[j].second;
      MinPoly m{coeffs};
      if (verify(l, m)) {
        out.kind = AlgDecision::Kind::minimal_polynomial;
        out.minpoly = normalize_scaling(m);
        return out;
      }
      if (attempt == opt.budget) exhausted = true;
    }
  }
  out.kind = exhausted ? AlgDecision::Kind::inconclusive_budget : AlgDecision::Kind::bottom;
  return out;
}

}  // namespace dct
