#include "dct/localsolve.hpp"

#include <algorithm>
#include <climits>
#include <map>

#include "dct/parse.hpp"

namespace dct {

// ---------------------------------------------------------------------------
// Points
// ---------------------------------------------------------------------------

Point Point::at(const Rational& xi) {
  Point p;
  p.xi = xi;
  return p;
}

Point Point::infinity() {
  Point p;
  p.kind = Kind::infinity;
  return p;
}

Point Point::roots_of(const Polynomial& h) {
  if (h.degree() < 2) throw AlgebraError("an algebraic point needs a locus of degree >= 2");
  Point p;
  p.kind = Kind::algebraic;
  p.locus = h.monic();
  return p;
}

bool operator==(const Point& a, const Point& b) {
  if (a.kind != b.kind) return false;
  if (a.is_finite()) return a.xi == b.xi;
  if (a.is_algebraic()) return a.locus == b.locus;
  return true;
}

bool operator<(const Point& a, const Point& b) {
  auto rank = [](const Point& p) { return p.is_finite() ? 0 : p.is_algebraic() ? 1 : 2; };
  if (a.kind != b.kind) return rank(a) < rank(b);
  if (a.is_finite()) return a.xi < b.xi;
  if (a.is_algebraic()) return to_string(a.locus) < to_string(b.locus);
  return false;
}

std::string to_string(const Point& p) {
  switch (p.kind) {
    case Point::Kind::finite:
      return to_string(p.xi);
    case Point::Kind::infinity:
      return "inf";
    case Point::Kind::algebraic:
      return "RootOf(" + to_string(p.locus) + ")";
  }
  return {};
}

Point parse_point(const std::string& s) {
  if (s == "inf") return Point::infinity();
  if (s.starts_with("RootOf(") && s.ends_with(")")) {
    OrePoly h = parse_operator(std::string_view(s).substr(7, s.size() - 8));
    if (h.order() != 0 || h.coeff(0).den().degree() != 0) throw AlgebraError("RootOf needs a polynomial: " + s);
    return Point::roots_of(h.coeff(0).num());
  }
  return Point::at(parse_rational(s));
}

std::string to_string(PointKind k) {
  switch (k) {
    case PointKind::ordinary:
      return "ordinary";
    case PointKind::puiseux_regular:
      return "puiseux_regular";
    case PointKind::logarithmic:
      return "logarithmic";
    case PointKind::irrational_exponent:
      return "irrational_exponent";
    case PointKind::irregular:
      return "irregular";
  }
  return {};
}

PointKind parse_point_kind(const std::string& s) {
  for (PointKind k : {PointKind::ordinary, PointKind::puiseux_regular, PointKind::logarithmic,
                      PointKind::irrational_exponent, PointKind::irregular})
    if (to_string(k) == s) return k;
  throw AlgebraError("unknown point classification '" + s + "'");
}

NotPuiseux::NotPuiseux(PointClassification c)
    : std::runtime_error("no Puiseux basis at " + to_string(c.point) + " (" + to_string(c.kind) + ")"),
      c_(std::move(c)) {}

int PuiseuxSeries::ramification() const {
  return static_cast<int>(exponent.get_den().get_si());
}

std::optional<Rational> PuiseuxSeries::valuation() const {
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) return exponent + static_cast<long>(k);
  return std::nullopt;
}

Rational PuiseuxSeries::coeff_at(const Rational& e) const {
  Rational d = e - exponent;
  if (d.get_den() != 1 || d < 0 || d >= static_cast<long>(coeffs.size())) return 0;
  return coeffs[d.get_num().get_ui()];
}

namespace {

// ---------------------------------------------------------------------------
// Coefficient fields: Q at a rational point, Q[x]/(h) along a locus.
// ---------------------------------------------------------------------------

struct ZeroDivisor {
  Polynomial factor;  // proper monic factor of the locus
};

struct RatField {
  using T = Rational;
  Rational xi;

  T zero() const { return 0; }
  T one() const { return 1; }
  T from(const Rational& a) const { return a; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T scale(const T& a, const Rational& k) const { return a * k; }
  bool raw_zero(const T& a) const { return sgn(a) == 0; }
  bool is_zero(const T& a) const { return sgn(a) == 0; }
  T inv(const T& a) const { return 1 / a; }
  std::vector<T> taylor(const Polynomial& p) const { return p.shift(xi).coeffs(); }
  std::vector<Rational> components(const T& a) const { return {a}; }
};

Polynomial rem(const Polynomial& a, const Polynomial& h) {
  if (a.degree() < h.degree()) return a;
  return divmod(a, h).second;
}

struct ModField {
  using T = Polynomial;
  Polynomial h;

  T zero() const { return {}; }
  T one() const { return Polynomial(1); }
  T from(const Rational& a) const { return Polynomial(a); }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    return rem(a * b, h);
  }
  T scale(const T& a, const Rational& k) const { return a * k; }
  bool raw_zero(const T& a) const { return a.is_zero(); }

  // Zero at every root of h; throws when it vanishes at only some of them.
  bool is_zero(const T& a) const {
    if (a.is_zero()) return true;
    Polynomial g = gcd(a, h);
    if (g.degree() > 0) throw ZeroDivisor{g};
    return false;
  }

  T inv(const T& a) const {
    // extended Euclid: s*a + t*h = g
    Polynomial r0 = h, r1 = a, s0 = 0, s1 = 1;
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      Polynomial s = s0 - q * s1;
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    if (r0.degree() > 0) throw ZeroDivisor{r0.monic()};
    return rem(s0 * (1 / r0.leading()), h);
  }

  std::vector<T> taylor(const Polynomial& p) const {
    std::vector<T> out;
    Polynomial d = p;
    for (int k = 0; k <= p.degree(); ++k) {
      out.push_back(rem(d, h));
      d = d.derivative() * Rational(1, k + 1);
    }
    return out;
  }

  std::vector<Rational> components(const T& a) const {
    std::vector<Rational> c(static_cast<std::size_t>(h.degree()));
    for (int i = 0; i <= a.degree(); ++i) c[static_cast<std::size_t>(i)] = a.coeffs()[static_cast<std::size_t>(i)];
    return c;
  }
};

// ---------------------------------------------------------------------------
// Places
// ---------------------------------------------------------------------------

template <class F>
struct Laurent {
  int val = 0;
  std::vector<typename F::T> c;  // c[0] nonzero unless the function is zero
};

template <class F>
struct Place {
  using T = typename F::T;
  F f;
  bool infinite = false;

  // p at the place as t^offset * sum_k c_k t^k
  std::pair<int, std::vector<T>> expand(const Polynomial& p) const {
    if (!infinite) return {0, f.taylor(p)};
    std::vector<T> c;
    for (int k = p.degree(); k >= 0; --k) c.push_back(f.from(p.coeffs()[static_cast<std::size_t>(k)]));
    return {-p.degree(), c};
  }

  // Strips leading zeros; false for the zero polynomial.
  bool normalize(int& off, std::vector<T>& c) const {
    std::size_t z = 0;
    while (z < c.size() && f.is_zero(c[z])) ++z;
    if (z == c.size()) return false;
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(z));
    off += static_cast<int>(z);
    return true;
  }

  Laurent<F> laurent(const RationalFunction& q, int n) const {
    Laurent<F> out;
    if (q.is_zero()) return out;
    auto [on, nc] = expand(q.num());
    auto [od, dc] = expand(q.den());
    normalize(on, nc);
    normalize(od, dc);
    out.val = on - od;
    T d0 = f.inv(dc[0]);
    out.c.resize(static_cast<std::size_t>(n), f.zero());
    for (int k = 0; k < n; ++k) {
      T acc = k < static_cast<int>(nc.size()) ? nc[static_cast<std::size_t>(k)] : f.zero();
      for (int j = 1; j <= k && j < static_cast<int>(dc.size()); ++j)
        if (!f.raw_zero(dc[static_cast<std::size_t>(j)]))
          acc = f.sub(acc, f.mul(dc[static_cast<std::size_t>(j)], out.c[static_cast<std::size_t>(k - j)]));
      out.c[static_cast<std::size_t>(k)] = f.mul(acc, d0);
    }
    return out;
  }

  // D^i t^mu = dfactor(mu, i) t^(mu + sigma*i)
  int sigma() const { return infinite ? 1 : -1; }
  Rational dfactor(const Rational& mu, int i) const {
    Rational r = 1;
    for (int k = 0; k < i; ++k) r *= infinite ? Rational(-(mu + k)) : Rational(mu - k);
    return r;
  }
};

// ---------------------------------------------------------------------------
// Theta form: t^m L = sum_n t^n Q_n(theta), theta = t d/dt.
// ---------------------------------------------------------------------------

template <class F>
struct Theta {
  int r = 0;
  std::vector<std::vector<typename F::T>> q;  // q[n][k]: coefficient of theta^k in Q_n
};

// theta(theta-1)...(theta-i+1), or the same in -theta at infinity.
Polynomial falling(int i, bool negated) {
  Polynomial p(1);
  Polynomial th = negated ? Polynomial(std::vector<Rational>{0, -1}) : Polynomial::x();
  for (int k = 0; k < i; ++k) p = p * (th - Polynomial(Rational(k)));
  return p;
}

template <class F>
Theta<F> theta_form(const Place<F>& pl, const OrePoly& l) {
  using T = typename F::T;
  std::vector<IntPoly> ip = integer_form(l);
  Theta<F> th;
  th.r = l.order();
  // term i = sum_k e[i][k] t^(start[i] + k) B_i(theta)
  std::vector<std::vector<T>> e(ip.size());
  std::vector<int> start(ip.size(), INT_MAX);
  int lo = INT_MAX;
  for (std::size_t i = 0; i < ip.size(); ++i) {
    if (ip[i].is_zero()) continue;
    auto [off, c] = pl.expand(Polynomial::from_int(ip[i]));
    pl.normalize(off, c);
    start[i] = off + pl.sigma() * static_cast<int>(i);
    e[i] = std::move(c);
    lo = std::min(lo, start[i]);
  }
  int nmax = 0;
  for (std::size_t i = 0; i < ip.size(); ++i)
    if (start[i] != INT_MAX) nmax = std::max(nmax, start[i] - lo + static_cast<int>(e[i].size()) - 1);
  th.q.assign(static_cast<std::size_t>(nmax) + 1, std::vector<T>(ip.size(), pl.f.zero()));
  for (std::size_t i = 0; i < ip.size(); ++i) {
    if (start[i] == INT_MAX) continue;
    Polynomial b = falling(static_cast<int>(i), pl.infinite);
    for (std::size_t k = 0; k < e[i].size(); ++k) {
      if (pl.f.raw_zero(e[i][k])) continue;
      auto& qn = th.q[static_cast<std::size_t>(start[i] - lo) + k];
      for (int j = 0; j <= b.degree(); ++j)
        qn[static_cast<std::size_t>(j)] = pl.f.add(qn[static_cast<std::size_t>(j)], pl.f.scale(e[i][k], b.coeffs()[static_cast<std::size_t>(j)]));
    }
  }
  return th;
}

template <class F>
typename F::T eval_q(const F& f, const std::vector<typename F::T>& q, const Rational& mu) {
  typename F::T acc = f.zero();
  for (std::size_t k = q.size(); k-- > 0;) acc = f.add(f.scale(acc, mu), q[k]);
  return acc;
}

// Coefficients c_0..c_{K-1} (c_0 = 1) of the solution t^lam sum c_k t^k;
// nullopt when a logarithm is forced.
template <class F>
std::optional<std::vector<typename F::T>> frobenius(const F& f, const Theta<F>& th, const Rational& lam, int K) {
  using T = typename F::T;
  std::vector<T> c(static_cast<std::size_t>(std::max(K, 1)), f.zero());
  c[0] = f.one();
  int nq = static_cast<int>(th.q.size());
  for (int N = 1; N < K; ++N) {
    T rhs = f.zero();
    for (int n = 1; n <= N && n < nq; ++n) {
      const T& prev = c[static_cast<std::size_t>(N - n)];
      if (f.raw_zero(prev)) continue;
      rhs = f.sub(rhs, f.mul(eval_q(f, th.q[static_cast<std::size_t>(n)], lam + (N - n)), prev));
    }
    T d = eval_q(f, th.q[0], lam + N);
    if (f.is_zero(d)) {
      if (!f.is_zero(rhs)) return std::nullopt;
      continue;
    }
    c[static_cast<std::size_t>(N)] = f.mul(rhs, f.inv(d));
  }
  return c;
}

struct Exponents {
  bool regular = true;
  bool irrational = false;
  std::vector<Rational> roots;  // ascending, with multiplicity
};

Exponents exponents(const RatField&, const Theta<RatField>& th) {
  Exponents ex;
  Polynomial q0(th.q[0]);
  if (q0.degree() < th.r) ex.regular = false;
  if (q0.degree() < 1) return ex;
  RationalRoots rr = rational_roots(q0);
  ex.irrational = rr.has_irrational_factor;
  ex.roots = rr.roots;
  return ex;
}

// Newton interpolation over Q.
Polynomial interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
  std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
  Polynomial p;
  for (std::size_t i = n; i-- > 0;) p = p * (Polynomial::x() - Polynomial(xs[i])) + Polynomial(ys[i]);
  return p;
}

// Product over the roots of h of Q_0 at that root, up to a constant.
Polynomial norm_of(const ModField& f, const std::vector<Polynomial>& q0) {
  int deg = static_cast<int>(q0.size() - 1) * f.h.degree();
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= deg; ++k) {
    Polynomial v = eval_q(f, q0, Rational(k));
    xs.emplace_back(k);
    ys.push_back(v.is_zero() ? Rational(0) : resultant(f.h, v));
  }
  return interpolate(xs, ys);
}

Exponents exponents(const ModField& f, const Theta<ModField>& th) {
  Exponents ex;
  const std::vector<Polynomial>& q0 = th.q[0];
  if (f.is_zero(q0[static_cast<std::size_t>(th.r)])) ex.regular = false;
  Polynomial nrm = norm_of(f, q0);
  if (nrm.degree() < 1) return ex;
  RationalRoots rr = rational_roots(nrm);
  ex.irrational = rr.has_irrational_factor;
  std::vector<Rational> distinct = rr.roots;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (const Rational& rho : distinct) {
    std::vector<Polynomial> d = q0;
    while (!d.empty() && f.is_zero(eval_q(f, d, rho))) {
      ex.roots.push_back(rho);
      // d/dtheta
      std::vector<Polynomial> dd;
      for (std::size_t k = 1; k < d.size(); ++k) dd.push_back(d[k] * Rational(static_cast<long>(k)));
      d = std::move(dd);
    }
  }
  return ex;
}

template <class F>
PointKind classify_theta(const F& f, const Theta<F>& th, const Exponents& ex) {
  if (!ex.regular) return PointKind::irregular;
  if (ex.irrational) return PointKind::irrational_exponent;
  const auto& rs = ex.roots;
  for (std::size_t i = 1; i < rs.size(); ++i)
    if (rs[i] == rs[i - 1]) return PointKind::logarithmic;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    int reach = 0;
    for (std::size_t j = i + 1; j < rs.size(); ++j) {
      Rational d = rs[j] - rs[i];
      if (d.get_den() == 1) reach = std::max(reach, static_cast<int>(d.get_num().get_si()));
    }
    if (reach > 0 && !frobenius(f, th, rs[i], reach + 1)) return PointKind::logarithmic;
  }
  bool ordinary = static_cast<int>(rs.size()) == th.r;
  for (std::size_t i = 0; ordinary && i < rs.size(); ++i) ordinary = rs[i] == static_cast<long>(i);
  return ordinary ? PointKind::ordinary : PointKind::puiseux_regular;
}

template <class F>
struct Ser {
  Rational lam;
  std::vector<typename F::T> c;
};

template <class F>
int min_shift(const Place<F>& pl, const OrePoly& p) {
  int lo = INT_MAX;
  for (int i = 0; i <= p.order(); ++i) {
    const RationalFunction& a = p.coeffs()[static_cast<std::size_t>(i)];
    if (a.is_zero()) continue;
    lo = std::min(lo, pl.laurent(a, 1).val + pl.sigma() * i);
  }
  return lo;
}

template <class F>
Ser<F> apply_ser(const Place<F>& pl, const OrePoly& p, const Ser<F>& s) {
  using T = typename F::T;
  const F& f = pl.f;
  int K = static_cast<int>(s.c.size());
  std::vector<Laurent<F>> lau(static_cast<std::size_t>(p.order() + 1));
  int lo = INT_MAX;
  for (int i = 0; i <= p.order(); ++i) {
    const RationalFunction& a = p.coeffs()[static_cast<std::size_t>(i)];
    if (a.is_zero()) continue;
    lau[static_cast<std::size_t>(i)] = pl.laurent(a, K);
    lo = std::min(lo, lau[static_cast<std::size_t>(i)].val + pl.sigma() * i);
  }
  Ser<F> out;
  out.c.assign(static_cast<std::size_t>(K), f.zero());
  if (lo == INT_MAX) {
    out.lam = s.lam;
    return out;
  }
  out.lam = s.lam + lo;
  for (int i = 0; i <= p.order(); ++i) {
    const Laurent<F>& la = lau[static_cast<std::size_t>(i)];
    if (la.c.empty()) continue;
    int off = la.val + pl.sigma() * i - lo;
    for (int k = 0; k + off < K; ++k) {
      const T& ck = s.c[static_cast<std::size_t>(k)];
      if (f.raw_zero(ck)) continue;
      Rational fac = pl.dfactor(s.lam + k, i);
      if (fac == 0) continue;
      T g = f.scale(ck, fac);
      for (int j = 0; off + k + j < K; ++j) {
        const T& lj = la.c[static_cast<std::size_t>(j)];
        if (f.raw_zero(lj)) continue;
        T& slot = out.c[static_cast<std::size_t>(off + k + j)];
        slot = f.add(slot, f.mul(lj, g));
      }
    }
  }
  return out;
}

template <class F>
struct Local {
  Place<F> pl;
  Theta<F> th;
  Exponents ex;
  PointKind kind;
};

template <class F>
Local<F> analyze(const Place<F>& pl, const OrePoly& l) {
  Local<F> a{pl, theta_form(pl, l), {}, PointKind::ordinary};
  a.ex = exponents(pl.f, a.th);
  a.kind = classify_theta(pl.f, a.th, a.ex);
  return a;
}

int window(const Rational& mu, int guard) {
  // K with mu + K > guard
  Integer k = floor(-mu) + 1 + guard;
  return std::max(1, static_cast<int>(k.get_si()));
}

template <class F>
ImageValuations image_vals(const Local<F>& a, const OrePoly& p, int guard) {
  ImageValuations out;
  if (p.is_zero()) return out;
  int lo = min_shift(a.pl, p);
  for (std::size_t b = 0; b < a.ex.roots.size(); ++b) {
    const Rational& lam = a.ex.roots[b];
    int K = window(lam + lo, guard);
    Ser<F> f{lam, *frobenius(a.pl.f, a.th, lam, K)};
    Ser<F> g = apply_ser(a.pl, p, f);
    for (std::size_t k = 0; k < g.c.size(); ++k) {
      if (a.pl.f.raw_zero(g.c[k])) continue;
      Rational v = g.lam + static_cast<long>(k);
      if (v < 0) out.integral = false;
      if (!out.worst || v < *out.worst) {
        out.worst = v;
        out.witness = static_cast<int>(b);
      }
      break;
    }
  }
  return out;
}

template <class F>
std::vector<QVector> rows_at(const Local<F>& a, const std::vector<OrePoly>& ops) {
  std::vector<QVector> rows;
  std::vector<int> lo(ops.size(), INT_MAX);
  for (std::size_t j = 0; j < ops.size(); ++j)
    if (!ops[j].is_zero()) lo[j] = min_shift(a.pl, ops[j]);
  for (const Rational& lam : a.ex.roots) {
    int K = 1;
    for (int s : lo)
      if (s != INT_MAX) K = std::max(K, window(lam + s, 0));
    Ser<F> f{lam, *frobenius(a.pl.f, a.th, lam, K)};
    std::vector<Ser<F>> img;
    int first = INT_MAX;  // lowest exponent offset relative to lam
    for (std::size_t j = 0; j < ops.size(); ++j) {
      img.push_back(lo[j] == INT_MAX ? Ser<F>{} : apply_ser(a.pl, ops[j], f));
      if (lo[j] != INT_MAX) first = std::min(first, lo[j]);
    }
    if (first == INT_MAX) continue;
    // exponents lam + n < 0
    for (int n = first; lam + n < 0; ++n) {
      std::vector<std::vector<Rational>> comp(ops.size());
      std::size_t width = 0;
      for (std::size_t j = 0; j < ops.size(); ++j) {
        if (lo[j] == INT_MAX || n < lo[j] || n - lo[j] >= static_cast<int>(img[j].c.size())) continue;
        const auto& v = img[j].c[static_cast<std::size_t>(n - lo[j])];
        if (a.pl.f.raw_zero(v)) continue;
        comp[j] = a.pl.f.components(v);
        width = comp[j].size();
      }
      for (std::size_t e = 0; e < width; ++e) {
        QVector row(ops.size());
        bool nz = false;
        for (std::size_t j = 0; j < ops.size(); ++j)
          if (!comp[j].empty() && comp[j][e] != 0) {
            row[j] = comp[j][e];
            nz = true;
          }
        if (nz) rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

Place<RatField> rational_place(const Point& p) {
  if (p.is_algebraic()) throw AlgebraError("expected a rational point or infinity");
  Place<RatField> pl;
  pl.infinite = p.is_infinity();
  if (p.is_finite()) pl.f.xi = p.xi;
  return pl;
}

PointClassification to_classification(const Point& p, const Exponents& ex, PointKind k) {
  return PointClassification{p, k, ex.roots};
}

// Runs fn on Q[x]/(g) for every part g of the split locus h.
template <class Fn>
auto over_locus(const Polynomial& h, Fn fn) {
  using R = decltype(fn(std::declval<const Place<ModField>&>()));
  std::vector<std::pair<Polynomial, R>> out;
  std::vector<Polynomial> todo{h.monic()};
  while (!todo.empty()) {
    Polynomial g = todo.back();
    todo.pop_back();
    Place<ModField> pl;
    pl.f.h = g;
    try {
      out.emplace_back(g, fn(pl));
    } catch (const ZeroDivisor& z) {
      todo.push_back(exact_quotient(g, z.factor).monic());
      todo.push_back(z.factor.monic());
    }
  }
  return out;
}

}  // namespace

Polynomial indicial_polynomial(const OrePoly& l, const Point& p) {
  if (l.is_zero()) throw OreError("indicial polynomial of the zero operator");
  Theta<RatField> th = theta_form(rational_place(p), l);
  return Polynomial(th.q[0]).monic();
}

Polynomial indicial_norm(const OrePoly& l, const Polynomial& locus) {
  if (l.is_zero()) throw OreError("indicial polynomial of the zero operator");
  auto parts = over_locus(locus, [&](const Place<ModField>& pl) { return norm_of(pl.f, theta_form(pl, l).q[0]); });
  Polynomial out(1);
  for (const auto& [g, n] : parts) out = out * n;
  return out.is_zero() ? out : out.monic();
}

PointClassification classify_point(const OrePoly& l, const Point& p) {
  if (l.is_zero()) throw OreError("classification of the zero operator");
  if (p.is_algebraic()) {
    std::vector<PointClassification> parts = classify_locus(l, p.locus);
    for (const auto& c : parts)
      if (!is_puiseux(c.kind)) return c;
    if (parts.size() == 1) return parts[0];
    // Puiseux everywhere; report the part with the least exponent
    return *std::min_element(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
      return a.exponents.front() < b.exponents.front();
    });
  }
  Local<RatField> a = analyze(rational_place(p), l);
  return to_classification(p, a.ex, a.kind);
}

std::vector<PointClassification> classify_locus(const OrePoly& l, const Polynomial& locus) {
  auto parts = over_locus(locus, [&](const Place<ModField>& pl) {
    Local<ModField> a = analyze(pl, l);
    return std::make_pair(a.ex, a.kind);
  });
  std::vector<PointClassification> out;
  for (const auto& [g, r] : parts) out.push_back(to_classification(Point::roots_of(g), r.first, r.second));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.point < b.point; });
  return out;
}

LocalBasis local_basis(const OrePoly& l, const Point& p, int nterms) {
  if (nterms < 1) throw AlgebraError("local_basis needs nterms >= 1");
  Local<RatField> a = analyze(rational_place(p), l);
  if (!is_puiseux(a.kind)) throw NotPuiseux(to_classification(p, a.ex, a.kind));
  LocalBasis b;
  b.point = p;
  for (const Rational& lam : a.ex.roots) {
    b.solutions.push_back(PuiseuxSeries{p, lam, *frobenius(a.pl.f, a.th, lam, nterms)});
    b.exponents.push_back(lam);
  }
  return b;
}

LocalBasis ordinary_series_basis(const OrePoly& l, const Rational& xi, int nterms) {
  Point p = Point::at(xi);
  Local<RatField> a = analyze(rational_place(p), l);
  if (a.kind != PointKind::ordinary) throw AlgebraError("ordinary_series_basis: " + to_string(p) + " is singular");
  LocalBasis b;
  b.point = p;
  for (int i = 0; i < l.order(); ++i) {
    std::vector<Rational> c(static_cast<std::size_t>(i), Rational(0));
    std::vector<Rational> tail = *frobenius(a.pl.f, a.th, Rational(i), std::max(1, nterms - i));
    c.insert(c.end(), tail.begin(), tail.end());
    b.solutions.push_back(PuiseuxSeries{p, 0, std::move(c)});
    b.exponents.emplace_back(i);
  }
  return b;
}

PuiseuxSeries apply_to_series(const OrePoly& p, const PuiseuxSeries& f) {
  Place<RatField> pl = rational_place(f.point);
  Ser<RatField> s{f.exponent, f.coeffs};
  Ser<RatField> g = apply_ser(pl, p, s);
  return PuiseuxSeries{f.point, g.lam, std::move(g.c)};
}

ImageValuations image_valuations(const OrePoly& p, const OrePoly& l, const Point& pt, int guard) {
  Local<RatField> a = analyze(rational_place(pt), l);
  if (!is_puiseux(a.kind)) throw NotPuiseux(to_classification(pt, a.ex, a.kind));
  ImageValuations v = image_vals(a, p, guard);
  v.point = pt;
  return v;
}

std::vector<ImageValuations> image_valuations_locus(const OrePoly& p, const OrePoly& l, const Polynomial& locus,
                                                    int guard) {
  auto parts = over_locus(locus, [&](const Place<ModField>& pl) {
    Local<ModField> a = analyze(pl, l);
    if (!is_puiseux(a.kind)) throw NotPuiseux(PointClassification{Point::roots_of(pl.f.h), a.kind, a.ex.roots});
    return image_vals(a, p, guard);
  });
  std::vector<ImageValuations> out;
  for (auto& [g, v] : parts) {
    v.point = Point::roots_of(g);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.point < b.point; });
  return out;
}

std::vector<QVector> negative_part_rows(const std::vector<OrePoly>& ops, const OrePoly& l, const Point& pt, int guard) {
  (void)guard;
  if (pt.is_algebraic()) {
    auto parts = over_locus(pt.locus, [&](const Place<ModField>& pl) {
      Local<ModField> a = analyze(pl, l);
      if (!is_puiseux(a.kind)) throw NotPuiseux(PointClassification{Point::roots_of(pl.f.h), a.kind, a.ex.roots});
      return rows_at(a, ops);
    });
    std::vector<QVector> rows;
    for (auto& [g, r] : parts) rows.insert(rows.end(), r.begin(), r.end());
    return rows;
  }
  Local<RatField> a = analyze(rational_place(pt), l);
  if (!is_puiseux(a.kind)) throw NotPuiseux(to_classification(pt, a.ex, a.kind));
  return rows_at(a, ops);
}

}  // namespace dct
