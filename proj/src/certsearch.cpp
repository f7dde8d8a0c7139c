#include "dct/certsearch.hpp"

#include <algorithm>

namespace dct {

namespace {

struct SingularData {
  std::vector<PointClassification> finite;
  Polynomial locus = Polynomial(1);
  std::vector<PointClassification> locus_parts;
  PointClassification inf;
};

SingularData singular_data(const OrePoly& l) {
  SingularSupport ss = singular_support(l);
  SingularData d;
  for (const Rational& xi : ss.finite_points) d.finite.push_back(classify_point(l, Point::at(xi)));
  d.locus = ss.irrational_locus;
  if (d.locus.degree() > 0) d.locus_parts = classify_locus(l, d.locus);
  d.inf = classify_point(l, Point::infinity());
  return d;
}

void require_puiseux(const PointClassification& c) {
  if (!is_puiseux(c.kind)) throw NotPuiseux(c);
}

// max(0, ceil(-e)) for the least exponent e.
long pole_order(const PointClassification& c) {
  require_puiseux(c);
  Integer v = ceil(Rational(-c.exponents.front()));
  return v > 0 ? v.get_si() : 0;
}

long locus_pole_order(const SingularData& d) {
  long k = 0;
  for (const PointClassification& c : d.locus_parts) k = std::max(k, pole_order(c));
  return k;
}

Polynomial linear(const Rational& xi) { return Polynomial(std::vector<Rational>{-xi, 1}); }

RationalFunction power_of(const Polynomial& p, long k) {
  if (k >= 0) return RationalFunction(p.pow(static_cast<unsigned>(k)));
  return RationalFunction(Polynomial(1), p.pow(static_cast<unsigned>(-k)));
}

OrePoly monomial_op(const RationalFunction& f, int j) {
  std::vector<RationalFunction> c(static_cast<std::size_t>(j + 1));
  c[static_cast<std::size_t>(j)] = f;
  return OrePoly(std::move(c));
}

// Coefficient vectors of class representatives over a common denominator.
std::vector<QVector> flatten(const std::vector<OrePoly>& reps, int r) {
  Polynomial den(1);
  for (const OrePoly& p : reps)
    for (const RationalFunction& c : p.coeffs()) den = lcm(den, c.den());
  std::vector<std::vector<Polynomial>> nums;
  int width = 1;
  for (const OrePoly& p : reps) {
    std::vector<Polynomial> row;
    for (int j = 0; j < r; ++j) {
      RationalFunction c = p.coeff(j);
      row.push_back(c.num() * exact_quotient(den, c.den()));
      width = std::max(width, row.back().degree() + 1);
    }
    nums.push_back(std::move(row));
  }
  std::vector<QVector> out;
  for (const auto& row : nums) {
    QVector v(static_cast<std::size_t>(r * width), Rational(0));
    for (int j = 0; j < r; ++j)
      for (int i = 0; i <= row[static_cast<std::size_t>(j)].degree(); ++i)
        v[static_cast<std::size_t>(j * width + i)] = row[static_cast<std::size_t>(j)].coeff(i);
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t rank_of(const std::vector<QVector>& rows) {
  if (rows.empty()) return 0;
  QMatrix m(0, rows.front().size());
  for (const QVector& v : rows) m.append_row(v);
  return rank(m);
}

// Scales so that the top coefficient has a monic numerator.
OrePoly normalize_rep(const OrePoly& p) {
  if (p.is_zero()) return p;
  Rational lc = p.coeffs().back().num().leading();
  return RationalFunction(Rational(1 / lc)) * p;
}

std::vector<ModClass> ansatz_at(const OrePoly& l, const AnsatzConfig& b, const Polynomial& u, const SingularData& d) {
  int r = l.order();
  Polynomial den(1);
  for (const auto& [xi, n] : b.denom_bounds) den = den * linear(xi).pow(static_cast<unsigned>(n));
  if (d.locus.degree() > 0) den = den * d.locus.pow(static_cast<unsigned>(b.locus_bound.value_or(0)));
  int n = den.degree();
  RationalFunction base(u, den);
  std::vector<OrePoly> ops;
  for (int j = 0; j < r; ++j)
    for (int i = 0; i <= n; ++i) ops.push_back(monomial_op(base * RationalFunction(Polynomial::monomial(i)), j));

  QMatrix m(0, ops.size());
  auto add_rows = [&](const Point& pt) {
    for (const QVector& row : negative_part_rows(ops, l, pt, b.guard)) m.append_row(row);
  };
  for (const PointClassification& c : d.finite) add_rows(c.point);
  if (d.locus.degree() > 0) add_rows(Point::roots_of(d.locus));
  add_rows(Point::infinity());

  std::vector<OrePoly> candidates;
  for (const QVector& v : nullspace(m)) {
    OrePoly p;
    for (std::size_t k = 0; k < ops.size(); ++k)
      if (v[k] != 0) p = p + RationalFunction(v[k]) * ops[k];
    candidates.push_back(p);
  }
  if (candidates.empty()) return {};

  // quotient by the constants
  std::vector<OrePoly> reps;
  for (const auto& [p, q] : constant_space(l).basis) reps.push_back(reduce(p, l).rep);
  std::size_t nconst = reps.size();
  reps.insert(reps.end(), candidates.begin(), candidates.end());
  std::vector<QVector> vecs = flatten(reps, r);
  std::vector<QVector> kept(vecs.begin(), vecs.begin() + static_cast<long>(nconst));
  std::size_t rk = rank_of(kept);
  std::vector<ModClass> out;
  for (std::size_t k = nconst; k < reps.size(); ++k) {
    kept.push_back(vecs[k]);
    std::size_t rk2 = rank_of(kept);
    if (rk2 == rk) {
      kept.pop_back();
      continue;
    }
    rk = rk2;
    ModClass c{l, normalize_rep(reps[k])};
    if (is_pseudoconstant(c, b.guard)) out.push_back(std::move(c));
  }
  return out;
}

Certificate pseudoconstant_certificate(const OrePoly& l, int s, const OrePoly& p) {
  Certificate c;
  c.kind = s == 1 ? Certificate::Kind::pseudoconstant : Certificate::Kind::sympow_pseudoconstant;
  c.op = l;
  c.s = s;
  c.p = p;
  c.exponents = exponent_table(l);
  return c;
}

std::optional<Certificate> monomial_step(const OrePoly& l, const OrePoly& ls, int s, int guard, std::size_t* count) {
  MonomialPolytope poly = monomial_polytope(l, ls);
  if (count) *count = poly.integer_points.size();
  for (const std::vector<long>& a : poly.integer_points) {
    RationalFunction f(1);
    for (std::size_t i = 0; i < a.size(); ++i) f = f * power_of(linear(poly.points[i]), a[i]);
    if (is_pseudoconstant(reduce(OrePoly::scalar(f), ls), guard)) return pseudoconstant_certificate(l, s, OrePoly::scalar(f));
  }
  return std::nullopt;
}

OrePoly power_of_operator(const OrePoly& l, int s) { return s == 1 ? l : symmetric_power(l, s); }

}  // namespace

Polynomial clearing_factor(const OrePoly& l) {
  SingularData d = singular_data(l);
  Polynomial u(1);
  for (const PointClassification& c : d.finite) u = u * linear(c.point.xi).pow(static_cast<unsigned>(pole_order(c)));
  if (d.locus.degree() > 0) u = u * d.locus.pow(static_cast<unsigned>(locus_pole_order(d)));
  return u;
}

AnsatzConfig default_ansatz_config(const OrePoly& l) {
  SingularData d = singular_data(l);
  int r = l.order();
  AnsatzConfig cfg;
  for (const PointClassification& c : d.finite) cfg.denom_bounds[c.point.xi] = r * static_cast<int>(1 + pole_order(c));
  if (d.locus.degree() > 0) cfg.locus_bound = r * static_cast<int>(1 + locus_pole_order(d));
  return cfg;
}

AnsatzResult ansatz_search(const OrePoly& l, const AnsatzConfig& cfg) {
  if (l.order() < 1) throw OreError("ansatz search needs an operator of positive order");
  SingularData d = singular_data(l);
  require_puiseux(d.inf);
  Polynomial u = clearing_factor(l);
  AnsatzConfig b = default_ansatz_config(l);
  for (const auto& [xi, n] : cfg.denom_bounds)
    if (b.denom_bounds.count(xi)) b.denom_bounds[xi] = n;
  if (cfg.locus_bound && b.locus_bound) b.locus_bound = cfg.locus_bound;
  if (cfg.uniform_bound) {
    for (auto& [xi, n] : b.denom_bounds) n = *cfg.uniform_bound;
    if (b.locus_bound) b.locus_bound = cfg.uniform_bound;
  }
  b.guard = cfg.guard;
  b.max_escalations = cfg.max_escalations;
  AnsatzResult res;
  for (int e = 0;; ++e) {
    res.classes = ansatz_at(l, b, u, d);
    res.bounds = b;
    res.escalations = e;
    if (!res.classes.empty() || e >= cfg.max_escalations) return res;
    for (auto& [xi, n] : b.denom_bounds) n *= 2;
    if (b.locus_bound) *b.locus_bound *= 2;
  }
}

std::string to_string(Certificate::Kind k) {
  switch (k) {
    case Certificate::Kind::pseudoconstant:
      return "pseudoconstant";
    case Certificate::Kind::sympow_pseudoconstant:
      return "sympow_pseudoconstant";
    case Certificate::Kind::singular_structure:
      return "singular_structure";
  }
  return "";
}

Certificate::Kind parse_certificate_kind(const std::string& s) {
  for (auto k : {Certificate::Kind::pseudoconstant, Certificate::Kind::sympow_pseudoconstant,
                 Certificate::Kind::singular_structure})
    if (to_string(k) == s) return k;
  throw CertificateError("unknown certificate kind '" + s + "'");
}

std::vector<std::pair<Point, std::vector<Rational>>> exponent_table(const OrePoly& l) {
  SingularData d = singular_data(l);
  std::vector<std::pair<Point, std::vector<Rational>>> out;
  for (const PointClassification& c : d.finite) out.emplace_back(c.point, c.exponents);
  for (const PointClassification& c : d.locus_parts) out.emplace_back(c.point, c.exponents);
  out.emplace_back(d.inf.point, d.inf.exponents);
  return out;
}

MonomialPolytope monomial_polytope(const OrePoly& l, const OrePoly& ls) {
  MonomialPolytope poly;
  poly.points = singular_support(l).finite_points;
  std::vector<long> lo;
  for (const Rational& xi : poly.points) {
    PointClassification c = classify_point(ls, Point::at(xi));
    require_puiseux(c);
    poly.min_exponent.push_back(c.exponents.front());
    lo.push_back(ceil(Rational(-c.exponents.front())).get_si());
  }
  PointClassification inf = classify_point(ls, Point::infinity());
  require_puiseux(inf);
  poly.min_exponent_infinity = inf.exponents.front();
  long cap = floor(poly.min_exponent_infinity).get_si();  // sum of a_i
  long lo_sum = 0;
  for (long v : lo) lo_sum += v;
  if (lo_sum > cap) return poly;
  std::vector<long> a(lo.size());
  // a_i runs up to cap minus the lower bounds of the others
  auto rec = [&](auto&& self, std::size_t i, long used, long rest_lo) -> void {
    if (i == a.size()) {
      poly.integer_points.push_back(a);
      return;
    }
    long rest = rest_lo - lo[i];
    for (long v = lo[i]; used + v + rest <= cap; ++v) {
      a[i] = v;
      self(self, i + 1, used + v, rest);
    }
  };
  rec(rec, 0, 0, lo_sum);
  return poly;
}

MonomialSearch monomial_search(const OrePoly& l, int s_max, int guard) {
  MonomialSearch out;
  for (int s = 1; s <= s_max; ++s) {
    std::size_t count = 0;
    std::optional<Certificate> c = monomial_step(l, power_of_operator(l, s), s, guard, &count);
    out.polytope_counts.emplace_back(s, count);
    if (c) {
      out.certificate = std::move(c);
      break;
    }
  }
  return out;
}

std::optional<Certificate> sympow_pseudoconstant_search(const OrePoly& l, int s_max, const AnsatzConfig& cfg) {
  for (int s = 1; s <= s_max; ++s) {
    OrePoly ls = power_of_operator(l, s);
    if (auto c = monomial_step(l, ls, s, cfg.guard, nullptr)) return c;
    AnsatzConfig local = cfg;
    if (s > 1) {  // per-point bounds of L do not transfer to L^(s)
      local.denom_bounds.clear();
      local.locus_bound.reset();
    }
    AnsatzResult r = ansatz_search(ls, local);
    if (!r.classes.empty()) return pseudoconstant_certificate(l, s, r.classes.front().rep);
  }
  return std::nullopt;
}

std::optional<Certificate> singularity_certificate(const OrePoly& l) {
  SingularSupport ss = singular_support(l);
  std::vector<PointClassification> all;
  for (const Rational& xi : ss.finite_points) all.push_back(classify_point(l, Point::at(xi)));
  if (ss.irrational_locus.degree() > 0)
    for (PointClassification& c : classify_locus(l, ss.irrational_locus)) all.push_back(std::move(c));
  all.push_back(classify_point(l, Point::infinity()));
  for (const PointClassification& c : all) {
    if (is_puiseux(c.kind)) continue;
    Certificate cert;
    cert.kind = Certificate::Kind::singular_structure;
    cert.op = l;
    cert.point = c.point;
    cert.classification = c.kind;
    cert.exponents = exponent_table(l);
    return cert;
  }
  return std::nullopt;
}

std::string to_string(GrowthProbe::Kind k) {
  switch (k) {
    case GrowthProbe::Kind::consistent_with_linear:
      return "consistent_with_linear";
    case GrowthProbe::Kind::superlinear:
      return "superlinear";
    case GrowthProbe::Kind::inconclusive:
      return "inconclusive";
  }
  return "";
}

GrowthProbe growth_probe(const OrePoly& l, int s_max, bool adjoin_polynomials) {
  if (s_max < 2) throw OreError("growth probe needs s_max >= 2");
  GrowthProbe g;
  OrePoly m = l;
  if (adjoin_polynomials && !(apply(l, RationalFunction(1)).is_zero() && apply(l, RationalFunction(Polynomial::x())).is_zero())) {
    m = lclm(l, OrePoly::D(2));
    g.adjoined = true;
  }
  for (int s = 1; s <= s_max; ++s) g.orders.emplace_back(s, symmetric_power_order(m, s));
  std::vector<int> second;
  for (std::size_t i = 2; i < g.orders.size(); ++i)
    second.push_back(g.orders[i].second - 2 * g.orders[i - 1].second + g.orders[i - 2].second);
  // the last three orders in arithmetic progression, or the last two second
  // differences positive
  if (!second.empty() && second.back() == 0)
    g.classification = GrowthProbe::Kind::consistent_with_linear;
  else if (second.size() >= 2 && second.back() > 0 && second[second.size() - 2] > 0)
    g.classification = GrowthProbe::Kind::superlinear;
  return g;
}

bool verify_certificate(const Certificate& c, int guard) {
  if (c.op.order() < 1) throw CertificateError("certificate operator must have positive order");
  if (c.s < 1) throw CertificateError("certificate power must be positive");
  int g2 = 2 * guard;
  try {
    if (!c.exponents.empty() && c.exponents != exponent_table(c.op)) return false;
    if (c.kind == Certificate::Kind::singular_structure) {
      if (!c.point || !c.classification) throw CertificateError("singular_structure certificate without point");
      if (is_puiseux(*c.classification)) return false;
      PointClassification pc = c.point->is_algebraic() ? classify_locus(c.op, c.point->locus).front()
                                                       : classify_point(c.op, *c.point);
      if (c.point->is_algebraic() && classify_locus(c.op, c.point->locus).size() != 1) return false;
      return pc.kind == *c.classification;
    }
    if (!c.p) throw CertificateError("pseudoconstant certificate without P");
    if (c.kind == Certificate::Kind::pseudoconstant && c.s != 1) return false;
    OrePoly ls = power_of_operator(c.op, c.s);
    ModClass cls = reduce(*c.p, ls);
    if (cls.is_zero() || is_constant(cls)) return false;
    return complete_integrality(cls, g2).completely_integral;
  } catch (const NotPuiseux&) {
    return false;
  }
}

}  // namespace dct
