#include "dct/dependency.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>

#include "dct/modular.hpp"
#include "dct/ore.hpp"

namespace dct {

using modp::Field;
using modp::NPoly;
using modp::u64;

namespace {

// Images of the Krylov sequence W_k with v_k = W_k / P^k, modulo one prime.
class PrimeImage {
 public:
  PrimeImage(const DerivationSystem& sys, u64 p) : sys_(sys), F_{p} {
    P_ = modp::reduce(sys.P, F_);
    dP_ = modp::derivative(P_, F_);
    dmap_.resize(sys.dim);
    for (std::size_t m = 0; m < sys.dim; ++m)
      for (const auto& [j, c] : sys.dmap[m]) {
        NPoly cc = modp::reduce(c, F_);
        if (!cc.empty()) dmap_[m].emplace_back(j, std::move(cc));
      }
    std::vector<NPoly> w0(sys.dim);
    for (std::size_t m = 0; m < sys.dim; ++m) w0[m] = modp::reduce(sys.start[m], F_);
    W_.push_back(std::move(w0));
  }

  bool usable() const { return !P_.empty(); }
  const Field& field() const { return F_; }

  void extend(std::size_t count) {
    while (W_.size() < count) {
      const auto& w = W_.back();
      u64 k = W_.size() - 1;
      std::vector<NPoly> nw(sys_.dim);
      for (std::size_t m = 0; m < sys_.dim; ++m) {
        if (w[m].empty()) continue;
        NPoly t = modp::mul(P_, modp::derivative(w[m], F_), F_);
        if (k != 0) t = modp::sub(t, modp::scale(modp::mul(dP_, w[m], F_), k % F_.p, F_), F_);
        nw[m] = modp::add(nw[m], t, F_);
        for (const auto& [j, c] : dmap_[m]) nw[j] = modp::add(nw[j], modp::mul(w[m], c, F_), F_);
      }
      W_.push_back(std::move(nw));
    }
  }

  // v_0(a)..v_{count-1}(a), column-major by k; false at a pole.
  bool values(u64 a, std::size_t count, std::vector<std::vector<u64>>& out) {
    extend(count);
    u64 pa = modp::eval(P_, a, F_);
    if (pa == 0) return false;
    u64 ip = F_.inv(pa), s = 1;
    out.assign(count, std::vector<u64>(sys_.dim));
    for (std::size_t k = 0; k < count; ++k) {
      for (std::size_t m = 0; m < sys_.dim; ++m) out[k][m] = F_.mul(modp::eval(W_[k][m], a, F_), s);
      s = F_.mul(s, ip);
    }
    return true;
  }

 private:
  const DerivationSystem& sys_;
  Field F_;
  NPoly P_, dP_;
  std::vector<std::vector<std::pair<std::size_t, NPoly>>> dmap_;
  std::vector<std::vector<NPoly>> W_;
};

enum class PointStatus { solved, degenerate, overrank };

// Solve sum_{j<k} n_j v_j = -v_k at one point.
PointStatus solve_point(const std::vector<std::vector<u64>>& v, std::size_t k, std::vector<u64>& n,
                        const Field& F) {
  std::size_t N = v.empty() ? 0 : v[0].size();
  // rows = N equations, columns = k unknowns + rhs
  std::vector<std::vector<u64>> a(N, std::vector<u64>(k + 1));
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = v[j][i];
    a[i][k] = F.neg(v[k][i]);
  }
  std::size_t r = 0;
  std::vector<std::size_t> piv(k);
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = r;
    while (p < N && a[p][c] == 0) ++p;
    if (p == N) return PointStatus::degenerate;
    std::swap(a[p], a[r]);
    u64 iv = F.inv(a[r][c]);
    for (std::size_t j = c; j <= k; ++j) a[r][j] = F.mul(a[r][j], iv);
    for (std::size_t i = 0; i < N; ++i) {
      if (i == r || a[i][c] == 0) continue;
      u64 f = a[i][c];
      for (std::size_t j = c; j <= k; ++j) a[i][j] = F.sub(a[i][j], F.mul(f, a[r][j]));
    }
    piv[c] = r++;
  }
  for (std::size_t i = r; i < N; ++i)
    if (a[i][k] != 0) return PointStatus::overrank;
  n.assign(k, 0);
  for (std::size_t c = 0; c < k; ++c) n[c] = a[piv[c]][k];
  return PointStatus::solved;
}

struct ModRelation {
  std::vector<NPoly> num, den;  // den monic
  std::vector<std::pair<int, int>> pattern() const {
    std::vector<std::pair<int, int>> r;
    for (std::size_t j = 0; j < num.size(); ++j) r.emplace_back(modp::degree(num[j]), modp::degree(den[j]));
    return r;
  }
};

enum class PrimeStatus { ok, overrank, failed };

// Reconstruct the relation of order k modulo one prime.
PrimeStatus relation_mod_p(PrimeImage& img, std::size_t k, std::size_t& points_hint, ModRelation& out) {
  const Field& F = img.field();
  std::vector<u64> xs;
  std::vector<std::vector<u64>> ys(k);  // ys[j][i]
  u64 next = 1;
  std::size_t degenerate = 0;
  std::size_t T = std::max<std::size_t>(points_hint, 8);
  const std::size_t Tmax = 1 << 15;
  const std::size_t check = 2;
  std::vector<std::vector<u64>> vals;
  std::vector<u64> n;
  for (;;) {
    while (xs.size() < T + check) {
      u64 a = next++;
      if (!img.values(a, k + 1, vals)) continue;
      PointStatus st = solve_point(vals, k, n, F);
      if (st == PointStatus::overrank) return PrimeStatus::overrank;
      if (st == PointStatus::degenerate) {
        if (++degenerate > 64 + xs.size()) return PrimeStatus::failed;
        continue;
      }
      xs.push_back(a);
      for (std::size_t j = 0; j < k; ++j) ys[j].push_back(n[j]);
    }
    std::vector<u64> px(xs.begin(), xs.begin() + static_cast<long>(T));
    NPoly m{1};
    for (u64 a : px) m = modp::mul(m, NPoly{F.neg(a), 1}, F);
    ModRelation rel;
    rel.num.resize(k);
    rel.den.resize(k);
    bool good = true;
    for (std::size_t j = 0; j < k && good; ++j) {
      std::vector<u64> py(ys[j].begin(), ys[j].begin() + static_cast<long>(T));
      if (std::all_of(ys[j].begin(), ys[j].end(), [](u64 v) { return v == 0; })) {
        rel.den[j] = {1};
        continue;
      }
      NPoly f = modp::interpolate(px, py, F);
      if (!modp::ratrecon(f, m, rel.num[j], rel.den[j], F)) {
        good = false;
        break;
      }
      for (std::size_t i = T; i < xs.size(); ++i) {
        u64 dv = modp::eval(rel.den[j], xs[i], F);
        if (dv == 0 || F.mul(modp::eval(rel.num[j], xs[i], F), F.inv(dv)) != ys[j][i]) {
          good = false;
          break;
        }
      }
    }
    if (good) {
      out = std::move(rel);
      points_hint = T;
      return PrimeStatus::ok;
    }
    if (T >= Tmax) return PrimeStatus::failed;
    T *= 2;
  }
}

// Exact Krylov sequence over Z[x]: v_k = W_k / P^k.
class ExactSequence {
 public:
  explicit ExactSequence(const DerivationSystem& sys) : sys_(sys) {
    W_.push_back(sys.start);
    dP_ = sys.P.derivative();
  }
  const std::vector<IntPoly>& operator[](std::size_t k) {
    while (W_.size() <= k) {
      const auto& w = W_.back();
      Integer kk = static_cast<unsigned long>(W_.size() - 1);
      std::vector<IntPoly> nw(sys_.dim);
      for (std::size_t m = 0; m < sys_.dim; ++m) {
        if (w[m].is_zero()) continue;
        nw[m] += sys_.P * w[m].derivative();
        if (kk != 0) nw[m] -= (dP_ * w[m]) * kk;
        for (const auto& [j, c] : sys_.dmap[m]) nw[j] += w[m] * c;
      }
      W_.push_back(std::move(nw));
    }
    return W_[k];
  }

 private:
  const DerivationSystem& sys_;
  IntPoly dP_;
  std::vector<std::vector<IntPoly>> W_;
};

bool verify_relation(ExactSequence& seq, const DerivationSystem& sys, const std::vector<RationalFunction>& n) {
  std::size_t k = n.size() - 1;
  Polynomial lam(1);
  for (const auto& c : n) lam = lcm(lam, c.den());
  // A_j = n_j * lam * P^(k-j), cleared to integers with one common scale
  std::vector<Polynomial> A(k + 1);
  Polynomial Pq = Polynomial::from_int(sys.P);
  Polynomial pw(1);
  for (std::size_t jj = k + 1; jj-- > 0;) {
    if (!n[jj].is_zero()) A[jj] = n[jj].num() * exact_quotient(lam, n[jj].den()) * pw;
    if (jj > 0) pw = pw * Pq;
  }
  Integer den = 1;
  for (const auto& a : A)
    for (const auto& c : a.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<IntPoly> Ai(k + 1);
  for (std::size_t j = 0; j <= k; ++j) {
    Integer d;
    Ai[j] = A[j].clear_denominators(d);
    Integer f = den / d;
    Ai[j] *= f;
  }
  for (std::size_t m = 0; m < sys.dim; ++m) {
    IntPoly s;
    for (std::size_t j = 0; j <= k; ++j)
      if (!Ai[j].is_zero() && !seq[j][m].is_zero()) s += Ai[j] * seq[j][m];
    if (!s.is_zero()) return false;
  }
  return true;
}

}  // namespace

std::size_t krylov_rank(const DerivationSystem& sys, unsigned trials) {
  std::size_t best = 0;
  std::mt19937_64 rng(0x5eed);
  for (unsigned t = 0; t < trials; ++t) {
    PrimeImage img(sys, modp::prime(t));
    if (!img.usable()) continue;
    const Field& F = img.field();
    u64 a;
    std::vector<std::vector<u64>> vals;
    do {
      a = rng() % F.p;
    } while (!img.values(a, 1, vals));
    // incremental elimination
    std::vector<std::vector<u64>> basis;
    std::vector<std::size_t> pcol;
    std::size_t rank = 0;
    for (std::size_t k = 0; k <= sys.dim; ++k) {
      img.values(a, k + 1, vals);
      std::vector<u64> v = vals[k];
      for (std::size_t i = 0; i < basis.size(); ++i) {
        u64 f = v[pcol[i]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(f, basis[i][j]));
      }
      std::size_t c = 0;
      while (c < v.size() && v[c] == 0) ++c;
      if (c == v.size()) break;
      u64 iv = F.inv(v[c]);
      for (auto& x : v) x = F.mul(x, iv);
      basis.push_back(std::move(v));
      pcol.push_back(c);
      ++rank;
    }
    best = std::max(best, rank);
  }
  return best;
}

std::vector<RationalFunction> first_dependency(const DerivationSystem& sys) {
  if (sys.dim == 0) return {RationalFunction(1)};
  std::size_t k = krylov_rank(sys);
  ExactSequence exact(sys);
  const std::size_t max_primes = 400;
  for (;;) {
    if (k > sys.dim) throw OreError("dependency search exceeded the module dimension");
    std::optional<std::vector<std::pair<int, int>>> pattern;
    std::vector<std::vector<Integer>> acc;  // flattened coefficient residues
    Integer M = 1;
    std::size_t hint = 8;
    std::vector<RationalFunction> last;
    bool bump = false;
    for (std::size_t pi = 0; pi < max_primes; ++pi) {
      PrimeImage img(sys, modp::prime(pi));
      if (!img.usable()) continue;
      ModRelation rel;
      PrimeStatus st = relation_mod_p(img, k, hint, rel);
      if (st == PrimeStatus::overrank) {
        bump = true;
        break;
      }
      if (st == PrimeStatus::failed) continue;
      auto pat = rel.pattern();
      // flatten
      std::vector<u64> flat;
      for (std::size_t j = 0; j < k; ++j) {
        NPoly nn = rel.num[j], dd = rel.den[j];
        nn.resize(static_cast<std::size_t>(pat[j].first + 1), 0);
        flat.insert(flat.end(), nn.begin(), nn.end());
        flat.insert(flat.end(), dd.begin(), dd.end());
      }
      if (!pattern || pat != *pattern) {
        bool larger = !pattern;
        if (pattern) {
          long a = 0, b = 0;
          for (auto [x, y] : pat) a += x + y;
          for (auto [x, y] : *pattern) b += x + y;
          larger = a > b;
        }
        if (!larger) continue;
        pattern = pat;
        acc.assign(1, std::vector<Integer>(flat.size()));
        for (std::size_t i = 0; i < flat.size(); ++i) acc[0][i] = static_cast<unsigned long>(flat[i]);
        M = static_cast<unsigned long>(img.field().p);
        last.clear();
        continue;
      }
      for (std::size_t i = 0; i < flat.size(); ++i) crt_combine(acc[0][i], M, flat[i], img.field().p);
      M *= static_cast<unsigned long>(img.field().p);
      // rational reconstruction of every coefficient
      std::vector<Rational> q(flat.size());
      bool ok = true;
      for (std::size_t i = 0; i < flat.size() && ok; ++i) ok = rational_reconstruct(acc[0][i], M, q[i]);
      if (!ok) continue;
      std::vector<RationalFunction> cand;
      std::size_t pos = 0;
      for (std::size_t j = 0; j < k; ++j) {
        std::size_t ln = static_cast<std::size_t>(pattern->at(j).first + 1);
        std::size_t ld = static_cast<std::size_t>(pattern->at(j).second + 1);
        std::vector<Rational> nn(q.begin() + static_cast<long>(pos), q.begin() + static_cast<long>(pos + ln));
        pos += ln;
        std::vector<Rational> dd(q.begin() + static_cast<long>(pos), q.begin() + static_cast<long>(pos + ld));
        pos += ld;
        cand.push_back(RationalFunction(Polynomial(nn), Polynomial(dd)));
      }
      cand.push_back(RationalFunction(1));
      if (cand == last && verify_relation(exact, sys, cand)) return cand;
      last = std::move(cand);
    }
    if (!bump) throw OreError("dependency reconstruction did not converge");
    ++k;
  }
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

namespace {

void add_entry(std::vector<std::pair<std::size_t, IntPoly>>& row, std::size_t j, const IntPoly& c) {
  if (c.is_zero()) return;
  for (auto& [jj, cc] : row)
    if (jj == j) {
      cc += c;
      return;
    }
  row.emplace_back(j, c);
}

void compositions(int r, int s, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == r - 1) {
    cur.push_back(s);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = s; e >= 0; --e) {
    cur.push_back(e);
    compositions(r, s - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

DerivationSystem sympow_system(const std::vector<IntPoly>& p, int s) {
  int r = static_cast<int>(p.size()) - 1;
  if (r < 1 || s < 1) throw OreError("symmetric power needs order >= 1 and s >= 1");
  std::vector<std::vector<int>> mons;
  std::vector<int> cur;
  compositions(r, s, cur, mons);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;
  DerivationSystem sys;
  sys.dim = mons.size();
  sys.P = p[static_cast<std::size_t>(r)];
  sys.dmap.resize(sys.dim);
  sys.start.resize(sys.dim);
  for (std::size_t m = 0; m < mons.size(); ++m) {
    const auto& e = mons[m];
    for (int v = 0; v < r; ++v) {
      int ev = e[static_cast<std::size_t>(v)];
      if (ev == 0) continue;
      Integer coef = ev;
      auto t = e;
      --t[static_cast<std::size_t>(v)];
      if (v < r - 1) {
        ++t[static_cast<std::size_t>(v + 1)];
        add_entry(sys.dmap[m], index.at(t), sys.P * coef);
      } else {
        for (int i = 0; i < r; ++i) {
          if (p[static_cast<std::size_t>(i)].is_zero()) continue;
          auto u = t;
          ++u[static_cast<std::size_t>(i)];
          add_entry(sys.dmap[m], index.at(u), p[static_cast<std::size_t>(i)] * Integer(-coef));
        }
      }
    }
  }
  std::vector<int> first(static_cast<std::size_t>(r), 0);
  first[0] = s;
  sys.start[index.at(first)] = IntPoly::constant(1);
  return sys;
}

DerivationSystem product_system(const std::vector<IntPoly>& a, const std::vector<IntPoly>& b) {
  std::size_t ra = a.size() - 1, rb = b.size() - 1;
  if (ra < 1 || rb < 1) throw OreError("symmetric product needs positive orders");
  DerivationSystem sys;
  sys.dim = ra * rb;
  sys.P = a[ra] * b[rb];
  sys.dmap.resize(sys.dim);
  sys.start.resize(sys.dim);
  auto id = [rb](std::size_t i, std::size_t j) { return i * rb + j; };
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < rb; ++j) {
      auto& row = sys.dmap[id(i, j)];
      if (i + 1 < ra) {
        add_entry(row, id(i + 1, j), sys.P);
      } else {
        for (std::size_t l = 0; l < ra; ++l) add_entry(row, id(l, j), -(a[l] * b[rb]));
      }
      if (j + 1 < rb) {
        add_entry(row, id(i, j + 1), sys.P);
      } else {
        for (std::size_t l = 0; l < rb; ++l) add_entry(row, id(i, l), -(b[l] * a[ra]));
      }
    }
  sys.start[0] = IntPoly::constant(1);
  return sys;
}

DerivationSystem direct_sum_system(const std::vector<IntPoly>& a, const std::vector<IntPoly>& b) {
  std::size_t ra = a.size() - 1, rb = b.size() - 1;
  if (ra < 1 || rb < 1) throw OreError("lclm needs positive orders");
  DerivationSystem sys;
  sys.dim = ra + rb;
  sys.P = a[ra] * b[rb];
  sys.dmap.resize(sys.dim);
  sys.start.resize(sys.dim);
  for (std::size_t i = 0; i < ra; ++i) {
    if (i + 1 < ra)
      add_entry(sys.dmap[i], i + 1, sys.P);
    else
      for (std::size_t l = 0; l < ra; ++l) add_entry(sys.dmap[i], l, -(a[l] * b[rb]));
  }
  for (std::size_t i = 0; i < rb; ++i) {
    if (i + 1 < rb)
      add_entry(sys.dmap[ra + i], ra + i + 1, sys.P);
    else
      for (std::size_t l = 0; l < rb; ++l) add_entry(sys.dmap[ra + i], ra + l, -(b[l] * a[ra]));
  }
  sys.start[0] = IntPoly::constant(1);
  sys.start[ra] = IntPoly::constant(1);
  return sys;
}

}  // namespace dct
