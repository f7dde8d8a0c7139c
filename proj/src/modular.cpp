#include "dct/modular.hpp"

#include <algorithm>
#include <mutex>
#include <random>

namespace dct::modp {

u64 Field::pow(u64 a, u64 e) const {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 Field::inv(u64 a) const {
  // extended Euclid on signed 128-bit values
  __int128 t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw AlgebraError("modular inverse of zero");
  if (t < 0) t += p;
  return static_cast<u64>(t);
}

u64 Field::from(const Integer& a) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p);
  return r.get_ui();
}

bool Field::from(const Rational& a, u64& out) const {
  u64 d = from(Integer(a.get_den()));
  if (d == 0) return false;
  out = mul(from(Integer(a.get_num())), inv(d));
  return true;
}

u64 prime(std::size_t i) {
  static std::vector<u64> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= i) {
    mpz_class c = cache.empty() ? (mpz_class(1) << 62) : mpz_class(static_cast<unsigned long>(cache.back()));
    do {
      c -= 1;
    } while (mpz_probab_prime_p(c.get_mpz_t(), 30) == 0);
    cache.push_back(c.get_ui());
  }
  return cache[i];
}

void trim(NPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const NPoly& a) { return static_cast<int>(a.size()) - 1; }

NPoly reduce(const IntPoly& a, const Field& F) {
  NPoly r(a.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.from(a[i]);
  trim(r);
  return r;
}

NPoly add(const NPoly& a, const NPoly& b, const Field& F) {
  NPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  trim(r);
  return r;
}

NPoly sub(const NPoly& a, const NPoly& b, const Field& F) {
  NPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(r);
  return r;
}

NPoly mul(const NPoly& a, const NPoly& b, const Field& F) {
  if (a.empty() || b.empty()) return {};
  std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
  // accumulate a bounded number of products before reducing
  const unsigned __int128 p2 = static_cast<unsigned __int128>(F.p) * F.p;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      unsigned __int128 t = acc[i + j] + static_cast<unsigned __int128>(a[i]) * b[j];
      if (t >= p2 * 8) t %= F.p;
      acc[i + j] = t;
    }
  }
  NPoly r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<u64>(acc[i] % F.p);
  trim(r);
  return r;
}

NPoly scale(const NPoly& a, u64 k, const Field& F) {
  NPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], k);
  trim(r);
  return r;
}

void divmod(const NPoly& a, const NPoly& b, NPoly& q, NPoly& r, const Field& F) {
  if (b.empty()) throw AlgebraError("division by zero polynomial mod p");
  r = a;
  q.clear();
  if (a.size() < b.size()) return;
  q.assign(a.size() - b.size() + 1, 0);
  u64 li = F.inv(b.back());
  const std::size_t db = b.size() - 1;
  for (std::size_t k = a.size() - 1;; --k) {
    u64 c = F.mul(r[k], li);
    q[k - db] = c;
    if (c != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[k - db + j] = F.sub(r[k - db + j], F.mul(c, b[j]));
    if (k == db) break;
  }
  trim(q);
  trim(r);
}

NPoly rem(const NPoly& a, const NPoly& b, const Field& F) {
  NPoly q, r;
  divmod(a, b, q, r, F);
  return r;
}

NPoly monic(const NPoly& a, const Field& F) {
  if (a.empty()) return a;
  return scale(a, F.inv(a.back()), F);
}

NPoly gcd(NPoly a, NPoly b, const Field& F) {
  while (!b.empty()) {
    NPoly r = rem(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, F);
}

NPoly derivative(const NPoly& a, const Field& F) {
  if (a.size() <= 1) return {};
  NPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], i % F.p);
  trim(r);
  return r;
}

u64 eval(const NPoly& a, u64 x, const Field& F) {
  u64 r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
  return r;
}

NPoly powmod(const NPoly& base, u64 e, const NPoly& m, const Field& F) {
  NPoly r{1}, b = rem(base, m, F);
  r = rem(r, m, F);
  while (e) {
    if (e & 1) r = rem(mul(r, b, F), m, F);
    b = rem(mul(b, b, F), m, F);
    e >>= 1;
  }
  return r;
}

namespace {

void split_roots(const NPoly& h, const Field& F, std::mt19937_64& rng, std::vector<u64>& out) {
  int d = degree(h);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(F.mul(F.neg(h[0]), F.inv(h[1])));
    return;
  }
  for (;;) {
    u64 a = rng() % F.p;
    NPoly g = powmod(NPoly{a, 1}, (F.p - 1) / 2, h, F);
    g = sub(g, NPoly{1}, F);
    NPoly f = gcd(h, g, F);
    if (degree(f) > 0 && degree(f) < d) {
      NPoly q, r;
      divmod(h, f, q, r, F);
      split_roots(f, F, rng, out);
      split_roots(q, F, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<u64> roots(const NPoly& a, const Field& F, u64 seed) {
  std::vector<u64> out;
  NPoly f = monic(a, F);
  if (degree(f) <= 0) return out;
  if (f[0] == 0) {
    out.push_back(0);
    std::size_t k = 0;
    while (k < f.size() && f[k] == 0) ++k;
    f.erase(f.begin(), f.begin() + static_cast<long>(k));
  }
  NPoly xp = powmod(NPoly{0, 1}, F.p, f, F);
  NPoly h = gcd(f, sub(xp, NPoly{0, 1}, F), F);
  std::mt19937_64 rng(seed);
  split_roots(h, F, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

NPoly interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, const Field& F) {
  // Newton form, then expanded
  std::size_t n = xs.size();
  std::vector<u64> c(ys);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      c[i] = F.mul(F.sub(c[i], c[i - 1]), F.inv(F.sub(xs[i], xs[i - j])));
      if (i == j) break;
    }
  NPoly r;
  for (std::size_t i = n; i-- > 0;) {
    // r = r*(x - xs[i]) + c[i]
    NPoly t(r.size() + 1, 0);
    for (std::size_t k = 0; k < r.size(); ++k) {
      t[k + 1] = F.add(t[k + 1], r[k]);
      t[k] = F.sub(t[k], F.mul(r[k], xs[i]));
    }
    t[0] = F.add(t[0], c[i]);
    r = std::move(t);
    trim(r);
  }
  return r;
}

bool ratrecon(const NPoly& f, const NPoly& m, NPoly& num, NPoly& den, const Field& F) {
  // Euclid on (m, f) tracking the cofactor of f; pick the step following the
  // largest quotient degree.
  NPoly r0 = m, r1 = rem(f, m, F), t0{}, t1{1};
  if (r1.empty()) {
    num.clear();
    den = {1};
    return true;
  }
  int best = -1;
  NPoly bn, bd;
  while (!r1.empty()) {
    NPoly q, r;
    divmod(r0, r1, q, r, F);
    int dq = degree(q);
    if (dq > best) {
      best = dq;
      bn = r1;
      bd = t1;
    }
    NPoly t = sub(t0, mul(q, t1, F), F);
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  // degree of the remaining quotient at the first step decides confidence;
  // require a quotient of degree >= 2 beyond the balance point.
  if (best < 2 || bd.empty()) return false;
  if (gcd(bn, bd, F).size() != 1) return false;
  u64 li = F.inv(bd.back());
  num = scale(bn, li, F);
  den = scale(bd, li, F);
  return true;
}

bool solve_full_rank(std::vector<u64> a, std::size_t rows, std::size_t cols, std::vector<u64> b,
                     std::vector<u64>& x, const Field& F) {
  std::vector<std::size_t> piv_row(cols);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = r;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) return false;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
      std::swap(b[p], b[r]);
    }
    u64 iv = F.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = F.mul(a[r * cols + j], iv);
    b[r] = F.mul(b[r], iv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      u64 f = a[i * cols + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) a[i * cols + j] = F.sub(a[i * cols + j], F.mul(f, a[r * cols + j]));
      b[i] = F.sub(b[i], F.mul(f, b[r]));
    }
    piv_row[c] = r;
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return false;
  x.assign(cols, 0);
  for (std::size_t c = 0; c < cols; ++c) x[c] = b[piv_row[c]];
  return true;
}

}  // namespace dct::modp

namespace dct {

void crt_combine(Integer& acc, const Integer& modulus, std::uint64_t r, std::uint64_t p) {
  // acc is a residue mod modulus; return x mod modulus*p with x = acc mod modulus, x = r mod p
  modp::Field F{p};
  std::uint64_t am = F.from(acc);
  std::uint64_t mm = F.from(modulus);
  std::uint64_t t = F.mul(F.sub(r, am), F.inv(mm));
  acc += modulus * mpz_class(static_cast<unsigned long>(t));
}

bool rational_reconstruct(const Integer& a, const Integer& m, const Integer& nb, const Integer& db,
                          Rational& out) {
  Integer r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  Integer t0 = 0, t1 = 1;
  while (r1 >= nb) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) >= db) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  out = Rational(r1, t1);
  out.canonicalize();
  return true;
}

bool rational_reconstruct(const Integer& a, const Integer& m, Rational& out) {
  Integer b;
  Integer half = m / 2;
  mpz_sqrt(b.get_mpz_t(), half.get_mpz_t());
  return rational_reconstruct(a, m, b + 1, b + 1, out);
}

}  // namespace dct
