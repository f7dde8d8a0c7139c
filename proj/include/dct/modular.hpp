#pragma once

// Word-size prime field arithmetic and the reconstruction helpers used by the
// multimodular routines (gcd, rational roots, first-dependency search).

#include <cstdint>
#include <vector>

#include "dct/algebra.hpp"

namespace dct::modp {

using u64 = std::uint64_t;
using NPoly = std::vector<u64>;  // trimmed, ascending

struct Field {
  u64 p;
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p ? s - p : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }
  u64 mul(u64 a, u64 b) const {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
  }
  u64 pow(u64 a, u64 e) const;
  u64 inv(u64 a) const;  // a != 0
  u64 from(const Integer& a) const;
  // false when p divides the denominator
  bool from(const Rational& a, u64& out) const;
};

// Primes just below 2^62, descending; index i is deterministic.
u64 prime(std::size_t i);

void trim(NPoly& a);
int degree(const NPoly& a);
NPoly reduce(const IntPoly& a, const Field& F);
NPoly add(const NPoly& a, const NPoly& b, const Field& F);
NPoly sub(const NPoly& a, const NPoly& b, const Field& F);
NPoly mul(const NPoly& a, const NPoly& b, const Field& F);
NPoly scale(const NPoly& a, u64 k, const Field& F);
void divmod(const NPoly& a, const NPoly& b, NPoly& q, NPoly& r, const Field& F);
NPoly rem(const NPoly& a, const NPoly& b, const Field& F);
NPoly gcd(NPoly a, NPoly b, const Field& F);  // monic
NPoly monic(const NPoly& a, const Field& F);
NPoly derivative(const NPoly& a, const Field& F);
u64 eval(const NPoly& a, u64 x, const Field& F);
NPoly powmod(const NPoly& base, u64 e, const NPoly& m, const Field& F);
// All roots in F_p of a squarefree-or-not polynomial (distinct roots only).
std::vector<u64> roots(const NPoly& a, const Field& F, u64 seed = 1);

// Interpolation and rational reconstruction over F_p.
NPoly interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, const Field& F);
// Maximal-quotient rational reconstruction of f mod m. Returns false when no
// confident candidate exists. den is normalized monic.
bool ratrecon(const NPoly& f, const NPoly& m, NPoly& num, NPoly& den, const Field& F);

// Solve the square-or-tall system A*x = b modulo p (A given row-major,
// rows x cols). Returns false when A has rank < cols.
bool solve_full_rank(std::vector<u64> a, std::size_t rows, std::size_t cols, std::vector<u64> b,
                     std::vector<u64>& x, const Field& F);

}  // namespace dct::modp

namespace dct {

// Chinese remaindering of residue vectors; values are symmetric residues.
void crt_combine(Integer& acc, const Integer& modulus, std::uint64_t r, std::uint64_t p);
// Wang rational reconstruction with |num| <= sqrt(m/2), 0 < den <= sqrt(m/2).
bool rational_reconstruct(const Integer& a, const Integer& m, Rational& out);
// Same with explicit bounds |num| < nb, 0 < den < db.
bool rational_reconstruct(const Integer& a, const Integer& m, const Integer& nb, const Integer& db,
                          Rational& out);

}  // namespace dct
