#pragma once

// First linear dependency among the iterated derivatives of a vector in a
// finite-dimensional differential module over Q(x).
//
// The module has basis e_0..e_{N-1} and P(x) D(e_m) = sum_j c_{m,j}(x) e_j with
// integer polynomials P and c. Starting from v_0 = start, v_{k+1} = D(v_k).
// The monic relation sum_{j<=k} n_j v_j = 0 of least k is the minimal
// operator sum n_j D^j annihilating the start vector.
//
// Candidates are computed modulo word-size primes by evaluation and rational
// function reconstruction, lifted by Chinese remaindering and rational
// reconstruction, and accepted only after an exact check over Z[x].

#include <cstddef>
#include <utility>
#include <vector>

#include "dct/algebra.hpp"

namespace dct {

struct DerivationSystem {
  std::size_t dim = 0;
  IntPoly P;
  std::vector<std::vector<std::pair<std::size_t, IntPoly>>> dmap;  // by source index
  std::vector<IntPoly> start;                                      // length dim
};

// Rank of the Krylov sequence at random points modulo primes; a lower bound
// for the order of the minimal relation, exact with high probability.
std::size_t krylov_rank(const DerivationSystem& sys, unsigned trials = 2);

// Coefficients n_0..n_k with n_k = 1.
std::vector<RationalFunction> first_dependency(const DerivationSystem& sys);

// Builders.
DerivationSystem sympow_system(const std::vector<IntPoly>& p, int s);
DerivationSystem product_system(const std::vector<IntPoly>& a, const std::vector<IntPoly>& b);
DerivationSystem direct_sum_system(const std::vector<IntPoly>& a, const std::vector<IntPoly>& b);

}  // namespace dct
