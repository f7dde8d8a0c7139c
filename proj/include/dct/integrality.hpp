#pragma once

// The module Q(x)[D]/<L>: classes, integrality at points, constants.

#include <optional>
#include <utility>
#include <vector>

#include "dct/localsolve.hpp"
#include "dct/ore.hpp"

namespace dct {

// [rep]_L with ord(rep) < ord(L).
struct ModClass {
  OrePoly modulus;
  OrePoly rep;

  bool is_zero() const { return rep.is_zero(); }
};

ModClass reduce(const OrePoly& p, const OrePoly& l);

// D [P] = 0, tested by exact right division.
bool is_constant(const ModClass& c);

// Integrality of P f for all local solutions f at a finite point or infinity.
ImageValuations local_integrality(const ModClass& c, const Point& p, int guard = 5);

struct IntegralityReport {
  ModClass cls;
  std::vector<ImageValuations> per_point;  // sorted by point
  bool completely_integral = true;
};

// Points where integrality can fail: singular points of L, poles of the
// coefficients of rep (rational or algebraic), and infinity.
std::vector<Point> relevant_points(const ModClass& c);

// Throws NotPuiseux when L has no Puiseux basis at a relevant point.
IntegralityReport complete_integrality(const ModClass& c, int guard = 5);

bool is_pseudoconstant(const ModClass& c, int guard = 5);

// Constants [P] with D P = q L.
struct ConstantSpace {
  OrePoly modulus;
  std::vector<std::pair<OrePoly, RationalFunction>> basis;  // (P, q)
};
ConstantSpace constant_space(const OrePoly& l);

// P with D P = a, or nullopt when a is not a left multiple of D.
std::optional<OrePoly> left_divide_by_d(const OrePoly& a);

}  // namespace dct
