#pragma once

// Transcendence certificates: pseudoconstant searches on an operator and its
// symmetric powers, singularity certificates, and the order-growth probe.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dct/integrality.hpp"
#include "dct/localsolve.hpp"
#include "dct/ore.hpp"

namespace dct {

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// u with [u]_L integral at every finite point: the product of
// (x - xi)^max(0, ceil(-e)) over the singular points, e the least exponent.
// Irrational singular loci contribute h^max(0, ceil(-e)) for their locus h.
Polynomial clearing_factor(const OrePoly& l);

struct AnsatzConfig {
  std::map<Rational, int> denom_bounds;  // per rational singular point; empty = default
  std::optional<int> locus_bound;        // for the irrational singular locus
  std::optional<int> uniform_bound;      // overrides every bound when set
  int guard = 5;
  int max_escalations = 2;
};

// N = r (1 + max(0, ceil(-e))) at every singular point.
AnsatzConfig default_ansatz_config(const OrePoly& l);

struct AnsatzResult {
  std::vector<ModClass> classes;  // independent modulo constants, each verified
  AnsatzConfig bounds;            // bounds of the last attempt
  int escalations = 0;            // escalations used
};

// Throws NotPuiseux when L has no Puiseux basis at a singular point.
AnsatzResult ansatz_search(const OrePoly& l, const AnsatzConfig& cfg);

struct Certificate {
  enum class Kind { pseudoconstant, sympow_pseudoconstant, singular_structure };
  Kind kind = Kind::pseudoconstant;
  OrePoly op;
  int s = 1;
  std::optional<OrePoly> p;                // pseudoconstant kinds
  std::optional<Point> point;              // singular_structure
  std::optional<PointKind> classification;  // singular_structure
  std::vector<std::pair<Point, std::vector<Rational>>> exponents;  // sorted by point
};
std::string to_string(Certificate::Kind k);
Certificate::Kind parse_certificate_kind(const std::string& s);

// Exponents of L at its singular points and infinity; non-Puiseux points
// are listed with their rational indicial roots.
std::vector<std::pair<Point, std::vector<Rational>>> exponent_table(const OrePoly& l);

// Integer points of the monomial polytope for L^(s), lexicographic.
struct MonomialPolytope {
  std::vector<Rational> points;       // rational singular points of L
  std::vector<Rational> min_exponent;  // at each point, for L^(s)
  Rational min_exponent_infinity;
  std::vector<std::vector<long>> integer_points;
};
MonomialPolytope monomial_polytope(const OrePoly& l, const OrePoly& ls);

struct MonomialSearch {
  std::optional<Certificate> certificate;
  std::vector<std::pair<int, std::size_t>> polytope_counts;  // (s, integer points)
};
MonomialSearch monomial_search(const OrePoly& l, int s_max, int guard = 5);

std::optional<Certificate> sympow_pseudoconstant_search(const OrePoly& l, int s_max, const AnsatzConfig& cfg);

// First point of L (finite points ascending, then infinity) that is
// logarithmic, irregular or has an irrational exponent.
std::optional<Certificate> singularity_certificate(const OrePoly& l);

struct GrowthProbe {
  enum class Kind { consistent_with_linear, superlinear, inconclusive };
  std::vector<std::pair<int, int>> orders;  // (s, ord L^(s))
  Kind classification = Kind::inconclusive;
  bool adjoined = false;  // L was replaced by lclm(L, D^2)
};
std::string to_string(GrowthProbe::Kind k);
GrowthProbe growth_probe(const OrePoly& l, int s_max, bool adjoin_polynomials);

// Re-checks a certificate from scratch with doubled guards. Throws
// CertificateError when a required field is missing.
bool verify_certificate(const Certificate& c, int guard = 5);

}  // namespace dct
