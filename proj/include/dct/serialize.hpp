#pragma once

// JSON forms of operators and certificates.
//
// Operator:    {"var":"x","coeffs":[{"num":[...],"den":[...]}, ...]}
//              coeffs[i] is the D^i coefficient; rationals are canonical
//              strings ("-3/2", "7"), polynomials ascending without trailing
//              zeros.
// Certificate: {"kind","s","operator","P","point","classification",
//               "exponents","tool_version"} in this order; absent fields are
//               null.

#include <string>

#include "dct/certsearch.hpp"

namespace dct {

inline constexpr const char* kToolVersion = "0.1.0";

std::string operator_to_json(const OrePoly& l);
// Throws CertificateError on malformed input.
OrePoly operator_from_json(const std::string& text);

std::string certificate_to_json(const Certificate& c, int indent = 2);
Certificate certificate_from_json(const std::string& text);

}  // namespace dct
