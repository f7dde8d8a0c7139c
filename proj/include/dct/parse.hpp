#pragma once

// Text form of operators.
//
//   expr   := term (('+'|'-') term)*
//   term   := ['-'] factor (('*'|'/') factor)*
//   factor := atom ('^' uint)?
//   atom   := rational | 'x' | 'D' | '(' expr ')'
//
// Coefficients are written left of D powers; a D textually left of an x in
// one term is rejected. A divisor must not contain D.

#include <cstddef>
#include <string>
#include <string_view>

#include "dct/ore.hpp"

namespace dct {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

OrePoly parse_operator(std::string_view src);
std::string to_string(const OrePoly& l);

}  // namespace dct
