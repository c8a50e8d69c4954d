#pragma once

// Test-only reader for hand-written polynomials such as
//   poly(16, "x1^60 + 2 x1^4 x2^4 x4^12 + x1^30 x2^15")
// meaning (1/16)(...). Kept separate from the library's renderer so golden
// values are not produced by the code under test.

#include <sstream>
#include <stdexcept>
#include <string>

#include "unitcycle/cycle_poly.hpp"

namespace testing {

inline unitcycle::CycleType ctype(const std::string& text) {
  unitcycle::CycleType::Exponents exps;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.empty() || tok[0] != 'x') throw std::runtime_error("bad monomial token " + tok);
    const auto caret = tok.find('^');
    const unitcycle::u64 idx = std::stoull(tok.substr(1, caret - 1));
    const unitcycle::u64 e = caret == std::string::npos ? 1 : std::stoull(tok.substr(caret + 1));
    exps[idx] += e;
  }
  return unitcycle::CycleType(exps);
}

inline unitcycle::CycleIndexPoly poly(unsigned long denominator, const std::string& text) {
  unitcycle::CycleIndexPoly p;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto plus = text.find('+', pos);
    if (plus == std::string::npos) plus = text.size();
    std::istringstream term(text.substr(pos, plus - pos));
    std::string first;
    term >> first;
    unitcycle::Rational c = 1;
    std::string rest;
    std::getline(term, rest);
    if (!first.empty() && first[0] != 'x') {
      c = unitcycle::Rational(first);
    } else {
      rest = first + rest;
    }
    p.add_term(ctype(rest), c);
    pos = plus + 1;
  }
  return p * unitcycle::Rational(1, denominator);
}

}  // namespace testing
