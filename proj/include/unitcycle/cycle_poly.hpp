#pragma once

// Sparse cycle-index polynomials over exact rationals.
//
// A CycleType is a monomial x_1^{e_1} x_2^{e_2} ... stored as a map from the
// variable index (a cycle length) to its positive exponent. A CycleIndexPoly
// maps CycleTypes to nonzero rational coefficients; the representation is
// canonical, so operator== is mathematical equality.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "unitcycle/arith.hpp"

namespace unitcycle {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(u64 num, u64 den = 1);
Integer make_integer(u64 v);

class CycleType {
 public:
  using Exponents = std::map<u64, u64>;

  CycleType() = default;
  explicit CycleType(Exponents exps);

  /// x_length^count (the empty monomial when count = 0).
  static CycleType power(u64 length, u64 count);

  const Exponents& exponents() const { return exps_; }
  bool empty() const { return exps_.empty(); }

  u64 exponent(u64 length) const;

  /// Sum of length * multiplicity; the number of points permuted.
  u64 degree() const;

  /// Largest variable index present, 0 for the empty monomial.
  u64 max_index() const;

  /// Monomial product: exponents of equal indices add.
  CycleType& operator*=(const CycleType& other);
  friend CycleType operator*(CycleType a, const CycleType& b) { return a *= b; }

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  Exponents exps_;
};

/// Term order used everywhere: total degree descending, then the dense
/// exponent vector (e_1, e_2, ...) lexicographically descending. Returns
/// true when a precedes b.
struct TermOrder {
  bool operator()(const CycleType& a, const CycleType& b) const;
};

/// x_l^i (*) x_m^j = x_lcm(l,m)^{i j gcd(l,m)}.
CycleType star_monomial(u64 l, u64 i, u64 m, u64 j);

enum class Format { plain, latex, json };

std::optional<Format> parse_format(std::string_view name);

class CycleIndexPoly {
 public:
  using Terms = std::map<CycleType, Rational, TermOrder>;

  CycleIndexPoly() = default;

  static CycleIndexPoly monomial(const CycleType& ct, const Rational& c);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of ct, zero when absent.
  Rational coefficient(const CycleType& ct) const;

  /// Adds c * ct in place, dropping the term if it cancels.
  void add_term(const CycleType& ct, const Rational& c);

  /// Largest variable index occurring in any term.
  u64 max_index() const;

  CycleIndexPoly& operator+=(const CycleIndexPoly& other);
  CycleIndexPoly& operator*=(const Rational& c);
  CycleIndexPoly operator-() const;

  friend CycleIndexPoly operator+(CycleIndexPoly a, const CycleIndexPoly& b) { return a += b; }
  friend CycleIndexPoly operator-(const CycleIndexPoly& a, const CycleIndexPoly& b) { return a + (-b); }
  friend CycleIndexPoly operator*(CycleIndexPoly p, const Rational& c) { return p *= c; }
  friend CycleIndexPoly operator*(const Rational& c, CycleIndexPoly p) { return p *= c; }

  friend bool operator==(const CycleIndexPoly&, const CycleIndexPoly&) = default;

 private:
  Terms terms_;
};

inline CycleIndexPoly monomial(const CycleType& ct, const Rational& c) {
  return CycleIndexPoly::monomial(ct, c);
}
inline CycleIndexPoly add(const CycleIndexPoly& p, const CycleIndexPoly& q) { return p + q; }
inline CycleIndexPoly scale(const CycleIndexPoly& p, const Rational& c) { return p * c; }

/// Bilinear extension of star_monomial to whole polynomials.
CycleIndexPoly star_product(const CycleIndexPoly& p, const CycleIndexPoly& q);

/// Exact substitution. Throws std::invalid_argument if a variable of p has
/// no value in the assignment.
Rational evaluate(const CycleIndexPoly& p, const std::map<u64, Rational>& assignment);

/// Substitutes the same value for every variable.
Rational evaluate_uniform(const CycleIndexPoly& p, const Rational& value);

std::string render(const CycleType& ct, Format format);
std::string render(const CycleIndexPoly& p, Format format);

/// Parses the JSON schema produced by render(p, Format::json).
/// Throws std::invalid_argument on malformed input.
CycleIndexPoly parse_json(std::string_view text);

/// First term (in TermOrder) whose coefficients differ, rendered as
/// "term: lhs vs rhs"; nullopt when p == q.
std::optional<std::string> first_difference(const CycleIndexPoly& p, const CycleIndexPoly& q);

}  // namespace unitcycle
