#pragma once

// The action x -> a x (mod n) of the unit group U_n on Z_n.
//
// Z_n splits into the orbits Omega_n^d = (n/d) U_d, one per divisor d of n.
// On Omega_n^d the unit a acts with cycles of a single length, the order of
// a modulo d. Three independent routes produce the cycle index:
//
//   formula  - sum over units of prod_{d|n} x_{r_a(d)}^{phi(d)/r_a(d)}
//   blocks   - closed forms for U_{2^m} and U_{p^m}, combined by star_product
//   oracle   - explicit permutations decomposed into cycles

#include <map>
#include <span>
#include <string_view>
#include <optional>
#include <vector>

#include "unitcycle/arith.hpp"
#include "unitcycle/cycle_poly.hpp"

namespace unitcycle {

struct GroupActionSpec {
  u64 n = 1;
  u64 phi_n = 1;
  u64 lambda_n = 1;
  std::vector<u64> divisors{1};
  Factorization factorization;

  static GroupActionSpec of(u64 n);
};

struct OrbitTable {
  u64 n = 1;
  std::map<u64, std::vector<u64>> orbits;  // additive order d -> sorted elements
};

/// Elements of additive order d in Z_n, ascending. Throws if d does not
/// divide n.
std::vector<u64> orbit_of_order(u64 n, u64 d);

OrbitTable orbits(u64 n);

/// Cycle type of x -> a x restricted to Omega_n^d: x_k^{phi(d)/k}, k = r_a(d).
CycleType ctype_on_orbit(u64 n, i64 a, u64 d);

/// Cycle type of x -> a x on all of Z_n, assembled orbit by orbit.
CycleType ctype_of_unit(u64 n, i64 a);

/// Cycle type found by tracing the permutation point by point.
CycleType ctype_of_permutation_oracle(u64 n, i64 a);

CycleIndexPoly cycle_index_formula(u64 n);
CycleIndexPoly cycle_index_oracle(u64 n);
CycleIndexPoly cycle_index_blocks(u64 n);

/// (1/phi(n)) * sum over the given units of ctype_of_unit. Throws on a
/// non-unit or a repeated residue.
CycleIndexPoly partial_cycle_index(u64 n, std::span<const i64> subset);

// ---- U_{2^m} ------------------------------------------------------------

/// w = sign * 3^b (mod 2^m) with b = 2^s * r, r odd, 0 <= b < 2^{m-2}.
/// b = 0 is stored as r = 0, s = m - 2.
struct Pow2UnitForm {
  int sign = 1;
  unsigned s = 0;
  u64 r = 0;
  unsigned m = 3;

  u64 exponent() const { return r == 0 ? 0 : (u64{1} << s) * r; }
  u64 value() const;

  /// Unique form of a unit modulo 2^m, m >= 3.
  static Pow2UnitForm of(u64 w, unsigned m);

  friend bool operator==(const Pow2UnitForm&, const Pow2UnitForm&) = default;
};

/// Order of 3^{2^s r} modulo 2^l (r odd, or has_nontrivial_r = false for r = 0).
u64 order_table_pow2_plus(unsigned l, unsigned s, bool has_nontrivial_r = true);

/// Order of -3^{2^s r} modulo 2^l.
u64 order_table_pow2_minus(unsigned l, unsigned s);

/// {3^b : 0 <= b < 2^{m-2}} and its negation, as residues mod 2^m.
std::vector<i64> gamma1_elements(unsigned m);
std::vector<i64> gamma2_elements(unsigned m);

CycleIndexPoly partial_index_gamma1(unsigned m);
CycleIndexPoly partial_index_gamma2(unsigned m);
CycleIndexPoly cycle_index_pow2(unsigned m);

/// Cycle index of U_{p^m} on Z_{p^m} for an odd prime p.
CycleIndexPoly cycle_index_odd_prime_power(u64 p, unsigned m);

// ---- dispatch -----------------------------------------------------------

enum class Method { formula, blocks, oracle };

std::optional<Method> parse_method(std::string_view name);
std::string_view method_name(Method m);

CycleIndexPoly cycle_index(u64 n, Method method);

}  // namespace unitcycle
