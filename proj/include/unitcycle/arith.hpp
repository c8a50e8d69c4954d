#pragma once

// Exact integer number theory on 64-bit residues: factorization, divisors,
// Euler phi, Carmichael lambda, multiplicative order and unit enumeration.

#include <cstdint>
#include <vector>

namespace unitcycle {

using u64 = std::uint64_t;
using i64 = std::int64_t;

struct PrimePower {
  u64 prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n together with its prime factorization, primes strictly increasing.
/// n = 1 has no factors.
class Factorization {
 public:
  Factorization() = default;
  Factorization(u64 n, std::vector<PrimePower> factors);

  u64 n() const { return n_; }
  const std::vector<PrimePower>& factors() const { return factors_; }

  /// Multiplies the factors back together.
  u64 product() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  u64 n_ = 1;
  std::vector<PrimePower> factors_;
};

/// Residues a with 1 <= a <= n and gcd(a, n) = 1, ascending.
struct UnitSet {
  u64 n = 1;
  std::vector<u64> elements{1};
};

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);

/// Canonical residue of a (possibly negative) integer modulo m, in [0, m).
u64 residue(i64 a, u64 m);

/// Integer power with overflow check; throws std::overflow_error.
u64 checked_pow(u64 base, unsigned exp);

bool is_prime(u64 n);

/// Trial division with a 2,3,5 wheel. Throws std::invalid_argument for n = 0.
Factorization factorize(u64 n);

u64 euler_phi(u64 n);
u64 euler_phi(const Factorization& f);

/// lcm of lambda(p^e) with lambda(2) = 1, lambda(4) = 2, lambda(2^e) = 2^{e-2}
/// for e > 2, and lambda(p^e) = phi(p^e) for odd p.
u64 carmichael_lambda(u64 n);
u64 carmichael_lambda(const Factorization& f);

/// Least k >= 1 with a^k = 1 (mod d). Throws std::invalid_argument when
/// gcd(a, d) != 1 or d = 0.
u64 multiplicative_order(i64 a, u64 d);

/// Multiplicative orders modulo a fixed d, with lambda(d) and its prime
/// factors computed once. Small moduli also memoize per residue.
class OrderSolver {
 public:
  explicit OrderSolver(u64 d);

  u64 modulus() const { return d_; }

  /// Same contract as multiplicative_order(a, modulus()).
  u64 order(i64 a) const;

  /// order() without validation: r must already be a unit in [0, d).
  u64 order_of_unit(u64 r) const;

 private:
  u64 d_;
  u64 lambda_;
  std::vector<PrimePower> lambda_factors_;
  mutable std::vector<std::uint32_t> memo_;  // 0 = not yet computed
};

namespace detail {
// The two strategies behind multiplicative_order, exposed for cross-checking.
u64 order_by_iteration(u64 a, u64 d);
u64 order_by_lambda_descent(u64 a, u64 d);
}  // namespace detail

UnitSet units(u64 n);

/// All positive divisors of n, ascending.
std::vector<u64> divisors(u64 n);
std::vector<u64> divisors(const Factorization& f);

/// Smallest primitive root modulo an odd prime p.
u64 primitive_root(u64 p);

/// A generator of the cyclic group U_{p^m} for odd prime p: the smallest
/// primitive root g mod p, replaced by g + p when g^{p-1} = 1 (mod p^2).
u64 prime_power_generator(u64 p, unsigned m);

}  // namespace unitcycle
