#include "unitcycle/arith.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

namespace unitcycle {

namespace {

constexpr u64 kIterationOrderCutoff = 10'000;
// OrderSolver keeps a per-residue table (4 bytes each) up to this modulus
constexpr u64 kMemoOrderCutoff = u64{1} << 22;

u64 lambda_of_prime_power(const PrimePower& pp) {
  if (pp.prime == 2) {
    if (pp.exponent == 1) return 1;
    if (pp.exponent == 2) return 2;
    return u64{1} << (pp.exponent - 2);
  }
  return checked_pow(pp.prime, pp.exponent - 1) * (pp.prime - 1);
}

}  // namespace

Factorization::Factorization(u64 n, std::vector<PrimePower> factors)
    : n_(n), factors_(std::move(factors)) {
  if (n_ == 0) throw std::invalid_argument("factorization of 0");
  u64 prev = 1;
  for (const auto& f : factors_) {
    if (f.exponent == 0 || f.prime <= prev || !is_prime(f.prime))
      throw std::invalid_argument("factors must be increasing primes with positive exponents");
    prev = f.prime;
  }
  if (product() != n_) throw std::invalid_argument("factors do not multiply to n");
}

u64 Factorization::product() const {
  u64 p = 1;
  for (const auto& f : factors_) {
    const u64 q = checked_pow(f.prime, f.exponent);
    if (p > UINT64_MAX / q) throw std::overflow_error("factorization product overflows");
    p *= q;
  }
  return p;
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 residue(i64 a, u64 m) {
  if (m == 0) throw std::invalid_argument("modulus must be positive");
  if (a >= 0) return static_cast<u64>(a) % m;
  // -(a+1) avoids overflow at INT64_MIN
  const u64 neg = (static_cast<u64>(-(a + 1)) + 1) % m;
  return neg == 0 ? 0 : m - neg;
}

u64 checked_pow(u64 base, unsigned exp) {
  u64 r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) throw std::overflow_error("integer power overflows");
    r *= base;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2u, 3u, 5u}) {
    if (n % p == 0) return n == p;
  }
  static constexpr std::array<u64, 8> gaps{4, 2, 4, 2, 4, 6, 2, 6};
  u64 d = 7;
  for (std::size_t i = 0; d <= n / d; d += gaps[i], i = (i + 1) % gaps.size()) {
    if (n % d == 0) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("cannot factorize 0");
  std::vector<PrimePower> out;
  u64 m = n;
  auto take = [&](u64 p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  take(2);
  take(3);
  take(5);
  static constexpr std::array<u64, 8> gaps{4, 2, 4, 2, 4, 6, 2, 6};
  u64 d = 7;
  for (std::size_t i = 0; d <= m / d; d += gaps[i], i = (i + 1) % gaps.size()) take(d);
  if (m > 1) out.push_back({m, 1});
  return Factorization(n, std::move(out));
}

u64 euler_phi(const Factorization& f) {
  u64 phi = 1;
  for (const auto& pp : f.factors()) phi *= checked_pow(pp.prime, pp.exponent - 1) * (pp.prime - 1);
  return phi;
}

u64 euler_phi(u64 n) { return euler_phi(factorize(n)); }

u64 carmichael_lambda(const Factorization& f) {
  u64 l = 1;
  for (const auto& pp : f.factors()) l = std::lcm(l, lambda_of_prime_power(pp));
  return l;
}

u64 carmichael_lambda(u64 n) { return carmichael_lambda(factorize(n)); }

namespace detail {

u64 order_by_iteration(u64 a, u64 d) {
  if (d == 1) return 1;
  u64 x = a % d;
  u64 k = 1;
  while (x != 1) {
    x = mul_mod(x, a, d);
    ++k;
  }
  return k;
}

// Start from lambda(d), which every order divides, and strip prime factors
// while a^{k/q} is still 1.
u64 descend(u64 a, u64 d, u64 lambda, const std::vector<PrimePower>& lambda_factors) {
  u64 k = lambda;
  for (const auto& q : lambda_factors) {
    for (unsigned i = 0; i < q.exponent; ++i) {
      if (pow_mod(a, k / q.prime, d) != 1) break;
      k /= q.prime;
    }
  }
  return k;
}

u64 order_by_lambda_descent(u64 a, u64 d) {
  if (d == 1) return 1;
  const u64 lambda = carmichael_lambda(d);
  return descend(a % d, d, lambda, factorize(lambda).factors());
}

}  // namespace detail

OrderSolver::OrderSolver(u64 d) : d_(d) {
  if (d == 0) throw std::invalid_argument("modulus must be positive");
  lambda_ = carmichael_lambda(d);
  lambda_factors_ = factorize(lambda_).factors();
  if (d <= kMemoOrderCutoff) memo_.assign(d, 0);
}

u64 OrderSolver::order(i64 a) const {
  const u64 r = residue(a, d_);
  if (std::gcd(r, d_) != 1)
    throw std::invalid_argument("multiplicative_order: " + std::to_string(a) + " is not a unit modulo " +
                                std::to_string(d_));
  return order_of_unit(r);
}

u64 OrderSolver::order_of_unit(u64 r) const {
  if (d_ == 1) return 1;
  const auto compute = [&] {
    return d_ <= kIterationOrderCutoff ? detail::order_by_iteration(r, d_)
                                       : detail::descend(r, d_, lambda_, lambda_factors_);
  };
  if (memo_.empty()) return compute();
  if (memo_[r] == 0) memo_[r] = static_cast<std::uint32_t>(compute());
  return memo_[r];
}

u64 multiplicative_order(i64 a, u64 d) {
  if (d == 0) throw std::invalid_argument("modulus must be positive");
  if (d <= kIterationOrderCutoff) {
    const u64 r = residue(a, d);
    if (std::gcd(r, d) != 1)
      throw std::invalid_argument("multiplicative_order: " + std::to_string(a) + " is not a unit modulo " +
                                  std::to_string(d));
    return detail::order_by_iteration(r, d);
  }
  return OrderSolver(d).order(a);
}

UnitSet units(u64 n) {
  if (n == 0) throw std::invalid_argument("units of Z_0");
  UnitSet u;
  u.n = n;
  if (n == 1) return u;
  u.elements.clear();
  u.elements.reserve(euler_phi(n));
  for (u64 a = 1; a < n; ++a) {
    if (std::gcd(a, n) == 1) u.elements.push_back(a);
  }
  return u;
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (const auto& pp : f.factors()) {
    const std::size_t base = out.size();
    u64 q = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      q *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> divisors(u64 n) { return divisors(factorize(n)); }

u64 primitive_root(u64 p) {
  if (p == 2) return 1;
  if (!is_prime(p)) throw std::invalid_argument("primitive_root: " + std::to_string(p) + " is not prime");
  const auto qs = factorize(p - 1).factors();
  for (u64 g = 2; g < p; ++g) {
    bool generates = true;
    for (const auto& q : qs) {
      if (pow_mod(g, (p - 1) / q.prime, p) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  throw std::logic_error("no primitive root found");
}

u64 prime_power_generator(u64 p, unsigned m) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("prime_power_generator needs an odd prime");
  if (m == 0) throw std::invalid_argument("prime_power_generator needs m >= 1");
  const u64 g = primitive_root(p);
  if (m == 1) return g;
  const u64 p2 = checked_pow(p, 2);
  return pow_mod(g, p - 1, p2) == 1 ? g + p : g;
}

}  // namespace unitcycle
