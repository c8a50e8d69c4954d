#include "unitcycle/unit_action.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace unitcycle {

namespace {

using CountMap = std::map<CycleType, u64, TermOrder>;

u64 require_unit(u64 n, i64 a) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  const u64 r = residue(a, n);
  if (std::gcd(r, n) != 1)
    throw std::invalid_argument(std::to_string(a) + " is not a unit modulo " + std::to_string(n));
  return r;
}

void require_divisor(u64 n, u64 d) {
  if (d == 0 || n % d != 0)
    throw std::invalid_argument(std::to_string(d) + " does not divide " + std::to_string(n));
}

CycleIndexPoly from_counts(const CountMap& counts, u64 group_order) {
  CycleIndexPoly p;
  for (const auto& [ct, c] : counts) p.add_term(ct, make_rational(c, group_order));
  return p;
}

// x_1^{2^m} style exponents need m <= 62
void require_pow2_range(unsigned m, unsigned lo) {
  if (m < lo || m > 62)
    throw std::invalid_argument("2-power exponent m = " + std::to_string(m) + " out of range [" +
                                std::to_string(lo) + ", 62]");
}

u64 pow2(unsigned e) { return u64{1} << e; }

// prod_{l=3}^{m} x_{2^{l-2}}^2
CycleType paired_chain(unsigned m) {
  CycleType ct;
  for (unsigned l = 3; l <= m; ++l) ct *= CycleType::power(pow2(l - 2), 2);
  return ct;
}

}  // namespace

GroupActionSpec GroupActionSpec::of(u64 n) {
  GroupActionSpec g;
  g.n = n;
  g.factorization = factorize(n);
  g.phi_n = euler_phi(g.factorization);
  g.lambda_n = carmichael_lambda(g.factorization);
  g.divisors = unitcycle::divisors(g.factorization);
  return g;
}

std::vector<u64> orbit_of_order(u64 n, u64 d) {
  require_divisor(n, d);
  const u64 step = n / d;
  std::vector<u64> out;
  for (u64 t : units(d).elements) out.push_back(mul_mod(step, t, n));
  std::sort(out.begin(), out.end());
  return out;
}

OrbitTable orbits(u64 n) {
  OrbitTable t;
  t.n = n;
  for (u64 d : divisors(n)) t.orbits.emplace(d, orbit_of_order(n, d));
  return t;
}

CycleType ctype_on_orbit(u64 n, i64 a, u64 d) {
  const u64 r = require_unit(n, a);
  require_divisor(n, d);
  const u64 k = multiplicative_order(static_cast<i64>(r % d), d);
  return CycleType::power(k, euler_phi(d) / k);
}

CycleType ctype_of_unit(u64 n, i64 a) {
  const u64 r = require_unit(n, a);
  CycleType ct;
  for (u64 d : divisors(n)) {
    const u64 k = multiplicative_order(static_cast<i64>(r % d), d);
    ct *= CycleType::power(k, euler_phi(d) / k);
  }
  return ct;
}

CycleType ctype_of_permutation_oracle(u64 n, i64 a) {
  const u64 r = require_unit(n, a);
  std::vector<bool> seen(n, false);
  CycleType::Exponents lengths;
  for (u64 x = 0; x < n; ++x) {
    if (seen[x]) continue;
    u64 len = 0;
    for (u64 y = x; !seen[y]; y = mul_mod(r, y, n)) {
      seen[y] = true;
      ++len;
    }
    ++lengths[len];
  }
  return CycleType(std::move(lengths));
}

CycleIndexPoly cycle_index_formula(u64 n) {
  const auto g = GroupActionSpec::of(n);
  std::vector<u64> phi_d;
  std::vector<OrderSolver> order_mod_d;
  for (u64 d : g.divisors) {
    phi_d.push_back(euler_phi(d));
    order_mod_d.emplace_back(d);
  }

  // every cycle length divides lambda(n); accumulate exponents densely by
  // position in its divisor list
  const auto lengths = divisors(g.lambda_n);
  const auto slot = [&](u64 k) {
    return static_cast<std::size_t>(std::lower_bound(lengths.begin(), lengths.end(), k) - lengths.begin());
  };
  std::vector<u64> exps(lengths.size());

  CountMap counts;
  for (u64 a : units(n).elements) {
    std::fill(exps.begin(), exps.end(), 0);
    for (std::size_t i = 0; i < g.divisors.size(); ++i) {
      const u64 k = order_mod_d[i].order_of_unit(a % g.divisors[i]);
      exps[slot(k)] += phi_d[i] / k;
    }
    CycleType::Exponents e;
    for (std::size_t j = 0; j < lengths.size(); ++j) {
      if (exps[j] != 0) e.emplace_hint(e.end(), lengths[j], exps[j]);
    }
    ++counts[CycleType(std::move(e))];
  }
  return from_counts(counts, g.phi_n);
}

CycleIndexPoly cycle_index_oracle(u64 n) {
  const auto us = units(n);
  CountMap counts;
  for (u64 a : us.elements) ++counts[ctype_of_permutation_oracle(n, static_cast<i64>(a))];
  return from_counts(counts, us.elements.size());
}

CycleIndexPoly partial_cycle_index(u64 n, std::span<const i64> subset) {
  std::set<u64> seen;
  CountMap counts;
  for (i64 a : subset) {
    const u64 r = require_unit(n, a);
    if (!seen.insert(r).second)
      throw std::invalid_argument("partial_cycle_index: residue " + std::to_string(r) + " repeated");
    ++counts[ctype_of_unit(n, a)];
  }
  return from_counts(counts, euler_phi(n));
}

// ---- U_{2^m} ------------------------------------------------------------

u64 Pow2UnitForm::value() const {
  const u64 mod = pow2(m);
  const u64 v = pow_mod(3, exponent(), mod);
  return sign > 0 ? v : (mod - v) % mod;
}

Pow2UnitForm Pow2UnitForm::of(u64 w, unsigned m) {
  require_pow2_range(m, 3);
  const u64 mod = pow2(m);
  w %= mod;
  if (w % 2 == 0) throw std::invalid_argument(std::to_string(w) + " is not a unit modulo 2^" + std::to_string(m));
  Pow2UnitForm f;
  f.m = m;
  // powers of 3 are 1 or 3 mod 8, their negatives 7 or 5
  f.sign = (w % 8 == 1 || w % 8 == 3) ? 1 : -1;
  u64 x = f.sign > 0 ? w : mod - w;

  // bitwise discrete log in the cyclic 2-group <3> of order 2^{m-2}
  const u64 inv3 = pow_mod(3, pow2(m - 2) - 1, mod);
  u64 inv_step = inv3;  // 3^{-2^k}
  u64 b = 0;
  for (unsigned k = 0; k + 2 < m; ++k) {
    if (pow_mod(x, pow2(m - 3 - k), mod) != 1) {
      b |= pow2(k);
      x = mul_mod(x, inv_step, mod);
    }
    inv_step = mul_mod(inv_step, inv_step, mod);
  }
  if (b == 0) {
    f.s = m - 2;
    f.r = 0;
  } else {
    f.s = static_cast<unsigned>(std::countr_zero(b));
    f.r = b >> f.s;
  }
  return f;
}

u64 order_table_pow2_plus(unsigned l, unsigned s, bool has_nontrivial_r) {
  if (!has_nontrivial_r || l <= 1) return 1;
  if (l == 2) return s == 0 ? 2 : 1;
  return s < l - 2 ? pow2(l - 2 - s) : 1;
}

u64 order_table_pow2_minus(unsigned l, unsigned s) {
  if (l <= 1) return 1;
  if (l == 2) return s == 0 ? 1 : 2;
  return s < l - 2 ? pow2(l - 2 - s) : 2;
}

std::vector<i64> gamma1_elements(unsigned m) {
  require_pow2_range(m, 3);
  const u64 mod = pow2(m);
  std::vector<i64> out;
  u64 x = 1;
  for (u64 b = 0; b < pow2(m - 2); ++b) {
    out.push_back(static_cast<i64>(x));
    x = mul_mod(x, 3, mod);
  }
  return out;
}

std::vector<i64> gamma2_elements(unsigned m) {
  const auto g1 = gamma1_elements(m);
  const i64 mod = static_cast<i64>(pow2(m));
  std::vector<i64> out;
  out.reserve(g1.size());
  for (i64 x : g1) out.push_back(mod - x);
  return out;
}

// Identity; 2^{m-3} elements 3^r (r odd); 2^t elements 3^{2^s r} with
// s = m-3-t >= 1.
CycleIndexPoly partial_index_gamma1(unsigned m) {
  require_pow2_range(m, 3);
  CycleIndexPoly z;
  z.add_term(CycleType::power(1, pow2(m)), 1);
  z.add_term(CycleType::power(1, 2) * CycleType::power(2, 1) * paired_chain(m), make_rational(pow2(m - 3)));
  for (unsigned t = 0; t + 4 <= m; ++t) {
    CycleType ct = CycleType::power(1, pow2(m - 1 - t));
    for (unsigned i = 0; i <= t; ++i) ct *= CycleType::power(pow2(i + 1), pow2(m - 2 - t));
    z.add_term(ct, make_rational(pow2(t)));
  }
  return z * make_rational(1, pow2(m - 1));
}

// -1 fixes 0 and 2^{m-1} and swaps the remaining 2^m - 2 points in pairs,
// so its cycle type is x_1^2 x_2^{2^{m-1}-1}.
CycleIndexPoly partial_index_gamma2(unsigned m) {
  require_pow2_range(m, 3);
  CycleIndexPoly z;
  z.add_term(CycleType::power(1, 2) * CycleType::power(2, pow2(m - 1) - 1), 1);
  z.add_term(CycleType::power(1, 4) * paired_chain(m), make_rational(pow2(m - 3)));
  for (unsigned t = 0; t + 4 <= m; ++t) {
    CycleType ct = CycleType::power(1, 2) * CycleType::power(2, pow2(m - t - 1) - 1);
    for (unsigned i = 1; i <= t; ++i) ct *= CycleType::power(pow2(i + 1), pow2(m - t - 2));
    z.add_term(ct, make_rational(pow2(t)));
  }
  return z * make_rational(1, pow2(m - 1));
}

CycleIndexPoly cycle_index_pow2(unsigned m) {
  require_pow2_range(m, 1);
  if (m == 1) return monomial(CycleType::power(1, 2), 1);
  if (m == 2) {
    return (monomial(CycleType::power(1, 4), 1) + monomial(CycleType::power(1, 2) * CycleType::power(2, 1), 1)) *
           make_rational(1, 2);
  }
  return partial_index_gamma1(m) + partial_index_gamma2(m);
}

CycleIndexPoly cycle_index_odd_prime_power(u64 p, unsigned m) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
  if (m == 0) throw std::invalid_argument("prime power exponent must be positive");
  std::vector<u64> phis{1};
  for (unsigned i = 1; i <= m; ++i) phis.push_back(checked_pow(p, i - 1) * (p - 1));
  const u64 order = phis.back();

  // beta^k restricted to Omega^{p^i} has order phi(p^i)/gcd(k, phi(p^i))
  CountMap counts;
  for (u64 k = 1; k <= order; ++k) {
    CycleType ct;
    for (u64 phi : phis) {
      const u64 v = std::gcd(phi, k);
      ct *= CycleType::power(phi / v, v);
    }
    ++counts[ct];
  }
  return from_counts(counts, order);
}

CycleIndexPoly cycle_index_blocks(u64 n) {
  CycleIndexPoly z = monomial(CycleType::power(1, 1), 1);
  const auto f = factorize(n);
  for (const auto& pp : f.factors()) {
    const auto block =
        pp.prime == 2 ? cycle_index_pow2(pp.exponent) : cycle_index_odd_prime_power(pp.prime, pp.exponent);
    z = star_product(z, block);
  }
  return z;
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "formula") return Method::formula;
  if (name == "blocks") return Method::blocks;
  if (name == "oracle") return Method::oracle;
  return std::nullopt;
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::formula: return "formula";
    case Method::blocks: return "blocks";
    case Method::oracle: return "oracle";
  }
  return "?";
}

CycleIndexPoly cycle_index(u64 n, Method method) {
  switch (method) {
    case Method::formula: return cycle_index_formula(n);
    case Method::blocks: return cycle_index_blocks(n);
    case Method::oracle: return cycle_index_oracle(n);
  }
  throw std::invalid_argument("unknown method");
}

}  // namespace unitcycle
