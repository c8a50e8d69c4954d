#include "unitcycle/enumerate.hpp"

#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace unitcycle {

u64 fixed_points(u64 n, i64 a) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  const u64 r = residue(a, n);
  if (std::gcd(r, n) != 1)
    throw std::invalid_argument(std::to_string(a) + " is not a unit modulo " + std::to_string(n));
  u64 count = 0;
  for (u64 x = 0; x < n; ++x) {
    if (mul_mod(r, x, n) == x) ++count;
  }
  return count;
}

u64 count_element_orbits(u64 n) { return divisors(n).size(); }

u64 count_element_orbits_burnside(u64 n) {
  const auto us = units(n);
  u64 sum = 0;
  for (u64 a : us.elements) sum += fixed_points(n, static_cast<i64>(a));
  if (sum % us.elements.size() != 0) throw std::logic_error("Burnside average is not an integer");
  return sum / us.elements.size();
}

Integer count_subset_classes_total(const CycleIndexPoly& z) {
  const Rational v = evaluate_uniform(z, 2);
  if (v.get_den() != 1) throw std::logic_error("subset class count is not an integer");
  return v.get_num();
}

Integer count_subset_classes_total(u64 n) { return count_subset_classes_total(cycle_index_formula(n)); }

SubsetClassCount count_subset_classes_by_size(u64 n, const CycleIndexPoly& z) {
  std::vector<Rational> acc(n + 1, Rational(0));
  for (const auto& [ct, c] : z.terms()) {
    if (ct.degree() != n) throw std::invalid_argument("cycle index term of wrong degree");
    // prod_i (1 + t^i)^{e_i}
    std::vector<Integer> poly(1, Integer(1));
    for (const auto& [i, e] : ct.exponents()) {
      std::vector<Integer> next(poly.size() + i * e, Integer(0));
      for (u64 j = 0; j <= e; ++j) {
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), e, j);
        for (std::size_t k = 0; k < poly.size(); ++k) {
          if (poly[k] != 0) next[k + i * j] += binom * poly[k];
        }
      }
      poly = std::move(next);
    }
    for (std::size_t k = 0; k < poly.size(); ++k) acc[k] += c * Rational(poly[k]);
  }
  SubsetClassCount out;
  out.n = n;
  out.by_k.reserve(n + 1);
  for (auto& v : acc) {
    v.canonicalize();
    if (v.get_den() != 1) throw std::logic_error("subset class count is not an integer");
    out.by_k.push_back(v.get_num());
    out.total += v.get_num();
  }
  return out;
}

SubsetClassCount count_subset_classes_by_size(u64 n) {
  return count_subset_classes_by_size(n, cycle_index_formula(n));
}

SubsetClassCount count_subset_classes_bruteforce(u64 n) {
  if (n == 0 || n > kBruteForceSubsetLimit)
    throw std::invalid_argument("brute-force subset enumeration needs 1 <= n <= " +
                                std::to_string(kBruteForceSubsetLimit));
  const auto us = units(n);
  const std::size_t chunks = (n + 7) / 8;

  // image[u][c][byte]: image of the bits of `byte` placed at chunk c
  std::vector<std::vector<std::array<std::uint32_t, 256>>> image(
      us.elements.size(), std::vector<std::array<std::uint32_t, 256>>(chunks));
  for (std::size_t u = 0; u < us.elements.size(); ++u) {
    const u64 a = us.elements[u] % n;
    for (std::size_t c = 0; c < chunks; ++c) {
      for (unsigned byte = 0; byte < 256; ++byte) {
        std::uint32_t img = 0;
        for (unsigned bit = 0; bit < 8; ++bit) {
          const u64 x = c * 8 + bit;
          if (x < n && (byte >> bit & 1u)) img |= std::uint32_t{1} << (a * x % n);
        }
        image[u][c][byte] = img;
      }
    }
  }

  std::vector<u64> counts(n + 1, 0);
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool least = true;
    for (const auto& table : image) {
      std::uint32_t img = 0;
      for (std::size_t c = 0; c < chunks; ++c) img |= table[c][(mask >> (8 * c)) & 0xffu];
      if (img < mask) {
        least = false;
        break;
      }
    }
    if (least) ++counts[std::popcount(mask)];
  }

  SubsetClassCount out;
  out.n = n;
  for (u64 c : counts) {
    out.by_k.push_back(make_integer(c));
    out.total += make_integer(c);
  }
  return out;
}

}  // namespace unitcycle
