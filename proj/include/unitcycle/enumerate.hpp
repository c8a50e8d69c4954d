#pragma once

// Burnside / Polya counts derived from the cycle index of U_n on Z_n.

#include <vector>

#include "unitcycle/cycle_poly.hpp"
#include "unitcycle/unit_action.hpp"

namespace unitcycle {

/// Orbit counts of k-subsets of Z_n, k = 0..n.
struct SubsetClassCount {
  u64 n = 0;
  std::vector<Integer> by_k;
  Integer total = 0;
};

/// Number of x in Z_n with a x = x (mod n), counted directly.
u64 fixed_points(u64 n, i64 a);

/// Number of U_n-orbits on Z_n (the number of divisors of n).
u64 count_element_orbits(u64 n);

/// The same count via Burnside: average number of fixed points.
u64 count_element_orbits_burnside(u64 n);

/// Orbits of the power set: the cycle index at x_i = 2.
Integer count_subset_classes_total(u64 n);
Integer count_subset_classes_total(const CycleIndexPoly& z);

/// Coefficients of the cycle index under x_i = 1 + t^i.
SubsetClassCount count_subset_classes_by_size(u64 n);
SubsetClassCount count_subset_classes_by_size(u64 n, const CycleIndexPoly& z);

/// Largest n accepted by count_subset_classes_bruteforce.
inline constexpr u64 kBruteForceSubsetLimit = 24;

/// Enumerates all 2^n subsets and keeps those that are the least image
/// (as a bitmask) under every unit. Independent of any cycle index.
SubsetClassCount count_subset_classes_bruteforce(u64 n);

}  // namespace unitcycle
