#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace ecodim {

// Subsets of the ground set {1,...,n} as bitmasks: element i <-> bit (i-1).
// Power-set tables are materialized for n up to max_ground_size(), so all
// set operations here are single-word.
using Mask = std::uint32_t;

constexpr int kDefaultMaxGround = 24;
constexpr int kHardMaxGround = 28;

// Cap for power-set materialization. MATROID_MAX_N overrides the default,
// clamped to [1, kHardMaxGround].
int max_ground_size();

constexpr Mask full_mask(int n) { return (Mask{1} << n) - 1; }
constexpr int popcount(Mask m) { return std::popcount(m); }
constexpr bool subset_of(Mask inner, Mask outer) { return (inner & ~outer) == 0; }
constexpr Mask element_bit(int e) { return Mask{1} << (e - 1); }
constexpr bool has_element(Mask m, int e) { return (m >> (e - 1)) & 1u; }

std::vector<int> elements_of(Mask m);
std::string to_string(Mask m);

// True if m is a cyclically contiguous run in {1,...,n} (full and empty sets
// count as intervals).
bool is_cyclic_interval(Mask m, int n);

}  // namespace ecodim
