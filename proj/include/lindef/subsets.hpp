#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace lindef {

// Subsets of [n] = {1,...,n} as bit masks; vertex i <-> bit (i-1).
// Ambient size is capped at 20 so that 2^n tables stay in memory.
using Mask = std::uint32_t;

inline constexpr int kMaxVertices = 20;

// Sentinels for dimension-like quantities of degenerate modules.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();
inline constexpr int kPlusInfinity = std::numeric_limits<int>::max();

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) { return (Mask{1} << n) - 1; }

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

inline Mask complement_in(Mask a, int n) { return full_mask(n) & ~a; }

inline bool contains_vertex(Mask m, int v) { return (m >> (v - 1)) & 1u; }

inline Mask with_vertex(Mask m, int v) { return m | (Mask{1} << (v - 1)); }

inline Mask without_vertex(Mask m, int v) { return m & ~(Mask{1} << (v - 1)); }

// #{ j in m | j < i }, the position sign exponent used by wedge bases.
inline int count_below(Mask m, int i) {
  return popcount(m & ((Mask{1} << (i - 1)) - 1));
}

inline std::vector<int> mask_vertices(Mask m) {
  std::vector<int> out;
  while (m) {
    int b = std::countr_zero(m);
    out.push_back(b + 1);
    m &= m - 1;
  }
  return out;
}

inline std::string mask_to_string(Mask m) {
  std::string s = "[";
  bool first = true;
  for (int v : mask_vertices(m)) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "]";
}

// Visits every submask of m, including 0 and m itself.
template <class Fn>
void for_each_submask(Mask m, Fn&& fn) {
  Mask s = m;
  while (true) {
    fn(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

}  // namespace lindef
