#include "lindef/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace lindef {

namespace {

// All permutations of [n] as mask translation tables: table[mask] = image.
std::vector<std::vector<Mask>> mask_permutations(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<Mask>> tables;
  do {
    std::vector<Mask> table(std::size_t{1} << n, 0);
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
      Mask img = 0;
      for (int v : mask_vertices(m)) img = with_vertex(img, perm[v - 1]);
      table[m] = img;
    }
    tables.push_back(std::move(table));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return tables;
}

std::vector<Mask> apply_table(const std::vector<Mask>& sig,
                              const std::vector<Mask>& table) {
  std::vector<Mask> out;
  out.reserve(sig.size());
  for (Mask m : sig) out.push_back(table[m]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Mask> canonical_signature(const SimplicialComplex& c) {
  auto tables = mask_permutations(c.n());
  std::vector<Mask> best = c.signature();
  for (const auto& t : tables) best = std::min(best, apply_table(c.signature(), t));
  return best;
}

void enumerate_complexes(int n, bool up_to_symmetry,
                         const std::function<void(const SimplicialComplex&)>& emit,
                         bool allow_n6) {
  if (n < 1 || n > 6 || (n == 6 && !allow_n6))
    throw BadParams("enumerate_complexes: n must be 1..5 (6 with opt-in)");

  const std::size_t total = std::size_t{1} << n;
  // subsets ordered by (cardinality, value); a set may join the family only
  // when all its maximal proper subsets already did (downward closure)
  std::vector<Mask> order;
  for (int k = 0; k <= n; ++k)
    for (Mask m = 0; m < total; ++m)
      if (popcount(m) == k) order.push_back(m);

  std::vector<std::vector<Mask>> perm_tables;
  if (up_to_symmetry) perm_tables = mask_permutations(n);

  std::vector<char> in(total, 0);

  auto facets_of = [&]() {
    std::vector<Mask> fs;
    for (Mask m = 0; m < total; ++m) {
      if (!in[m]) continue;
      bool maximal = true;
      for (int v = 1; v <= n && maximal; ++v)
        if (!contains_vertex(m, v) && in[with_vertex(m, v)]) maximal = false;
      if (maximal) fs.push_back(m);
    }
    return fs;
  };

  auto handle_leaf = [&]() {
    if (in[full_mask(n)]) return;  // skip 2^[n]
    auto fs = facets_of();
    auto complex = fs.empty() && !in[0]
                       ? SimplicialComplex::void_complex(n)
                       : SimplicialComplex::from_facet_masks(n, fs);
    if (up_to_symmetry) {
      const auto sig = complex.signature();
      for (const auto& t : perm_tables)
        if (apply_table(sig, t) < sig) return;  // not the canonical member
    }
    emit(complex);
  };

  auto dfs = [&](auto&& self, std::size_t k) -> void {
    if (k == order.size()) {
      handle_leaf();
      return;
    }
    Mask m = order[k];
    self(self, k + 1);  // exclude m
    bool closed = true;
    Mask rest = m;
    while (rest && closed) {
      Mask bit = rest & (~rest + 1);
      if (!in[m & ~bit]) closed = false;
      rest &= rest - 1;
    }
    if (closed) {
      in[m] = 1;
      self(self, k + 1);  // include m
      in[m] = 0;
    }
  };
  dfs(dfs, 0);
}

std::vector<SimplicialComplex> all_complexes(int n, bool up_to_symmetry,
                                             bool allow_n6) {
  std::vector<SimplicialComplex> out;
  enumerate_complexes(
      n, up_to_symmetry, [&](const SimplicialComplex& c) { out.push_back(c); },
      allow_n6);
  return out;
}

}  // namespace lindef
