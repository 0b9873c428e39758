#pragma once

#include <vector>

#include "lindef/matrix.hpp"
#include "lindef/simplicial.hpp"

namespace lindef {

// Boundary maps of the augmented chain complex of Δ over f.  Position k of
// the complex is spanned by the faces of cardinality k (so position 0 is the
// empty face), and maps[k] is ∂: C_{k+1} -> C_k with the usual alternating
// signs.  The void complex yields no positions at all.
template <class F>
std::vector<Matrix<F>> augmented_chain_maps(const SimplicialComplex& c, const F& f) {
  auto levels = c.faces_by_card();
  std::vector<Matrix<F>> maps;
  if (levels.size() < 2) return maps;
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    const auto& lo = levels[k];
    const auto& hi = levels[k + 1];
    Matrix<F> d(lo.size(), hi.size(), f);
    for (std::size_t j = 0; j < hi.size(); ++j) {
      Mask face = hi[j];
      for (int v : mask_vertices(face)) {
        Mask sub = without_vertex(face, v);
        auto it = std::lower_bound(lo.begin(), lo.end(), sub);
        std::size_t i = static_cast<std::size_t>(it - lo.begin());
        auto sign = (count_below(face, v) % 2 == 0) ? f.one() : f.neg(f.one());
        d.at(i, j) = sign;
      }
    }
    maps.push_back(std::move(d));
  }
  return maps;
}

// Reduced cohomology dimensions over f, indices -1..n-1 (entry k holds
// H̃^{k-1}).  Field coefficients make these equal to reduced homology dims,
// so they are computed from the augmented chain complex.
template <class F>
std::vector<std::size_t> reduced_cohomology_dims(const SimplicialComplex& c,
                                                 const F& f) {
  std::vector<std::size_t> out(c.n() + 1, 0);
  if (c.is_void()) return out;
  if (c.is_irrelevant()) {
    out[0] = 1;  // {∅} has H̃^{-1} = K
    return out;
  }
  auto maps = augmented_chain_maps(c, f);
  auto dims = complex_homology_dims(maps, f);
  for (std::size_t k = 0; k < dims.size() && k < out.size(); ++k) out[k] = dims[k];
  return out;
}

// Convenience accessor: dim H̃^i(Δ; f) for i in [-1, n-1].
template <class F>
std::size_t reduced_cohomology(const SimplicialComplex& c, int i, const F& f) {
  if (i < -1 || i >= c.n()) return 0;
  return reduced_cohomology_dims(c, f)[i + 1];
}

// Hochster's formula: beta_{i,F}(K[Δ]) = dim H̃^{|F|-i-1}(Δ_F; f) for every
// F ⊆ [n].  Independent of any free resolution; used as the combinatorial
// oracle against the Koszul and syzygy routes.
template <class F>
BettiTable hochster_betti(const SimplicialComplex& c, const F& f) {
  BettiTable table(c.n());
  if (c.is_void())
    throw EmptyComplex("hochster_betti: void complex has no Stanley-Reisner ring");
  const Mask full = full_mask(c.n());
  for (Mask deg = 0; deg <= full; ++deg) {
    auto h = reduced_cohomology_dims(c.induced(deg), f);
    int card = popcount(deg);
    // H̃^{card-i-1} lives at index card-i in h
    for (int i = 0; i <= card; ++i) {
      std::size_t v = h[card - i];
      if (v) table.add(i, deg, v);
    }
  }
  return table;
}

}  // namespace lindef
