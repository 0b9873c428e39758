#pragma once

#include <string>
#include <map>
#include <utility>
#include <vector>

#include "lindef/errors.hpp"
#include "lindef/subsets.hpp"

namespace lindef {

// Graded Betti numbers beta_{i,F} indexed by homological degree and
// squarefree degree; only nonzero entries are stored.
class BettiTable {
 public:
  explicit BettiTable(int n) : n_(n) {}

  int n() const { return n_; }

  void add(int i, Mask deg, std::size_t mult) {
    if (mult == 0) return;
    entries_[{i, deg}] += mult;
  }

  std::size_t at(int i, Mask deg) const {
    auto it = entries_.find({i, deg});
    return it == entries_.end() ? 0 : it->second;
  }

  const std::map<std::pair<int, Mask>, std::size_t>& entries() const {
    return entries_;
  }

  // Z-graded aggregation beta_{i,j} = sum over |F| = j.
  std::map<std::pair<int, int>, std::size_t> z_graded() const {
    std::map<std::pair<int, int>, std::size_t> out;
    for (const auto& [key, mult] : entries_)
      out[{key.first, popcount(key.second)}] += mult;
    return out;
  }

  // Largest homological degree with a nonzero entry; kMinusInfinity if empty.
  int max_homological_degree() const {
    int m = kMinusInfinity;
    for (const auto& [key, mult] : entries_)
      if (mult > 0 && key.first > m) m = key.first;
    return m;
  }

  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& [key, mult] : entries_) t += mult;
    return t;
  }

  bool operator==(const BettiTable& o) const {
    return n_ == o.n_ && entries_ == o.entries_;
  }

 private:
  int n_;
  std::map<std::pair<int, Mask>, std::size_t> entries_;
};

// A simplicial complex on [n], stored by its facets (an antichain of
// subsets).  Downward closure is implicit.  The void complex {} (no faces at
// all) and the irrelevant complex {∅} are distinct values: the former has no
// faces, the latter has the single face ∅.
class SimplicialComplex {
 public:
  static SimplicialComplex from_facets(int n,
                                       const std::vector<std::vector<int>>& facets);
  static SimplicialComplex from_facet_masks(int n, std::vector<Mask> facets);
  static SimplicialComplex void_complex(int n);
  static SimplicialComplex irrelevant(int n);    // {∅}
  static SimplicialComplex full_simplex(int n);  // 2^[n]

  int n() const { return n_; }
  bool is_void() const { return !has_faces_; }
  bool is_irrelevant() const { return has_faces_ && facets_.size() == 1 && facets_[0] == 0; }
  bool is_full_simplex() const {
    return has_faces_ && facets_.size() == 1 && facets_[0] == full_mask(n_);
  }

  // Facets in increasing mask order; empty for the void complex.
  const std::vector<Mask>& facets() const { return facets_; }

  bool contains(Mask face) const;

  // ver(Δ) = union of facets.
  Mask vertices() const;

  // max |facet| - 1; -1 for {∅}; kMinusInfinity for the void complex.
  int dim() const;

  // All faces grouped by cardinality: result[k] = faces with |F| = k, each
  // list in increasing mask order.  Empty outer vector for the void complex.
  std::vector<std::vector<Mask>> faces_by_card() const;

  std::size_t face_count() const;

  std::vector<Mask> minimal_nonfaces() const;
  int indeg() const;  // min |F| over nonfaces; throws FullSimplex

  SimplicialComplex alexander_dual() const;
  SimplicialComplex induced(Mask keep) const;
  SimplicialComplex link(Mask face) const;
  SimplicialComplex skeleton(int i) const;
  SimplicialComplex join(const SimplicialComplex& other) const;
  SimplicialComplex cone(int vertex) const;

  bool is_ngon() const;

  // Same facets viewed in a larger ambient vertex set.
  SimplicialComplex reembedded(int new_n) const;

  // Image under a permutation of [n]; perm[v-1] is the image of vertex v.
  SimplicialComplex relabeled(const std::vector<int>& perm) const;

  // Facet-set signature: sorted facet masks (void -> empty list, so void and
  // {∅} stay distinct).  Orbit-canonical form is the lexicographic minimum
  // of the signature over all vertex permutations.
  std::vector<Mask> signature() const { return facets_; }

  bool operator==(const SimplicialComplex& o) const {
    return n_ == o.n_ && has_faces_ == o.has_faces_ && facets_ == o.facets_;
  }

 private:
  SimplicialComplex(int n, std::vector<Mask> facets, bool has_faces);

  int n_;
  std::vector<Mask> facets_;
  bool has_faces_;
};

// Shortest cycle length of a 1-dimensional complex's edge graph; 0 if acyclic.
int girth(const SimplicialComplex& c);

std::string complex_brief(const SimplicialComplex& c);

}  // namespace lindef
