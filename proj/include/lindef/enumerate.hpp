#pragma once

#include <functional>
#include <vector>

#include "lindef/simplicial.hpp"

namespace lindef {

// Streams every simplicial complex on [n] (equivalently every antichain in
// 2^[n]) except the full simplex, in a deterministic order.  The void
// complex {} and the irrelevant complex {∅} are both included.  With
// up_to_symmetry, exactly one representative per S_n-orbit is emitted: the
// one whose sorted facet-mask signature is lexicographically least over all
// vertex permutations.  n <= 5 always; n = 6 only with allow_n6.
void enumerate_complexes(int n, bool up_to_symmetry,
                         const std::function<void(const SimplicialComplex&)>& emit,
                         bool allow_n6 = false);

std::vector<SimplicialComplex> all_complexes(int n, bool up_to_symmetry,
                                             bool allow_n6 = false);

// Lexicographically least signature over all vertex permutations.
std::vector<Mask> canonical_signature(const SimplicialComplex& c);

}  // namespace lindef
