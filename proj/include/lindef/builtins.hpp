#pragma once

#include <string>
#include <vector>

#include "lindef/simplicial.hpp"

namespace lindef {

SimplicialComplex ngon(int n);
SimplicialComplex boundary_complex(int n);  // 2^[n] minus the top face

// Boundary of the cyclic polytope C(m,d) by Gale's evenness condition: the
// d-subsets of [m] whose maximal runs of consecutive elements touching
// neither 1 nor m all have even length.  A triangulation of S^{d-1}.
SimplicialComplex cyclic_sphere(int m, int d);

// cyclic_sphere(n,d) united with the (d-2)-skeleton of the full simplex.
SimplicialComplex sharp_family(int n, int d);

SimplicialComplex rp2_6();    // 6-vertex real projective plane
SimplicialComplex torus_7();  // 7-vertex torus

// Parses "name" or "name:p1,p2" against the builtin registry.
SimplicialComplex builtin_complex(const std::string& spec);
std::vector<std::string> builtin_names();

}  // namespace lindef
