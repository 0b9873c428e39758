#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lindef/fieldspec.hpp"
#include "lindef/simplicial.hpp"

namespace lindef {

// Everything the pipeline knows about one complex over one field, with the
// two ld routes cross-checked (a disagreement throws OracleMismatch).
struct InvariantReport {
  SimplicialComplex complex = SimplicialComplex::irrelevant(1);
  std::string source;
  unsigned long characteristic = 0;
  std::optional<int> indeg;  // nullopt for the full simplex
  int ld = 0;
  int ld_route_lin = 0;
  int ld_route_ext = 0;
  std::map<int, std::optional<int>> per_strand;     // l -> max nonzero position
  std::map<int, std::optional<int>> depth_profile;  // i -> depth Ext^{n-i}(A(M)); nullopt = +inf
  std::optional<int> ld_ideal;                      // ld_S(I_Δ); nullopt for the full simplex
  bool is_ngon = false;
  bool is_cm = false;
  bool is_seq_cm = false;
  bool bound_ideal_ok = true;  // ld_S(I_Δ) <= max{0, n - indeg - 1}
  bool bound_indeg_ok = true;  // ld <= max{1, n - indeg}
  bool bound_global_ok = true; // ld <= max{1, n-3} if indeg = 1, else <= max{1, n-2}

  nlohmann::json to_json() const;
};

InvariantReport ld_delta(const SimplicialComplex& c, const FieldSpec& field);

// ld(Δ) with both routes asserted equal (no full report).
int ld_of_complex(const SimplicialComplex& c, const FieldSpec& field);

// The three equivalent top-strand conditions, evaluated independently:
// H_{n-2}(lin_2) != 0, H_{n-3}(Q_•) != 0, and ld(Δ) = n-2 (the condition
// equivalent to Δ being an n-gon).  Requires n >= 4 and indeg >= 2.
struct TopStrandCheck {
  bool h_lin2_top = false;
  bool h_q_pos = false;
  bool ngon_equiv_ok = false;
};
TopStrandCheck top_strand_check(const SimplicialComplex& c, const FieldSpec& field);

// Compares the top piece of the 2-linear strand differential from the
// resolution engine against the restriction maps H̃^1(Δ) -> H̃^1(Δ_{-i})
// (rank equality).  When Δ has a cycle of length <= n-1 the assembled map
// must additionally be injective.  Requires Δ 1-dimensional, indeg >= 2,
// n >= 4.
bool hochster_strand_map_check(const SimplicialComplex& c, const FieldSpec& field);

struct BoundsCheck {
  bool ideal_bound_ok = true;
  bool indeg_bound_ok = true;
  bool global_bound_ok = true;
  bool squarefree_bound_ok = true;  // ld <= n-1 for both K[Δ] and I_Δ
  bool ideal_shift_ok = true;       // ld >= 1 implies ld = ld_S(I_Δ) + 1
  bool all_ok() const {
    return ideal_bound_ok && indeg_bound_ok && global_bound_ok && squarefree_bound_ok && ideal_shift_ok;
  }
};
BoundsCheck verify_bounds(const SimplicialComplex& c, const FieldSpec& field);

// ld(Δ) = ld(Δ * {v}) for an unused vertex v.  When Δ uses all of [n] (or
// force_extend is set) the ambient grows by one and the cone is taken over
// the new vertex.
bool cone_invariance_check(const SimplicialComplex& c, const FieldSpec& field,
                           bool force_extend = false);

// Fixed same-space families: the duals of the m-gons (m = 4,5,6) all realize
// S^1, the duals of cyclic_sphere(5,3) and cyclic_sphere(6,3) realize S^2;
// within each family ld must be constant (per characteristic).
struct TopologyProbe {
  bool ok = false;
  int circle_value = -1;
  int sphere_value = -1;
};
TopologyProbe topological_invariance_probe(const FieldSpec& field);

// Exhaustive verification of the extremal characterization on [n]: ld = n-2
// exactly for the n-gons, and ld <= max{1, n-2} throughout.
struct NgonScan {
  int n = 0;
  unsigned long characteristic = 0;
  std::size_t complexes_scanned = 0;
  std::size_t extremal_count = 0;  // complexes with ld = n-2
  bool extremal_all_ngons = true;
  bool ngons_all_extremal = true;
  bool bound_ok = true;
  bool ok() const {
    return extremal_all_ngons && ngons_all_extremal && bound_ok && extremal_count > 0;
  }
};
NgonScan ngon_theorem_scan(int n, const FieldSpec& field, bool up_to_symmetry = true,
                           bool allow_n6 = false);

// Named verification suites behind the CLI.
struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<std::string> details;
};
SuiteResult run_suite(const std::string& name, int n,
                      const std::vector<unsigned long>& characteristics,
                      bool allow_n6 = false);
std::vector<std::string> suite_names();

// Betti data for the CLI: the three routes with agreement flags.
struct BettiReport {
  unsigned long characteristic = 0;
  BettiTable table = BettiTable(1);
  bool routes_agree = false;  // resolution degrees == Koszul == Hochster
  int proj_dim = 0;
  int depth = 0;
  nlohmann::json to_json() const;
};
BettiReport compute_betti(const SimplicialComplex& c, const FieldSpec& field);

// Debug dump of the minimal free resolution of K[Δ].
nlohmann::json resolution_dump(const SimplicialComplex& c, const FieldSpec& field);

}  // namespace lindef
