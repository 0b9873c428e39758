// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion is exact (integer equalities); there are no tolerances.

#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "lindef/builtins.hpp"
#include "lindef/enumerate.hpp"
#include "lindef/fields.hpp"
#include "lindef/homology.hpp"
#include "lindef/invariants.hpp"
#include "lindef/ld.hpp"

using namespace lindef;

namespace {

struct Criterion {
  std::string label;
  bool pass = true;
  std::vector<std::string> notes;

  explicit Criterion(std::string l) : label(std::move(l)) {}

  void fail(const std::string& why) {
    pass = false;
    if (notes.size() < 12) notes.push_back(why);
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

const std::vector<unsigned long> kChars = {0, 2, 3};

// One corpus member over one field, with everything the aggregated criteria
// need.
struct Record {
  SimplicialComplex complex = SimplicialComplex::irrelevant(1);
  unsigned long ch = 0;
  bool routes_ok = false;       // analyze_ld succeeded for K[Δ] and I_Δ
  std::string routes_error;
  int ld = -1;
  int ld_ideal = -1;
  bool betti_triple_ok = false;
  bool aa_identity_ok = false;  // A∘A = Id
  bool a_kd_ideal_ok = false;   // A(K[Δ]) = I_{Δ∨}
  bool ld_bound_ok = false;     // ld <= n-1 for K[Δ] and I_Δ
  bool is_simplex = false;      // Δ = 2^T for some T
  bool dual_facets_all_nm2 = false;
  bool seq_cm_dual = false;     // K[Δ∨] sequentially CM
  bool seq_cm_self = false;
  bool ld_irr_zero = false;     // ld_irr(K[Δ]) = 0
};

template <class F>
Record make_record(const SimplicialComplex& c, const F& field) {
  Record rec;
  rec.complex = c;
  rec.ch = field.characteristic();
  const int n = c.n();
  try {
    auto ring = stanley_reisner_module(c, field);
    auto ring_ld = analyze_ld(ring);
    auto ideal = ideal_module(c, field);
    auto ideal_ld = analyze_ld(ideal);
    rec.ld = ring_ld.ld;
    rec.ld_ideal = ideal_ld.ld;
    rec.routes_ok = true;

    auto betti = ring_ld.res.betti();
    rec.betti_triple_ok =
        betti == betti_koszul(ring) && betti == hochster_betti(c, field);

    auto am = alexander_functor(ring);
    rec.aa_identity_ok = alexander_functor(am) == ring;
    rec.a_kd_ideal_ok = am == ideal_module(c.alexander_dual(), field);
    rec.ld_bound_ok = rec.ld <= n - 1 && rec.ld_ideal <= n - 1;

    rec.is_simplex = c.facets().size() == 1;
    auto dual = c.alexander_dual();
    rec.dual_facets_all_nm2 = true;
    for (Mask fct : dual.facets())
      if (popcount(fct) != n - 1) rec.dual_facets_all_nm2 = false;
    if (dual.is_void()) rec.dual_facets_all_nm2 = false;
    rec.seq_cm_dual = is_sequentially_cm(stanley_reisner_module(dual, field));
    rec.seq_cm_self = is_sequentially_cm(ring);
    rec.ld_irr_zero = ld_irr(ring) == 0;
  } catch (const Error& e) {
    rec.routes_ok = false;
    rec.routes_error = e.what();
  }
  return rec;
}

std::string where(const Record& r) {
  return complex_brief(r.complex) + " char " + std::to_string(r.ch);
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  std::vector<Criterion> criteria;

  // ---- corpus sweep over all complexes on [n], n <= 5, up to symmetry ----
  std::map<int, std::vector<Record>> corpus;
  for (int n = 1; n <= 5; ++n) {
    enumerate_complexes(n, true, [&](const SimplicialComplex& c) {
      if (c.is_void()) return;
      for (auto ch : kChars)
        corpus[n].push_back(with_field(FieldSpec{ch}, [&](auto f) {
          return make_record(c, f);
        }));
    });
  }

  // 1. n-gon theorem values, both routes, n = 4..8
  {
    Criterion crit("criterion 1: ld(ngon(n)) = n-2 for n = 4..8, both routes, chars {0,2,3}");
    for (int n = 4; n <= 8; ++n) {
      auto gon = ngon(n);
      for (auto ch : kChars) {
        with_field(FieldSpec{ch}, [&](auto f) {
          auto m = stanley_reisner_module(gon, f);
          int lin = ld_via_lin(m);
          int ext = ld_via_ext(m);
          crit.require(lin == n - 2, "lin route: ngon(" + std::to_string(n) +
                                         ") char " + std::to_string(ch) + " gave " +
                                         std::to_string(lin));
          crit.require(ext == n - 2, "ext route: ngon(" + std::to_string(n) +
                                         ") char " + std::to_string(ch) + " gave " +
                                         std::to_string(ext));
          return 0;
        });
      }
    }
    criteria.push_back(crit);
  }

  // 2. exhaustive biconditional on [4] and [5]
  {
    Criterion crit("criterion 2: ld = n-2 exactly for the n-gon class on [4], [5]; ld <= max{1, n-2}");
    for (int n : {4, 5}) {
      std::map<unsigned long, std::size_t> extremal;
      for (const auto& rec : corpus[n]) {
        if (!rec.routes_ok) {
          crit.fail("route failure at " + where(rec));
          continue;
        }
        bool is_extremal = rec.ld == n - 2;
        if (is_extremal) ++extremal[rec.ch];
        crit.require(is_extremal == rec.complex.is_ngon(),
                     "biconditional fails at " + where(rec));
        crit.require(rec.ld <= std::max(1, n - 2), "bound fails at " + where(rec));
      }
      for (auto ch : kChars)
        crit.require(extremal[ch] == 1, "expected exactly one extremal class on [" +
                                            std::to_string(n) + "] char " +
                                            std::to_string(ch));
    }
    criteria.push_back(crit);
  }

  // 3. characteristic dependence at the 6-vertex projective plane
  {
    Criterion crit("criterion 3: ld(rp2_6) = 3 (char 2), 1 (char 0); ld_irr = 2 (char 2), 0 (char 0)");
    auto c = rp2_6();
    crit.require(ld_of_complex(c, FieldSpec{2}) == 3, "ld at char 2");
    crit.require(ld_of_complex(c, FieldSpec{0}) == 1, "ld at char 0");
    QField q;
    FpField f2(2);
    crit.require(ld_irr(stanley_reisner_module(c, q)) == 0, "ld_irr at char 0");
    crit.require(ld_irr(stanley_reisner_module(c, f2)) == 2, "ld_irr at char 2");
    criteria.push_back(crit);
  }

  // 4. torus sharpness
  {
    Criterion crit("criterion 4: dual(torus_7): indeg = 4 and ld = 3 = 7-4, chars {0,2,3}");
    auto dual = torus_7().alexander_dual();
    crit.require(dual.indeg() == 4, "indeg(dual) != 4");
    for (auto ch : kChars)
      crit.require(ld_of_complex(dual, FieldSpec{ch}) == 3,
                   "ld != 3 at char " + std::to_string(ch));
    criteria.push_back(crit);
  }

  // 5. sharp-family sweep
  {
    Criterion crit("criterion 5: sharp_family(n,d), 4<=n<=7, 2<=d<=n-2: indeg = d, ld = n-d, beta_{n-d,n} = 1, beta_{n-d-1,n-1} = 0");
    for (int n = 4; n <= 7; ++n) {
      for (int d = 2; d <= n - 2; ++d) {
        auto c = sharp_family(n, d);
        std::string tag = "sharp_family(" + std::to_string(n) + "," + std::to_string(d) + ")";
        crit.require(c.indeg() == d, tag + ": indeg");
        for (auto ch : kChars) {
          with_field(FieldSpec{ch}, [&](auto f) {
            auto m = stanley_reisner_module(c, f);
            crit.require(analyze_ld(m).ld == n - d,
                         tag + ": ld char " + std::to_string(ch));
            auto betti = betti_koszul(m);
            crit.require(betti.at(n - d, full_mask(n)) == 1,
                         tag + ": beta_{n-d,n} char " + std::to_string(ch));
            auto z = betti.z_graded();
            crit.require(z.count({n - d - 1, n - 1}) == 0,
                         tag + ": beta_{n-d-1,n-1} char " + std::to_string(ch));
            return 0;
          });
        }
      }
    }
    criteria.push_back(crit);
  }

  // 6. route agreement across the corpus
  {
    Criterion crit("criterion 6: ld_via_lin = ld_via_ext with per-strand equality, K[Δ] and I_Δ, n <= 5 corpus x chars {0,2,3}");
    for (const auto& [n, recs] : corpus)
      for (const auto& rec : recs)
        crit.require(rec.routes_ok, "disagreement at " + where(rec) + ": " + rec.routes_error);
    criteria.push_back(crit);
  }

  // 7. Betti triple agreement
  {
    Criterion crit("criterion 7: resolution = Koszul = Hochster Betti tables on the corpus");
    for (const auto& [n, recs] : corpus)
      for (const auto& rec : recs)
        if (rec.routes_ok)
          crit.require(rec.betti_triple_ok, "tables disagree at " + where(rec));
    criteria.push_back(crit);
  }

  // 8. structural identities
  {
    Criterion crit("criterion 8: A∘A = Id, A(K[Δ]) = I_{Δ∨}, A(K[F]) = S(-F^c), depth = n - proj_dim, ld(K[∂Δ]) = 1, ld <= n-1");
    for (const auto& [n, recs] : corpus)
      for (const auto& rec : recs) {
        if (!rec.routes_ok) continue;
        crit.require(rec.aa_identity_ok, "A∘A != Id at " + where(rec));
        crit.require(rec.a_kd_ideal_ok, "A(K[Δ]) != I_dual at " + where(rec));
        crit.require(rec.ld_bound_ok, "ld > n-1 at " + where(rec));
      }
    QField q;
    for (int n = 2; n <= 5; ++n)
      for (Mask deg = 0; deg < (Mask{1} << n); ++deg)
        crit.require(alexander_functor(simplex_module(n, deg, q)) ==
                         free_module(n, complement_in(deg, n), q),
                     "A(K[F]) != S(-F^c) at n " + std::to_string(n));
    for (int n : {3, 4, 5}) {
      for (auto ch : kChars) {
        crit.require(ld_of_complex(boundary_complex(n), FieldSpec{ch}) == 1,
                     "ld(K[2^[n] - [n]]) != 1 at n " + std::to_string(n));
        with_field(FieldSpec{ch}, [&](auto f) {
          auto m = stanley_reisner_module(ngon(std::max(n, 4)), f);
          auto res = minimal_free_resolution(m);
          crit.require(depth_from_resolution(res) == m.n() - res.length(),
                       "Auslander-Buchsbaum route mismatch");
          return 0;
        });
      }
    }
    criteria.push_back(crit);
  }

  // 9. the §5 machinery on the n = 4, 5 corpus
  {
    Criterion crit("criterion 9: top-strand condition equivalence (indeg >= 2) and strand-map rank agreement (1-dimensional members)");
    for (int n : {4, 5}) {
      for (const auto& rec : corpus[n]) {
        const auto& c = rec.complex;
        if (c.is_full_simplex() || c.is_void()) continue;
        if (c.indeg() < 2) continue;
        FieldSpec field{rec.ch};
        auto top = top_strand_check(c, field);
        bool equivalent = (top.h_lin2_top == top.h_q_pos) &&
                          (top.h_q_pos == top.ngon_equiv_ok);
        crit.require(equivalent, "top-strand conditions split at " + where(rec));
        if (c.dim() == 1)
          crit.require(hochster_strand_map_check(c, field),
                       "strand map check failed at " + where(rec));
      }
    }
    criteria.push_back(crit);
  }

  // 10. sequential Cohen-Macaulay bridges
  {
    Criterion crit("criterion 10: ld <= 1 iff K[Δ∨] seq-CM; ld = 0 iff dual facets all have dim n-2; ld >= 1 iff Δ != 2^T; ld_irr = 0 iff K[Δ] seq-CM");
    for (const auto& [n, recs] : corpus)
      for (const auto& rec : recs) {
        if (!rec.routes_ok) continue;
        crit.require((rec.ld <= 1) == rec.seq_cm_dual,
                     "seq-CM bridge fails at " + where(rec));
        crit.require((rec.ld == 0) == rec.dual_facets_all_nm2,
                     "facet-dimension bridge fails at " + where(rec));
        crit.require((rec.ld >= 1) == !rec.is_simplex,
                     "simplex characterization fails at " + where(rec));
        crit.require(rec.ld_irr_zero == rec.seq_cm_self,
                     "ld_irr/seq-CM bridge fails at " + where(rec));
      }
    criteria.push_back(crit);
  }

  // topological-invariance probe (the fixed-family substitute for the full
  // homeomorphism-invariance statement)
  {
    Criterion crit("topology probe: constant ld within each fixed same-space family, per characteristic");
    for (auto ch : kChars) {
      auto probe = topological_invariance_probe(FieldSpec{ch});
      crit.require(probe.ok, "family value not constant at char " + std::to_string(ch));
    }
    criteria.push_back(crit);
  }

  std::size_t passed = 0;
  for (const auto& crit : criteria) {
    std::cout << (crit.pass ? "[PASS] " : "[FAIL] ") << crit.label << "\n";
    for (const auto& note : crit.notes) std::cout << "       - " << note << "\n";
    if (crit.pass) ++passed;
  }
  auto secs = std::chrono::duration_cast<std::chrono::seconds>(clock::now() - t0);
  std::cout << "acceptance: " << passed << "/" << criteria.size() << " passed in "
            << secs.count() << "s\n";
  return passed == criteria.size() ? 0 : 1;
}
