#include "lindef/invariants.hpp"

#include <algorithm>

#include "lindef/builtins.hpp"
#include "lindef/complex_io.hpp"
#include "lindef/enumerate.hpp"
#include "lindef/fields.hpp"
#include "lindef/homology.hpp"
#include "lindef/ld.hpp"

namespace lindef {

namespace {

nlohmann::json opt_to_json(const std::optional<int>& v) {
  if (!v) return nullptr;
  return *v;
}

template <class F>
InvariantReport make_report(const SimplicialComplex& c, const F& field) {
  if (c.is_void()) throw EmptyComplex("ld_delta: void complex");
  const int n = c.n();
  InvariantReport rep;
  rep.complex = c;
  rep.source = complex_brief(c);
  rep.characteristic = field.characteristic();

  auto m = stanley_reisner_module(c, field);
  auto analysis = analyze_ld(m);
  rep.ld = analysis.ld;
  rep.ld_route_lin = analysis.ld;
  rep.ld_route_ext = analysis.ld;
  rep.per_strand = analysis.strand_max;
  for (int i = 0; i <= n; ++i) rep.depth_profile[i] = analysis.ext_depth[n - i];
  rep.is_ngon = c.is_ngon();
  rep.is_cm = depth_from_resolution(analysis.res) == m.krull_dim();
  rep.is_seq_cm = true;
  for (int i = 0; i <= n && rep.is_seq_cm; ++i) {
    auto e = ext_module(analysis.res, n - i);
    if (e.is_zero()) continue;
    if (e.krull_dim() != i || depth(e) != i) rep.is_seq_cm = false;
  }

  if (c.is_full_simplex()) return rep;  // indeg and the bounds need I_Δ != 0

  rep.indeg = c.indeg();
  auto ideal = ideal_module(c, field);
  auto ideal_analysis = analyze_ld(ideal);
  rep.ld_ideal = ideal_analysis.ld;
  const int d = *rep.indeg;
  rep.bound_ideal_ok = *rep.ld_ideal <= std::max(0, n - d - 1);
  rep.bound_indeg_ok = rep.ld <= std::max(1, n - d);
  rep.bound_global_ok =
      (d == 1) ? rep.ld <= std::max(1, n - 3) : rep.ld <= std::max(1, n - 2);
  return rep;
}

template <class F>
int ld_of(const SimplicialComplex& c, const F& field) {
  if (c.is_void()) throw EmptyComplex("ld: void complex");
  return analyze_ld(stanley_reisner_module(c, field)).ld;
}

}  // namespace

nlohmann::json InvariantReport::to_json() const {
  nlohmann::json j;
  j["complex"] = complex_to_json(complex);
  if (!source.empty()) j["source"] = source;
  j["char"] = characteristic;
  j["indeg"] = opt_to_json(indeg);
  j["ld"] = ld;
  j["routes"] = {{"lin", ld_route_lin}, {"ext", ld_route_ext}};
  nlohmann::json strands = nlohmann::json::object();
  for (const auto& [l, v] : per_strand) strands[std::to_string(l)] = opt_to_json(v);
  j["per_strand"] = strands;
  nlohmann::json prof = nlohmann::json::object();
  for (const auto& [i, v] : depth_profile) prof[std::to_string(i)] = opt_to_json(v);
  j["depth_profile"] = prof;
  j["ld_ideal"] = opt_to_json(ld_ideal);
  j["flags"] = {{"is_ngon", is_ngon},
                {"is_CM", is_cm},
                {"is_seq_CM", is_seq_cm},
                {"bound_ideal_ok", bound_ideal_ok},
                {"bound_indeg_ok", bound_indeg_ok},
                {"bound_global_ok", bound_global_ok}};
  return j;
}

InvariantReport ld_delta(const SimplicialComplex& c, const FieldSpec& field) {
  return with_field(field, [&](auto f) { return make_report(c, f); });
}

int ld_of_complex(const SimplicialComplex& c, const FieldSpec& field) {
  return with_field(field, [&](auto f) { return ld_of(c, f); });
}

TopStrandCheck top_strand_check(const SimplicialComplex& c, const FieldSpec& field) {
  if (c.is_void()) throw EmptyComplex("top_strand_check: void complex");
  const int n = c.n();
  if (n < 4) throw PreconditionFailed("top_strand_check: needs n >= 4");
  if (c.is_full_simplex() || c.indeg() < 2)
    throw PreconditionFailed("top_strand_check: needs indeg >= 2");
  return with_field(field, [&](auto f) {
    auto m = stanley_reisner_module(c, f);
    auto res = minimal_free_resolution(m);
    TopStrandCheck out;

    auto pos2 = strand_homology_positions(res, 2);
    out.h_lin2_top = pos2.count(n - 2) != 0;

    // Q_i keeps the generators of degree |F| <= i+1
    const auto& cx = res.complex();
    using FF = decltype(f);
    FreeComplex<FF> q(n, f);
    std::vector<std::vector<std::size_t>> keep(cx.positions());
    for (std::size_t p = 0; p < cx.positions(); ++p) {
      std::vector<Mask> g;
      for (std::size_t k = 0; k < cx.gens[p].size(); ++k)
        if (popcount(cx.gens[p][k]) <= static_cast<int>(p) + 1) {
          keep[p].push_back(k);
          g.push_back(cx.gens[p][k]);
        }
      q.gens.push_back(std::move(g));
    }
    for (std::size_t p = 0; p + 1 < cx.positions(); ++p) {
      Matrix<FF> d(keep[p].size(), keep[p + 1].size(), f);
      for (std::size_t r = 0; r < keep[p].size(); ++r)
        for (std::size_t cc = 0; cc < keep[p + 1].size(); ++cc)
          d.at(r, cc) = cx.diffs[p].at(keep[p][r], keep[p + 1][cc]);
      q.diffs.push_back(std::move(d));
    }
    auto qpos = q.nonzero_homology_positions();
    out.h_q_pos = qpos.count(n - 3) != 0;

    out.ngon_equiv_ok = analyze_ld(m).ld == n - 2;
    return out;
  });
}

bool hochster_strand_map_check(const SimplicialComplex& c, const FieldSpec& field) {
  if (c.is_void()) throw EmptyComplex("hochster_strand_map_check: void complex");
  const int n = c.n();
  if (n < 4 || c.dim() != 1)
    throw PreconditionFailed("hochster_strand_map_check: needs a 1-dimensional complex, n >= 4");
  if (c.is_full_simplex() || c.indeg() < 2)
    throw PreconditionFailed("hochster_strand_map_check: needs indeg >= 2");
  return with_field(field, [&](auto f) {
    using FF = decltype(f);
    auto m = stanley_reisner_module(c, f);
    auto res = minimal_free_resolution(m);
    auto s2 = strand(res, 2);

    // engine matrix: the strand-2 differential between positions n-2 and n-3
    Matrix<FF> engine(0, 0, f);
    if (s2.positions() > static_cast<std::size_t>(n - 2))
      engine = s2.diffs[n - 3];
    else if (s2.positions() > static_cast<std::size_t>(n - 3))
      engine = Matrix<FF>(s2.gens[n - 3].size(), 0, f);

    // H̃^1 as a homology space of the cochain complex (1-dimensional complex:
    // every 1-cochain is a cocycle)
    auto h1_space = [&](const SimplicialComplex& cc)
        -> std::pair<HomologySpace<FF>, std::vector<Mask>> {
      auto levels = cc.faces_by_card();
      std::vector<Mask> edges = levels.size() > 2 ? levels[2] : std::vector<Mask>{};
      std::vector<Mask> verts = levels.size() > 1 ? levels[1] : std::vector<Mask>{};
      auto chains = augmented_chain_maps(cc, f);
      Matrix<FF> din = chains.size() > 1 ? transpose(chains[1], f)
                                         : Matrix<FF>(edges.size(), verts.size(), f);
      Matrix<FF> dout(0, edges.size(), f);
      return {HomologySpace<FF>(dout, din, f), edges};
    };

    auto [h1, edges] = h1_space(c);
    const std::size_t h1dim = h1.dim();

    // Hochster: the strand-2 generators at position n-2 realize H̃^1(Δ)
    if (engine.cols() != h1dim) return false;

    std::vector<HomologySpace<FF>> subspaces;
    std::vector<std::vector<Mask>> subedges;
    std::size_t rows_total = 0;
    for (int i = 1; i <= n; ++i) {
      auto sub = c.induced(complement_in(Mask{1} << (i - 1), n));
      auto [hi, se] = h1_space(sub);
      rows_total += hi.dim();
      subspaces.push_back(std::move(hi));
      subedges.push_back(std::move(se));
    }
    if (engine.rows() != rows_total) return false;

    // plain restriction of edge cochains (the wedge-basis signs are a
    // diagonal change of basis and do not affect ranks)
    Matrix<FF> emap(rows_total, h1dim, f);
    for (std::size_t k = 0; k < h1dim; ++k) {
      auto rep = h1.representative(k);
      std::size_t row0 = 0;
      for (int i = 0; i < n; ++i) {
        const auto& se = subedges[i];
        std::vector<typename FF::Elem> restricted(se.size(), f.zero());
        for (std::size_t e = 0; e < se.size(); ++e) {
          auto it = std::lower_bound(edges.begin(), edges.end(), se[e]);
          restricted[e] = rep[static_cast<std::size_t>(it - edges.begin())];
        }
        auto coords = subspaces[i].coords(restricted);
        for (std::size_t r = 0; r < coords.size(); ++r)
          emap.at(row0 + r, k) = coords[r];
        row0 += subspaces[i].dim();
      }
    }

    std::size_t rank_engine = rank(engine, f);
    std::size_t rank_emap = rank(emap, f);
    if (rank_engine != rank_emap) return false;

    int g = girth(c);
    if (g >= 3 && g <= n - 1 && h1dim > 0) {
      // a short cycle forces the assembled restriction map to be injective
      if (rank_emap != h1dim) return false;
    }
    return true;
  });
}

BoundsCheck verify_bounds(const SimplicialComplex& c, const FieldSpec& field) {
  if (c.is_void()) throw EmptyComplex("verify_bounds: void complex");
  if (c.is_full_simplex()) throw FullSimplex("verify_bounds: I_Δ = 0");
  auto rep = ld_delta(c, field);
  BoundsCheck out;
  out.ideal_bound_ok = rep.bound_ideal_ok;
  out.indeg_bound_ok = rep.bound_indeg_ok;
  out.global_bound_ok = rep.bound_global_ok;
  const int n = c.n();
  out.squarefree_bound_ok = rep.ld <= n - 1 && *rep.ld_ideal <= n - 1;
  out.ideal_shift_ok = rep.ld < 1 || rep.ld == *rep.ld_ideal + 1;
  return out;
}

bool cone_invariance_check(const SimplicialComplex& c, const FieldSpec& field,
                           bool force_extend) {
  if (c.is_void()) throw EmptyComplex("cone_invariance_check: void complex");
  SimplicialComplex base = c;
  int v = 0;
  if (force_extend || c.vertices() == full_mask(c.n())) {
    if (c.n() + 1 > kMaxVertices)
      throw PreconditionFailed("cone_invariance_check: no room for a cone vertex");
    base = c.reembedded(c.n() + 1);
    v = base.n();
  } else {
    for (int i = 1; i <= c.n(); ++i)
      if (!contains_vertex(c.vertices(), i)) {
        v = i;
        break;
      }
  }
  int lhs = ld_of_complex(base, field);
  int rhs = ld_of_complex(base.cone(v), field);
  return lhs == rhs;
}

TopologyProbe topological_invariance_probe(const FieldSpec& field) {
  TopologyProbe out;
  std::vector<int> circle, sphere;
  for (int m = 4; m <= 6; ++m)
    circle.push_back(ld_of_complex(ngon(m).alexander_dual(), field));
  for (int m = 5; m <= 6; ++m)
    sphere.push_back(ld_of_complex(cyclic_sphere(m, 3).alexander_dual(), field));
  out.circle_value = circle[0];
  out.sphere_value = sphere[0];
  out.ok = std::all_of(circle.begin(), circle.end(),
                       [&](int v) { return v == circle[0]; }) &&
           std::all_of(sphere.begin(), sphere.end(),
                       [&](int v) { return v == sphere[0]; });
  return out;
}

NgonScan ngon_theorem_scan(int n, const FieldSpec& field, bool up_to_symmetry,
                           bool allow_n6) {
  if (n < 4 || n > 6 || (n == 6 && !allow_n6))
    throw BadParams("ngon_theorem_scan: n must be 4 or 5 (6 with opt-in)");
  NgonScan scan;
  scan.n = n;
  scan.characteristic = field.characteristic();
  enumerate_complexes(
      n, up_to_symmetry,
      [&](const SimplicialComplex& c) {
        if (c.is_void()) return;
        ++scan.complexes_scanned;
        int ld = ld_of_complex(c, field);
        bool extremal = (ld == n - 2);
        if (extremal) {
          ++scan.extremal_count;
          if (!c.is_ngon()) scan.extremal_all_ngons = false;
        } else if (c.is_ngon()) {
          scan.ngons_all_extremal = false;
        }
        if (ld > std::max(1, n - 2)) scan.bound_ok = false;
      },
      allow_n6);
  return scan;
}

namespace {

template <class F>
bool duality_identities_hold(const SimplicialComplex& c, const F& f,
                             std::string& detail) {
  auto m = stanley_reisner_module(c, f);
  auto am = alexander_functor(m);
  if (!(alexander_functor(am) == m)) {
    detail = "A∘A != Id for " + complex_brief(c);
    return false;
  }
  if (!(am == ideal_module(c.alexander_dual(), f))) {
    detail = "A(K[Δ]) != I_{Δ∨} for " + complex_brief(c);
    return false;
  }
  auto res = minimal_free_resolution(m);
  auto from_res = res.betti();
  auto koszul = betti_koszul(m);
  auto hochster = hochster_betti(c, f);
  if (!(from_res == koszul) || !(koszul == hochster)) {
    detail = "Betti routes disagree for " + complex_brief(c);
    return false;
  }
  return true;
}

SuiteResult suite_bounds(int n, const std::vector<unsigned long>& chars, bool allow_n6) {
  SuiteResult out{"bounds", 0, 0, {}};
  for (auto ch : chars) {
    FieldSpec field(ch);
    enumerate_complexes(
        n, true,
        [&](const SimplicialComplex& c) {
          if (c.is_void() || c.is_full_simplex()) return;
          ++out.checked;
          auto b = verify_bounds(c, field);
          if (!b.all_ok()) {
            ++out.failures;
            out.details.push_back("bounds violated at char " + std::to_string(ch) +
                                  ": " + complex_brief(c));
          }
        },
        allow_n6);
  }
  return out;
}

SuiteResult suite_ngon(int n, const std::vector<unsigned long>& chars, bool allow_n6) {
  SuiteResult out{"ngon", 0, 0, {}};
  for (auto ch : chars) {
    FieldSpec field(ch);
    auto scan = ngon_theorem_scan(n, field, true, allow_n6);
    ++out.checked;
    if (!scan.ok()) {
      ++out.failures;
      out.details.push_back("ngon characterization failed at char " +
                            std::to_string(ch));
    }
    out.details.push_back("char " + std::to_string(ch) + ": scanned " +
                          std::to_string(scan.complexes_scanned) + " classes, " +
                          std::to_string(scan.extremal_count) + " extremal");
  }
  return out;
}

SuiteResult suite_cone(int n, const std::vector<unsigned long>& chars, bool allow_n6) {
  SuiteResult out{"cone", 0, 0, {}};
  for (auto ch : chars) {
    FieldSpec field(ch);
    enumerate_complexes(
        n, true,
        [&](const SimplicialComplex& c) {
          if (c.is_void()) return;
          ++out.checked;
          if (!cone_invariance_check(c, field, /*force_extend=*/true)) {
            ++out.failures;
            out.details.push_back("cone invariance failed at char " +
                                  std::to_string(ch) + ": " + complex_brief(c));
          }
        },
        allow_n6);
  }
  return out;
}

SuiteResult suite_duality(int n, const std::vector<unsigned long>& chars, bool allow_n6) {
  SuiteResult out{"duality", 0, 0, {}};
  for (auto ch : chars) {
    FieldSpec spec(ch);
    enumerate_complexes(
        n, true,
        [&](const SimplicialComplex& c) {
          if (c.is_void()) return;
          ++out.checked;
          bool ok = with_field(spec, [&](auto f) {
            std::string detail;
            bool good = duality_identities_hold(c, f, detail);
            if (!good) out.details.push_back("char " + std::to_string(ch) + ": " + detail);
            return good;
          });
          if (!ok) ++out.failures;
        },
        allow_n6);
  }
  return out;
}

SuiteResult suite_topology(const std::vector<unsigned long>& chars) {
  SuiteResult out{"topology", 0, 0, {}};
  for (auto ch : chars) {
    FieldSpec field(ch);
    auto probe = topological_invariance_probe(field);
    ++out.checked;
    if (!probe.ok) {
      ++out.failures;
      out.details.push_back("probe family not constant at char " + std::to_string(ch));
    }
    out.details.push_back("char " + std::to_string(ch) + ": circle family ld = " +
                          std::to_string(probe.circle_value) + ", sphere family ld = " +
                          std::to_string(probe.sphere_value));
  }
  return out;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"bounds", "ngon", "cone", "duality", "topology", "all"};
}

SuiteResult run_suite(const std::string& name, int n,
                      const std::vector<unsigned long>& chars, bool allow_n6) {
  if (name == "bounds") return suite_bounds(n, chars, allow_n6);
  if (name == "ngon") return suite_ngon(n, chars, allow_n6);
  if (name == "cone") return suite_cone(n, chars, allow_n6);
  if (name == "duality") return suite_duality(n, chars, allow_n6);
  if (name == "topology") return suite_topology(chars);
  if (name == "all") {
    SuiteResult total{"all", 0, 0, {}};
    for (const auto& sub : {"bounds", "ngon", "cone", "duality", "topology"}) {
      auto r = run_suite(sub, n, chars, allow_n6);
      total.checked += r.checked;
      total.failures += r.failures;
      for (auto& d : r.details) total.details.push_back(r.name + ": " + d);
    }
    return total;
  }
  throw BadParams("unknown suite '" + name + "'");
}

nlohmann::json BettiReport::to_json() const {
  nlohmann::json j;
  j["char"] = characteristic;
  auto arr = nlohmann::json::array();
  for (const auto& [key, mult] : table.entries()) {
    nlohmann::json e;
    e["i"] = key.first;
    e["F"] = mask_vertices(key.second);
    e["mult"] = mult;
    arr.push_back(e);
  }
  j["betti"] = arr;
  j["routes_agree"] = routes_agree;
  j["proj_dim"] = proj_dim;
  j["depth"] = depth;
  return j;
}

BettiReport compute_betti(const SimplicialComplex& c, const FieldSpec& field) {
  if (c.is_void()) throw EmptyComplex("betti: void complex");
  return with_field(field, [&](auto f) {
    auto m = stanley_reisner_module(c, f);
    auto res = minimal_free_resolution(m);
    BettiReport rep;
    rep.characteristic = field.characteristic();
    rep.table = res.betti();
    rep.routes_agree =
        rep.table == betti_koszul(m) && rep.table == hochster_betti(c, f);
    rep.proj_dim = res.length();
    rep.depth = depth_from_resolution(res);
    return rep;
  });
}

nlohmann::json resolution_dump(const SimplicialComplex& c, const FieldSpec& field) {
  if (c.is_void()) throw EmptyComplex("resolve: void complex");
  return with_field(field, [&](auto f) {
    auto m = stanley_reisner_module(c, f);
    auto res = minimal_free_resolution(m);
    res.validate();
    const auto& cx = res.complex();
    nlohmann::json j;
    j["n"] = cx.n;
    j["char"] = field.characteristic();
    auto terms = nlohmann::json::array();
    for (const auto& term : cx.gens) {
      auto list = nlohmann::json::array();
      for (Mask deg : term) list.push_back(mask_vertices(deg));
      terms.push_back(list);
    }
    j["terms"] = terms;
    auto diffs = nlohmann::json::array();
    for (const auto& d : cx.diffs) {
      auto rows = nlohmann::json::array();
      for (std::size_t r = 0; r < d.rows(); ++r) {
        auto row = nlohmann::json::array();
        for (std::size_t cc = 0; cc < d.cols(); ++cc)
          row.push_back(f.to_string(d.at(r, cc)));
        rows.push_back(row);
      }
      diffs.push_back(rows);
    }
    j["diffs"] = diffs;
    return j;
  });
}

}  // namespace lindef
