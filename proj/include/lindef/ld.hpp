#pragma once

#include <map>
#include <optional>

#include "lindef/resolution.hpp"

namespace lindef {

// Both computation routes for the linearity defect of one module, with every
// agreement checked on the spot.
//
//   lin route:  ld = max{ i : H_i(lin(P_•)) != 0 }, strand by strand.
//   ext route:  ld = max{ i - depth Ext^{n-i}(A(M), ω) : 0 <= i <= n },
//               with the +infinity depth convention for vanishing Ext.
//
// The twist ω vs S is a degree shift that leaves depth unchanged.  Per
// strand, max{ i : H_i(lin_l) != 0 } = n - l - depth Ext^l(A(M), ω), where
// an exact strand corresponds to vanishing Ext.
template <class F>
struct LdAnalysis {
  FreeResolution<F> res;  // minimal free resolution of M
  int ld = 0;
  std::map<int, std::optional<int>> strand_max;  // l -> max nonzero position
  std::map<int, std::optional<int>> ext_depth;   // l -> depth Ext^l(A(M)); nullopt = 0 module
};

template <class F>
LdAnalysis<F> analyze_ld(const SquarefreeModule<F>& m) {
  if (m.is_zero()) throw ZeroModule("ld: the zero module has no linearity defect");
  const int n = m.n();
  LdAnalysis<F> out{minimal_free_resolution(m), 0, {}, {}};

  int lin = -1;
  for (int l = 0; l <= n; ++l) {
    auto pos = strand_homology_positions(out.res, l);
    if (pos.empty()) {
      out.strand_max[l] = std::nullopt;
    } else {
      out.strand_max[l] = *pos.rbegin();
      lin = std::max(lin, *pos.rbegin());
    }
  }

  auto dual_res = minimal_free_resolution(alexander_functor(m));
  int ext = -1;
  for (int l = 0; l <= n; ++l) {
    auto e = ext_module(dual_res, l);
    if (e.is_zero()) {
      out.ext_depth[l] = std::nullopt;
    } else {
      int d = depth(e);
      out.ext_depth[l] = d;
      ext = std::max(ext, n - l - d);
    }
  }

  if (lin < 0 || ext < 0)
    throw OracleMismatch("ld: no nonzero strand / Ext for a nonzero module");
  if (lin != ext)
    throw OracleMismatch("ld routes disagree: lin " + std::to_string(lin) +
                         " vs ext " + std::to_string(ext));
  for (int l = 0; l <= n; ++l) {
    std::optional<int> predicted;
    if (out.ext_depth[l]) predicted = n - l - *out.ext_depth[l];
    if (out.strand_max[l] != predicted)
      throw OracleMismatch("ld strand " + std::to_string(l) +
                           ": lin route disagrees with Ext-depth prediction");
  }
  out.ld = lin;
  return out;
}

// max{ i : H_i(lin(P_•)) != 0 } alone.
template <class F>
int ld_via_lin(const SquarefreeModule<F>& m) {
  if (m.is_zero()) throw ZeroModule("ld_via_lin: zero module");
  auto res = minimal_free_resolution(m);
  int best = -1;
  for (int l = 0; l <= m.n(); ++l) {
    auto pos = strand_homology_positions(res, l);
    if (!pos.empty()) best = std::max(best, *pos.rbegin());
  }
  return best;
}

// max{ i - depth Ext^{n-i}(A(M), ω) } alone.
template <class F>
int ld_via_ext(const SquarefreeModule<F>& m) {
  if (m.is_zero()) throw ZeroModule("ld_via_ext: zero module");
  const int n = m.n();
  auto dual_res = minimal_free_resolution(alexander_functor(m));
  int best = -1;
  for (int l = 0; l <= n; ++l) {
    auto e = ext_module(dual_res, l);
    if (!e.is_zero()) best = std::max(best, n - l - depth(e));
  }
  return best;
}

// Linearity defect of the minimal irreducible resolution, reached through
// the Alexander functor: ld.irr(N) = ld(A(N)).
template <class F>
int ld_irr(const SquarefreeModule<F>& m) {
  if (m.is_zero()) throw ZeroModule("ld_irr: zero module");
  return ld_via_ext(alexander_functor(m));
}

template <class F>
bool is_cohen_macaulay(const SquarefreeModule<F>& m) {
  if (m.is_zero()) throw ZeroModule("is_cohen_macaulay: zero module");
  return depth(m) == m.krull_dim();
}

// Every Ext^{n-i}(M, ω) is zero or Cohen-Macaulay of dimension i.
template <class F>
bool is_sequentially_cm(const SquarefreeModule<F>& m) {
  if (m.is_zero()) return true;
  const int n = m.n();
  auto res = minimal_free_resolution(m);
  for (int i = 0; i <= n; ++i) {
    auto e = ext_module(res, n - i);
    if (e.is_zero()) continue;
    if (e.krull_dim() != i || depth(e) != i) return false;
  }
  return true;
}

}  // namespace lindef
