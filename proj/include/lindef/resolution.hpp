#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "lindef/sqmod.hpp"

namespace lindef {

// A finite complex of squarefree-generated free modules with scalar
// differentials: position p holds one generator per entry of gens[p], each
// tagged with its squarefree degree, and diffs[p] : position p+1 -> p stores
// the scalar c(g,h) of the component S(-F_g) -> S(-F_h), 1 -> c·x^{F_g\F_h}.
// Minimal free resolutions, linear strands and the Q_• subcomplex all share
// this shape.
template <class F>
struct FreeComplex {
  int n = 0;
  F field;
  std::vector<std::vector<Mask>> gens;
  std::vector<Matrix<F>> diffs;

  explicit FreeComplex(int n_, const F& f) : n(n_), field(f) {}

  std::size_t positions() const { return gens.size(); }

  // Generator indices at position p living in squarefree degree G.
  std::vector<std::size_t> select(std::size_t p, Mask deg) const {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < gens[p].size(); ++k)
      if (subset_of(gens[p][k], deg)) idx.push_back(k);
    return idx;
  }

  // The complex of vector spaces obtained by evaluating at degree G;
  // maps[k] is d_{k+1}: position k+1 -> position k.
  std::vector<Matrix<F>> evaluate_at(Mask deg) const {
    std::vector<std::vector<std::size_t>> sel(positions());
    for (std::size_t p = 0; p < positions(); ++p) sel[p] = select(p, deg);
    std::vector<Matrix<F>> maps;
    for (std::size_t p = 0; p + 1 < positions(); ++p) {
      Matrix<F> m(sel[p].size(), sel[p + 1].size(), field);
      for (std::size_t r = 0; r < sel[p].size(); ++r)
        for (std::size_t c = 0; c < sel[p + 1].size(); ++c)
          m.at(r, c) = diffs[p].at(sel[p][r], sel[p + 1][c]);
      maps.push_back(std::move(m));
    }
    return maps;
  }

  std::vector<std::size_t> homology_dims_at(Mask deg) const {
    if (positions() == 0) return {};
    if (positions() == 1) return {select(0, deg).size()};
    return complex_homology_dims(evaluate_at(deg), field);
  }

  // Positions where homology is nonzero in some squarefree degree.  Valid
  // because homology of complexes of squarefree modules is squarefree, hence
  // detected on squarefree degrees.
  std::set<int> nonzero_homology_positions() const {
    std::set<int> out;
    for (Mask deg = 0; deg < (Mask{1} << n); ++deg) {
      auto dims = homology_dims_at(deg);
      for (std::size_t p = 0; p < dims.size(); ++p)
        if (dims[p]) out.insert(static_cast<int>(p));
    }
    return out;
  }
};

// A minimal free resolution produced by the iterated-syzygy engine.  The
// surjection onto the resolved module sends the k-th term-0 generator to the
// unit basis vector of the module at row aug_rows[k] of its own degree.
template <class F>
class FreeResolution {
 public:
  FreeResolution(FreeComplex<F> cx, std::vector<std::size_t> aug_rows = {})
      : cx_(std::move(cx)), aug_rows_(std::move(aug_rows)) {}

  const FreeComplex<F>& complex() const { return cx_; }
  const std::vector<std::size_t>& augmentation_rows() const { return aug_rows_; }
  int n() const { return cx_.n; }
  const F& field() const { return cx_.field; }

  // Largest position with a generator; kMinusInfinity for the resolution of
  // the zero module.
  int length() const {
    int best = kMinusInfinity;
    for (std::size_t p = 0; p < cx_.positions(); ++p)
      if (!cx_.gens[p].empty()) best = static_cast<int>(p);
    return best;
  }

  BettiTable betti() const {
    BettiTable t(cx_.n);
    for (std::size_t p = 0; p < cx_.positions(); ++p)
      for (Mask deg : cx_.gens[p]) t.add(static_cast<int>(p), deg, 1);
    return t;
  }

  // Degree compatibility, minimality (no unit entries), d∘d = 0, length <= n.
  void validate() const {
    const F& f = cx_.field;
    if (length() > cx_.n) throw Error("FreeResolution: length exceeds n");
    for (std::size_t p = 0; p + 1 < cx_.positions(); ++p) {
      const auto& d = cx_.diffs[p];
      for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c) {
          if (f.is_zero(d.at(r, c))) continue;
          Mask lo = cx_.gens[p][r], hi = cx_.gens[p + 1][c];
          if (!subset_of(lo, hi))
            throw Error("FreeResolution: entry violates degree compatibility");
          if (lo == hi)
            throw NotMinimal("FreeResolution: unit entry in differential");
        }
    }
    for (std::size_t p = 0; p + 2 < cx_.positions(); ++p)
      if (!is_zero_matrix(matmul(cx_.diffs[p], cx_.diffs[p + 1], f), f))
        throw CompositionNonzero("FreeResolution: d∘d != 0");
  }

 private:
  FreeComplex<F> cx_;
  std::vector<std::size_t> aug_rows_;
};

// Minimal free resolution by iterated minimal covers: pick minimal
// generators (a cokernel basis over the images of all covers into each
// degree), map a free module onto them, replace the module by the degreewise
// kernel with restricted structure maps, and recurse.  Kernel bases are the
// deterministic reduced-echelon ones, generators are ordered by (|F|
// ascending, F, basis index), so resolutions are bit-identical across runs.
template <class F>
FreeResolution<F> minimal_free_resolution(const SquarefreeModule<F>& module) {
  const F& f = module.field();
  const int n = module.n();
  const Mask top = full_mask(n);
  FreeComplex<F> out(n, f);
  if (module.is_zero()) {
    out.gens.push_back({});
    return FreeResolution<F>(std::move(out));
  }
  std::vector<std::size_t> aug_rows;

  SquarefreeModule<F> cur = module;
  // columns of emb[deg] express the current module's basis at deg in the
  // coordinates select(prev position, deg); empty before the first step
  std::vector<Matrix<F>> emb;
  bool have_emb = false;

  for (int step = 0; step <= n + 1; ++step) {
    if (cur.is_zero()) break;
    if (step > n) throw Error("minimal_free_resolution: did not terminate");

    // minimal generators of cur
    std::vector<Mask> new_gens;
    std::vector<std::size_t> gen_row;  // basis row realizing each generator
    for (int card = 0; card <= n; ++card) {
      for (Mask deg = 0; deg <= top; ++deg) {
        if (popcount(deg) != card || cur.dim_at(deg) == 0) continue;
        ColumnReducer<F> span(cur.dim_at(deg), f);
        for (int v : mask_vertices(deg)) {
          Mask below = without_vertex(deg, v);
          if (cur.dim_at(below) == 0) continue;
          const auto& cov = cur.cover(below, v);
          for (std::size_t c = 0; c < cov.cols(); ++c) span.insert(cov.col(c));
        }
        for (std::size_t r : span.free_rows()) {
          new_gens.push_back(deg);
          gen_row.push_back(r);
        }
      }
    }

    // differential into the previous free term
    if (have_emb) {
      const auto& prev = out.gens.back();
      Matrix<F> d(prev.size(), new_gens.size(), f);
      for (std::size_t c = 0; c < new_gens.size(); ++c) {
        Mask deg = new_gens[c];
        std::vector<std::size_t> sel;
        for (std::size_t k = 0; k < prev.size(); ++k)
          if (subset_of(prev[k], deg)) sel.push_back(k);
        const Matrix<F>& e = emb[deg];
        for (std::size_t r = 0; r < sel.size(); ++r) {
          const auto& v = e.at(r, gen_row[c]);
          // minimality: a syzygy has no component on a same-degree generator
          assert(!(prev[sel[r]] == deg) || f.is_zero(v));
          d.at(sel[r], c) = v;
        }
      }
      out.diffs.push_back(std::move(d));
    } else {
      aug_rows = gen_row;
    }
    out.gens.push_back(new_gens);

    // kernel of the evaluation (new free term) -> cur, degree by degree
    SquarefreeModule<F> nxt(n, f);
    std::vector<Matrix<F>> nxt_emb(std::size_t{1} << n);
    std::vector<std::vector<std::size_t>> free_pos(std::size_t{1} << n);
    for (Mask deg = 0; deg <= top; ++deg) {
      std::vector<std::size_t> sel;
      for (std::size_t k = 0; k < new_gens.size(); ++k)
        if (subset_of(new_gens[k], deg)) sel.push_back(k);
      if (sel.empty()) {
        assert(cur.dim_at(deg) == 0);  // generators must cover the module
        nxt_emb[deg] = Matrix<F>(0, 0, f);
        continue;
      }
      Matrix<F> eval(cur.dim_at(deg), sel.size(), f);
      for (std::size_t c = 0; c < sel.size(); ++c) {
        Matrix<F> sm = cur.structure_map(deg, new_gens[sel[c]]);
        for (std::size_t r = 0; r < eval.rows(); ++r)
          eval.at(r, c) = sm.at(r, gen_row[sel[c]]);
      }
      Matrix<F> ker = kernel_basis(eval, f);
      assert(sel.size() - ker.cols() == cur.dim_at(deg));  // surjectivity
      free_pos[deg] = kernel_free_positions(eval, f);
      nxt.set_dim(deg, ker.cols());
      nxt_emb[deg] = std::move(ker);
    }
    for (Mask deg = 0; deg <= top; ++deg) {
      if (nxt.dim_at(deg) == 0) continue;
      for (int i = 1; i <= n; ++i) {
        if (contains_vertex(deg, i)) continue;
        Mask up = with_vertex(deg, i);
        if (nxt.dim_at(up) == 0) continue;
        // pad a kernel vector from coordinates over sel(deg) to sel(up),
        // then read its coordinates in the reduced-echelon kernel basis of
        // up at the free positions
        std::vector<std::size_t> sel_lo, sel_hi;
        for (std::size_t k = 0; k < new_gens.size(); ++k) {
          if (subset_of(new_gens[k], deg)) sel_lo.push_back(k);
          if (subset_of(new_gens[k], up)) sel_hi.push_back(k);
        }
        std::vector<std::size_t> lo_in_hi(sel_lo.size());
        for (std::size_t a = 0, b = 0; a < sel_lo.size(); ++a) {
          while (sel_hi[b] != sel_lo[a]) ++b;
          lo_in_hi[a] = b;
        }
        Matrix<F> cov(nxt.dim_at(up), nxt.dim_at(deg), f);
        for (std::size_t c = 0; c < nxt.dim_at(deg); ++c) {
          std::vector<typename F::Elem> padded(sel_hi.size(), f.zero());
          for (std::size_t a = 0; a < sel_lo.size(); ++a)
            padded[lo_in_hi[a]] = nxt_emb[deg].at(a, c);
          for (std::size_t r = 0; r < nxt.dim_at(up); ++r)
            cov.at(r, c) = padded[free_pos[up][r]];
        }
        nxt.set_cover(deg, i, std::move(cov));
      }
    }
    cur = std::move(nxt);
    emb = std::move(nxt_emb);
    have_emb = true;
  }
  return FreeResolution<F>(std::move(out), std::move(aug_rows));
}

// Graded Betti numbers via Koszul homology: beta_{i,F}(M) is the i-th
// homology of the degree-F piece of M ⊗ K_•, whose chambers are M_G ⊗ Λ^{F\G}
// for G ⊆ F and whose differential assembles cover maps with the usual wedge
// signs.  Independent of the syzygy engine.
template <class F>
BettiTable betti_koszul(const SquarefreeModule<F>& module) {
  const F& f = module.field();
  const int n = module.n();
  BettiTable table(n);
  for (Mask deg = 0; deg < (Mask{1} << n); ++deg) {
    const int card = popcount(deg);
    // chamber bases per homological position
    std::vector<std::vector<std::pair<Mask, std::size_t>>> basis(card + 1);
    for_each_submask(deg, [&](Mask g) {
      int pos = popcount(deg & ~g);
      for (std::size_t b = 0; b < module.dim_at(g); ++b)
        basis[pos].push_back({g, b});
    });
    for (auto& level : basis) std::sort(level.begin(), level.end());
    if (card == 0) {
      table.add(0, deg, module.dim_at(deg));
      continue;
    }
    std::vector<Matrix<F>> maps;
    for (int i = 1; i <= card; ++i) {
      Matrix<F> d(basis[i - 1].size(), basis[i].size(), f);
      for (std::size_t c = 0; c < basis[i].size(); ++c) {
        auto [g, b] = basis[i][c];
        Mask wedge = deg & ~g;
        for (int a : mask_vertices(wedge)) {
          Mask g2 = with_vertex(g, a);
          if (module.dim_at(g2) == 0) continue;
          const auto& cov = module.cover(g, a);
          auto sign_one =
              (count_below(wedge, a) % 2 == 0) ? f.one() : f.neg(f.one());
          auto lo = std::lower_bound(basis[i - 1].begin(), basis[i - 1].end(),
                                     std::make_pair(g2, std::size_t{0}));
          std::size_t base_row = static_cast<std::size_t>(lo - basis[i - 1].begin());
          for (std::size_t r = 0; r < module.dim_at(g2); ++r) {
            const auto& entry = cov.at(r, b);
            if (f.is_zero(entry)) continue;
            d.at(base_row + r, c) =
                f.add(d.at(base_row + r, c), f.mul(sign_one, entry));
          }
        }
      }
      maps.push_back(std::move(d));
    }
    auto dims = complex_homology_dims(maps, f);
    for (int i = 0; i <= card; ++i)
      if (dims[i]) table.add(i, deg, dims[i]);
  }
  return table;
}

// Linear part: erase all differential entries that raise the degree by more
// than one.  Throws NotMinimal on a unit entry.
template <class F>
FreeComplex<F> linear_part(const FreeResolution<F>& res) {
  const auto& cx = res.complex();
  const F& f = cx.field;
  FreeComplex<F> lin(cx.n, f);
  lin.gens = cx.gens;
  for (std::size_t p = 0; p + 1 < cx.positions(); ++p) {
    Matrix<F> d = cx.diffs[p];
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t c = 0; c < d.cols(); ++c) {
        if (f.is_zero(d.at(r, c))) continue;
        if (cx.gens[p][r] == cx.gens[p + 1][c])
          throw NotMinimal("linear_part: resolution has a unit entry");
        if (popcount(cx.gens[p + 1][c]) != popcount(cx.gens[p][r]) + 1)
          d.at(r, c) = f.zero();
      }
    lin.diffs.push_back(std::move(d));
  }
  return lin;
}

// The l-linear strand: generators with |F| = l + (homological degree) and
// the linear entries between them.
template <class F>
FreeComplex<F> strand(const FreeResolution<F>& res, int l) {
  const auto& cx = res.complex();
  const F& f = cx.field;
  FreeComplex<F> st(cx.n, f);
  std::vector<std::vector<std::size_t>> keep(cx.positions());
  for (std::size_t p = 0; p < cx.positions(); ++p) {
    std::vector<Mask> g;
    for (std::size_t k = 0; k < cx.gens[p].size(); ++k)
      if (popcount(cx.gens[p][k]) == l + static_cast<int>(p)) {
        keep[p].push_back(k);
        g.push_back(cx.gens[p][k]);
      }
    st.gens.push_back(std::move(g));
  }
  for (std::size_t p = 0; p + 1 < cx.positions(); ++p) {
    Matrix<F> d(keep[p].size(), keep[p + 1].size(), f);
    for (std::size_t r = 0; r < keep[p].size(); ++r)
      for (std::size_t c = 0; c < keep[p + 1].size(); ++c)
        d.at(r, c) = cx.diffs[p].at(keep[p][r], keep[p + 1][c]);
    st.diffs.push_back(std::move(d));
  }
  return st;
}

// { i : H_i(lin_l(P)) != 0 }, computed degreewise.
template <class F>
std::set<int> strand_homology_positions(const FreeResolution<F>& res, int l) {
  return strand(res, l).nonzero_homology_positions();
}

// Ext^i(M, ω_S) from the ω-dual of the minimal free resolution of M: each
// S(-F) dualizes to S(-F^c) and the differentials transpose with scalars
// preserved; cohomology is taken degree by degree with induced structure
// maps.  i ranges over 0..n.
template <class F>
SquarefreeModule<F> ext_module(const FreeResolution<F>& res, int i) {
  const auto& cx = res.complex();
  const F& f = cx.field;
  const int n = cx.n;
  if (i < 0 || i > n) throw IndexOutOfRange("ext_module: index out of range");
  SquarefreeModule<F> ext(n, f);
  const int len = static_cast<int>(cx.positions()) - 1;
  if (len < 0 || i > len) return ext;

  // dual degree of generator g at position p is complement(F_g); the dual
  // coordinate set at degree G selects generators with F_g ⊇ G^c
  auto dual_select = [&](int p, Mask deg) {
    std::vector<std::size_t> idx;
    Mask need = complement_in(deg, n);
    for (std::size_t k = 0; k < cx.gens[p].size(); ++k)
      if (subset_of(need, cx.gens[p][k])) idx.push_back(k);
    return idx;
  };
  // ∂^p at degree G maps coordinates at position p to position p+1; its
  // entries are the original scalars c(g,h)
  auto dual_map = [&](int p, Mask deg) -> Matrix<F> {
    if (p < 0 || p >= len) {
      std::size_t rows = (p + 1 >= 0 && p + 1 <= len) ? dual_select(p + 1, deg).size() : 0;
      std::size_t cols = (p >= 0 && p <= len) ? dual_select(p, deg).size() : 0;
      return Matrix<F>(rows, cols, f);
    }
    auto lo = dual_select(p, deg);
    auto hi = dual_select(p + 1, deg);
    Matrix<F> m(hi.size(), lo.size(), f);
    for (std::size_t r = 0; r < hi.size(); ++r)
      for (std::size_t c = 0; c < lo.size(); ++c)
        m.at(r, c) = cx.diffs[p].at(lo[c], hi[r]);
    return m;
  };

  std::vector<HomologySpace<F>> spaces;
  spaces.reserve(std::size_t{1} << n);
  for (Mask deg = 0; deg < (Mask{1} << n); ++deg) {
    spaces.emplace_back(dual_map(i, deg), dual_map(i - 1, deg), f);
    ext.set_dim(deg, spaces.back().dim());
  }
  for (Mask deg = 0; deg < (Mask{1} << n); ++deg) {
    if (ext.dim_at(deg) == 0) continue;
    auto sel_lo = dual_select(i, deg);
    for (int v = 1; v <= n; ++v) {
      if (contains_vertex(deg, v)) continue;
      Mask up = with_vertex(deg, v);
      if (ext.dim_at(up) == 0) continue;
      auto sel_hi = dual_select(i, up);
      std::vector<std::size_t> lo_in_hi(sel_lo.size());
      for (std::size_t a = 0, b = 0; a < sel_lo.size(); ++a) {
        while (sel_hi[b] != sel_lo[a]) ++b;
        lo_in_hi[a] = b;
      }
      Matrix<F> cov(ext.dim_at(up), ext.dim_at(deg), f);
      for (std::size_t c = 0; c < ext.dim_at(deg); ++c) {
        auto rep = spaces[deg].representative(c);
        std::vector<typename F::Elem> padded(sel_hi.size(), f.zero());
        for (std::size_t a = 0; a < sel_lo.size(); ++a) padded[lo_in_hi[a]] = rep[a];
        auto coords = spaces[up].coords(padded);
        for (std::size_t r = 0; r < coords.size(); ++r) cov.at(r, c) = coords[r];
      }
      ext.set_cover(deg, v, std::move(cov));
    }
  }
  return ext;
}

template <class F>
SquarefreeModule<F> ext_module(const SquarefreeModule<F>& m, int i) {
  if (i < 0 || i > m.n()) throw IndexOutOfRange("ext_module: index out of range");
  return ext_module(minimal_free_resolution(m), i);
}

// dim [Ext^j(M, ω)]_G for all j = 0..n and all G, by rank counting on the
// dual complex (no structure maps; cheap path for depth and nonzeroness).
template <class F>
std::vector<std::vector<std::size_t>> ext_all_dims(const FreeResolution<F>& res) {
  const auto& cx = res.complex();
  const F& f = cx.field;
  const int n = cx.n;
  std::vector<std::vector<std::size_t>> dims(
      n + 1, std::vector<std::size_t>(std::size_t{1} << n, 0));
  const int len = static_cast<int>(cx.positions()) - 1;
  if (len < 0) return dims;
  for (Mask deg = 0; deg < (Mask{1} << n); ++deg) {
    Mask need = complement_in(deg, n);
    std::vector<std::size_t> space(len + 1);
    std::vector<std::vector<std::size_t>> sel(len + 1);
    for (int p = 0; p <= len; ++p) {
      for (std::size_t k = 0; k < cx.gens[p].size(); ++k)
        if (subset_of(need, cx.gens[p][k])) sel[p].push_back(k);
      space[p] = sel[p].size();
    }
    std::vector<std::size_t> rk(len + 1, 0);  // rk[p] = rank ∂^p: p -> p+1
    for (int p = 0; p < len; ++p) {
      Matrix<F> m(sel[p + 1].size(), sel[p].size(), f);
      for (std::size_t r = 0; r < sel[p + 1].size(); ++r)
        for (std::size_t c = 0; c < sel[p].size(); ++c)
          m.at(r, c) = cx.diffs[p].at(sel[p][c], sel[p + 1][r]);
      rk[p] = rank(std::move(m), f);
    }
    for (int j = 0; j <= len; ++j) {
      std::size_t kerdim = space[j] - (j < len ? rk[j] : 0);
      std::size_t imdim = (j > 0) ? rk[j - 1] : 0;
      dims[j][deg] = kerdim - imdim;
    }
  }
  return dims;
}

template <class F>
std::vector<bool> ext_nonzero(const FreeResolution<F>& res) {
  auto dims = ext_all_dims(res);
  std::vector<bool> out(res.n() + 1, false);
  for (int j = 0; j <= res.n(); ++j)
    for (auto d : dims[j])
      if (d) {
        out[j] = true;
        break;
      }
  return out;
}

template <class F>
int proj_dim(const FreeResolution<F>& res) {
  return res.length();
}

// Max homological degree with a generator; kMinusInfinity for the zero module.
template <class F>
int proj_dim(const SquarefreeModule<F>& m) {
  return minimal_free_resolution(m).length();
}

// Depth by both routes: n - proj_dim (Auslander-Buchsbaum) and the least j
// with Ext^{n-j}(M, ω) != 0.  The routes must agree; disagreement is a bug.
template <class F>
int depth_from_resolution(const FreeResolution<F>& res) {
  const int n = res.n();
  if (res.length() == kMinusInfinity) return kPlusInfinity;
  int via_ab = n - res.length();
  auto profile = ext_nonzero(res);
  int via_ext = kPlusInfinity;
  for (int j = 0; j <= n; ++j)
    if (profile[n - j]) {
      via_ext = j;
      break;
    }
  if (via_ab != via_ext)
    throw OracleMismatch("depth: Auslander-Buchsbaum route " +
                         std::to_string(via_ab) + " != Ext route " +
                         std::to_string(via_ext));
  return via_ab;
}

// Depth of M; +infinity sentinel for the zero module.
template <class F>
int depth(const SquarefreeModule<F>& m) {
  if (m.is_zero()) return kPlusInfinity;
  return depth_from_resolution(minimal_free_resolution(m));
}

// Irreducible-resolution numbers ν_i(F, M) = beta_{i,F^c}(A(M)),
// cross-checked against dim [Ext^{n-i-|F|}(M, ω)]_F.
template <class F>
std::map<std::pair<int, Mask>, std::size_t> irr_numbers(const SquarefreeModule<F>& m) {
  const int n = m.n();
  std::map<std::pair<int, Mask>, std::size_t> nu;
  if (m.is_zero()) return nu;
  BettiTable dual_betti = betti_koszul(alexander_functor(m));
  auto extdims = ext_all_dims(minimal_free_resolution(m));
  for (Mask deg = 0; deg < (Mask{1} << n); ++deg) {
    for (int i = 0; i <= n; ++i) {
      std::size_t v = dual_betti.at(i, complement_in(deg, n));
      int j = n - i - popcount(deg);
      std::size_t via_ext = (j >= 0 && j <= n) ? extdims[j][deg] : 0;
      if (v != via_ext)
        throw OracleMismatch("irr_numbers: Betti route disagrees with Ext route");
      if (v) nu[{i, deg}] = v;
    }
  }
  return nu;
}

// Degreewise exactness of the augmented complex P -> M (surjectivity at
// position 0 and vanishing homology above); the correctness oracle for the
// syzygy engine.
template <class F>
bool resolution_is_exact_for(const FreeResolution<F>& res,
                             const SquarefreeModule<F>& m) {
  const auto& cx = res.complex();
  const F& f = cx.field;
  const auto& aug_rows = res.augmentation_rows();
  for (Mask deg = 0; deg < (Mask{1} << m.n()); ++deg) {
    auto sel = cx.positions() ? cx.select(0, deg) : std::vector<std::size_t>{};
    Matrix<F> aug(m.dim_at(deg), sel.size(), f);
    for (std::size_t c = 0; c < sel.size(); ++c) {
      Mask gdeg = cx.gens[0][sel[c]];
      Matrix<F> sm = m.structure_map(deg, gdeg);
      for (std::size_t r = 0; r < aug.rows(); ++r)
        aug.at(r, c) = sm.at(r, aug_rows[sel[c]]);
    }
    std::vector<Matrix<F>> maps;
    maps.push_back(std::move(aug));
    for (const auto& d : cx.evaluate_at(deg)) maps.push_back(d);
    auto dims = complex_homology_dims(maps, f);
    for (std::size_t p = 0; p < dims.size(); ++p)
      if (dims[p]) return false;
  }
  return true;
}

}  // namespace lindef
