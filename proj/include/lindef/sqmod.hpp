#pragma once

#include <cassert>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "lindef/matrix.hpp"
#include "lindef/simplicial.hpp"
#include "lindef/subsets.hpp"

namespace lindef {

// A squarefree S-module as a representation of the Boolean lattice 2^[n]:
// one finite-dimensional vector space per subset F and, for every cover
// F ⊂ F∪{i}, the multiplication map x_i : M_F -> M_{F∪{i}}.  The two paths
// around every square F -> F∪{i,j} must agree; validate() checks this.
//
// Cover matrices are stored only between nonzero pieces; maps between
// non-covers are composites computed on demand (well defined by
// commutativity).
template <class F>
class SquarefreeModule {
 public:
  using Elem = typename F::Elem;

  SquarefreeModule(int n, const F& field)
      : n_(n), field_(field), dims_(std::size_t{1} << n, 0) {
    if (n < 1 || n > kMaxVertices)
      throw BadParams("SquarefreeModule: ambient size out of range");
  }

  int n() const { return n_; }
  const F& field() const { return field_; }

  std::size_t dim_at(Mask deg) const { return dims_[deg]; }
  void set_dim(Mask deg, std::size_t d) { dims_[deg] = d; }

  bool has_cover(Mask deg, int i) const {
    return covers_.count(key(deg, i)) != 0;
  }

  // x_i : M_deg -> M_{deg∪{i}}; both pieces must be nonzero.
  const Matrix<F>& cover(Mask deg, int i) const {
    auto it = covers_.find(key(deg, i));
    assert(it != covers_.end());
    return it->second;
  }

  void set_cover(Mask deg, int i, Matrix<F> m) {
    assert(!contains_vertex(deg, i));
    assert(m.rows() == dims_[with_vertex(deg, i)] && m.cols() == dims_[deg]);
    covers_[key(deg, i)] = std::move(m);
  }

  // Composite multiplication map M_from -> M_to for from ⊆ to, multiplying
  // the covers along ascending vertices (any path gives the same map).
  Matrix<F> structure_map(Mask to, Mask from) const {
    assert(subset_of(from, to));
    Matrix<F> acc = Matrix<F>::identity(dims_[from], field_);
    Mask cur = from;
    for (int v : mask_vertices(to & ~from)) {
      if (dims_[cur] == 0 || dims_[with_vertex(cur, v)] == 0)
        return Matrix<F>(dims_[to], dims_[from], field_);
      acc = matmul(cover(cur, v), acc, field_);
      cur = with_vertex(cur, v);
    }
    return acc;
  }

  bool is_zero() const {
    for (auto d : dims_)
      if (d) return false;
    return true;
  }

  std::size_t total_dim() const {
    std::size_t t = 0;
    for (auto d : dims_) t += d;
    return t;
  }

  // max |F| over nonzero pieces (dimension of support); kMinusInfinity for
  // the zero module.
  int krull_dim() const {
    int best = kMinusInfinity;
    for (Mask m = 0; m < (Mask{1} << n_); ++m)
      if (dims_[m]) best = std::max(best, popcount(m));
    return best;
  }

  // Shape bookkeeping plus commutativity of all cover squares, including the
  // degenerate squares where one intermediate piece vanishes (the other path
  // must then be the zero map).
  void validate() const {
    auto two_step = [&](Mask lo, int first, int second) -> Matrix<F> {
      Mask mid = with_vertex(lo, first);
      Mask hi = with_vertex(mid, second);
      if (dims_[mid] == 0) return Matrix<F>(dims_[hi], dims_[lo], field_);
      return matmul(cover(mid, second), cover(lo, first), field_);
    };
    for (Mask m = 0; m < (Mask{1} << n_); ++m) {
      if (dims_[m] == 0) continue;
      for (int i = 1; i <= n_; ++i) {
        if (contains_vertex(m, i)) continue;
        Mask mi = with_vertex(m, i);
        if (dims_[mi] != 0) {
          const auto& ci = cover(m, i);
          if (ci.rows() != dims_[mi] || ci.cols() != dims_[m])
            throw ShapeMismatch("SquarefreeModule: cover shape at " +
                                mask_to_string(m));
        }
        for (int j = i + 1; j <= n_; ++j) {
          if (contains_vertex(m, j)) continue;
          if (dims_[with_vertex(mi, j)] == 0) continue;
          if (!(two_step(m, i, j) == two_step(m, j, i)))
            throw Error("SquarefreeModule: cover squares do not commute at " +
                        mask_to_string(m) + " +{" + std::to_string(i) + "," +
                        std::to_string(j) + "}");
        }
      }
    }
  }

  bool operator==(const SquarefreeModule& o) const {
    if (n_ != o.n_ || dims_ != o.dims_) return false;
    for (Mask m = 0; m < (Mask{1} << n_); ++m) {
      if (dims_[m] == 0) continue;
      for (int i = 1; i <= n_; ++i) {
        if (contains_vertex(m, i) || dims_[with_vertex(m, i)] == 0) continue;
        if (!(cover(m, i) == o.cover(m, i))) return false;
      }
    }
    return true;
  }

 private:
  static std::uint64_t key(Mask deg, int i) {
    return (static_cast<std::uint64_t>(deg) << 5) | static_cast<unsigned>(i);
  }

  int n_;
  F field_;
  std::vector<std::size_t> dims_;
  std::unordered_map<std::uint64_t, Matrix<F>> covers_;
};

namespace detail {

// Fills identity covers between all nonzero rank-one pieces.
template <class F>
void fill_identity_covers(SquarefreeModule<F>& m) {
  const F& f = m.field();
  for (Mask deg = 0; deg < (Mask{1} << m.n()); ++deg) {
    if (m.dim_at(deg) == 0) continue;
    for (int i = 1; i <= m.n(); ++i) {
      if (contains_vertex(deg, i)) continue;
      if (m.dim_at(with_vertex(deg, i)) == 0) continue;
      m.set_cover(deg, i, Matrix<F>::identity(1, f));
    }
  }
}

}  // namespace detail

// K[Δ] = S/I_Δ: one-dimensional exactly on the faces of Δ.
template <class F>
SquarefreeModule<F> stanley_reisner_module(const SimplicialComplex& c, const F& f) {
  if (c.is_void())
    throw EmptyComplex("stanley_reisner_module: void complex has zero ring");
  SquarefreeModule<F> m(c.n(), f);
  for (Mask deg = 0; deg < (Mask{1} << c.n()); ++deg)
    if (c.contains(deg)) m.set_dim(deg, 1);
  detail::fill_identity_covers(m);
  return m;
}

// I_Δ: one-dimensional exactly on the nonfaces.  The full simplex gives the
// zero module.
template <class F>
SquarefreeModule<F> ideal_module(const SimplicialComplex& c, const F& f) {
  SquarefreeModule<F> m(c.n(), f);
  for (Mask deg = 0; deg < (Mask{1} << c.n()); ++deg)
    if (!c.contains(deg)) m.set_dim(deg, 1);
  detail::fill_identity_covers(m);
  return m;
}

// S(-deg): one-dimensional exactly on supersets of deg.
template <class F>
SquarefreeModule<F> free_module(int n, Mask deg, const F& f) {
  SquarefreeModule<F> m(n, f);
  for (Mask g = 0; g < (Mask{1} << n); ++g)
    if (subset_of(deg, g)) m.set_dim(g, 1);
  detail::fill_identity_covers(m);
  return m;
}

// K[F] = S/(x_i : i ∉ verts): one-dimensional exactly on subsets of verts.
// This is the squarefree dual partner of free_module: A exchanges the two.
template <class F>
SquarefreeModule<F> simplex_module(int n, Mask verts, const F& f) {
  SquarefreeModule<F> m(n, f);
  for (Mask g = 0; g < (Mask{1} << n); ++g)
    if (subset_of(g, verts)) m.set_dim(g, 1);
  detail::fill_identity_covers(m);
  return m;
}

// The exact contravariant Alexander duality functor A with A∘A = Id:
// A(M)_F = (M_{F^c})^*, and the cover A(M)_F -> A(M)_{F∪{i}} is the
// transpose of x_i : M_{F^c \ {i}} -> M_{F^c}.  The composite sign is the
// constant +1; any sign assignment satisfying the commutation contract is a
// coboundary twist of this one (the derivation is frozen in a unit test), so
// the choice is unique up to natural isomorphism.
template <class F>
SquarefreeModule<F> alexander_functor(const SquarefreeModule<F>& m) {
  const F& f = m.field();
  const int n = m.n();
  SquarefreeModule<F> a(n, f);
  for (Mask deg = 0; deg < (Mask{1} << n); ++deg)
    a.set_dim(deg, m.dim_at(complement_in(deg, n)));
  for (Mask deg = 0; deg < (Mask{1} << n); ++deg) {
    if (a.dim_at(deg) == 0) continue;
    for (int i = 1; i <= n; ++i) {
      if (contains_vertex(deg, i)) continue;
      if (a.dim_at(with_vertex(deg, i)) == 0) continue;
      Mask source = complement_in(with_vertex(deg, i), n);  // F^c \ {i}
      a.set_cover(deg, i, transpose(m.cover(source, i), f));
    }
  }
#ifndef NDEBUG
  a.validate();
#endif
  return a;
}

template <class F>
SquarefreeModule<F> direct_sum(const SquarefreeModule<F>& a,
                               const SquarefreeModule<F>& b) {
  if (a.field().characteristic() != b.field().characteristic())
    throw FieldMismatch("direct_sum: fields differ");
  if (a.n() != b.n()) throw AmbientMismatch("direct_sum: ambient sizes differ");
  const F& f = a.field();
  SquarefreeModule<F> s(a.n(), f);
  for (Mask deg = 0; deg < (Mask{1} << a.n()); ++deg)
    s.set_dim(deg, a.dim_at(deg) + b.dim_at(deg));
  for (Mask deg = 0; deg < (Mask{1} << a.n()); ++deg) {
    if (s.dim_at(deg) == 0) continue;
    for (int i = 1; i <= a.n(); ++i) {
      if (contains_vertex(deg, i)) continue;
      Mask up = with_vertex(deg, i);
      if (s.dim_at(up) == 0) continue;
      Matrix<F> block(s.dim_at(up), s.dim_at(deg), f);
      if (a.dim_at(deg) && a.dim_at(up)) {
        const auto& ca = a.cover(deg, i);
        for (std::size_t r = 0; r < ca.rows(); ++r)
          for (std::size_t c = 0; c < ca.cols(); ++c) block.at(r, c) = ca.at(r, c);
      }
      if (b.dim_at(deg) && b.dim_at(up)) {
        const auto& cb = b.cover(deg, i);
        for (std::size_t r = 0; r < cb.rows(); ++r)
          for (std::size_t c = 0; c < cb.cols(); ++c)
            block.at(a.dim_at(up) + r, a.dim_at(deg) + c) = cb.at(r, c);
      }
      s.set_cover(deg, i, std::move(block));
    }
  }
  return s;
}

template <class F>
std::size_t dims_total(const SquarefreeModule<F>& m) {
  return m.total_dim();
}

// Debug dump: {"n":…, "dims": {"[1,2]": d}, "covers": {"[1,2],3": [[…]]}}.
template <class F>
nlohmann::json module_dump_json(const SquarefreeModule<F>& m) {
  nlohmann::json j;
  j["n"] = m.n();
  nlohmann::json dims = nlohmann::json::object();
  nlohmann::json covers = nlohmann::json::object();
  const F& f = m.field();
  for (Mask deg = 0; deg < (Mask{1} << m.n()); ++deg) {
    if (m.dim_at(deg) == 0) continue;
    dims[mask_to_string(deg)] = m.dim_at(deg);
    for (int i = 1; i <= m.n(); ++i) {
      if (contains_vertex(deg, i) || m.dim_at(with_vertex(deg, i)) == 0) continue;
      const auto& c = m.cover(deg, i);
      nlohmann::json rows = nlohmann::json::array();
      for (std::size_t r = 0; r < c.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t cc = 0; cc < c.cols(); ++cc)
          row.push_back(f.to_string(c.at(r, cc)));
        rows.push_back(row);
      }
      covers[mask_to_string(deg) + "," + std::to_string(i)] = rows;
    }
  }
  j["dims"] = dims;
  j["covers"] = covers;
  return j;
}

}  // namespace lindef
