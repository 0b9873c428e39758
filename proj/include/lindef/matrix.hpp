#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "lindef/errors.hpp"

namespace lindef {

// Dense row-major matrix over an exact field F.  Shapes are part of the
// value; a 0xk or kx0 matrix is legal and behaves as the zero map.
template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, const F& f)
      : rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

  static Matrix identity(std::size_t n, const F& f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& at(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return a_[r * cols_ + c];
  }
  const Elem& at(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return a_[r * cols_ + c];
  }

  std::vector<Elem> col(std::size_t c) const {
    std::vector<Elem> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Elem> a_;
};

template <class F>
bool is_zero_matrix(const Matrix<F>& m, const F& f) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!f.is_zero(m.at(r, c))) return false;
  return true;
}

template <class F>
Matrix<F> transpose(const Matrix<F>& m, const F& f) {
  Matrix<F> t(m.cols(), m.rows(), f);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
  return t;
}

template <class F>
Matrix<F> matmul(const Matrix<F>& a, const Matrix<F>& b, const F& f) {
  if (a.cols() != b.rows())
    throw ShapeMismatch("matmul: " + std::to_string(a.cols()) + " vs " +
                        std::to_string(b.rows()));
  Matrix<F> c(a.rows(), b.cols(), f);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a.at(i, k);
      if (f.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const auto& bkj = b.at(k, j);
        if (f.is_zero(bkj)) continue;
        c.at(i, j) = f.add(c.at(i, j), f.mul(aik, bkj));
      }
    }
  return c;
}

template <class F>
std::vector<typename F::Elem> matvec(const Matrix<F>& a,
                                     const std::vector<typename F::Elem>& v,
                                     const F& f) {
  if (a.cols() != v.size()) throw ShapeMismatch("matvec");
  std::vector<typename F::Elem> out(a.rows(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!f.is_zero(a.at(i, j)) && !f.is_zero(v[j]))
        out[i] = f.add(out[i], f.mul(a.at(i, j), v[j]));
  return out;
}

// In-place reduced row echelon form.  Pivots are deterministic: leftmost
// nonzero column, topmost nonzero row, no magnitude heuristics.  Returns the
// pivot column indices in order.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m, const F& f) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pr = row;
    while (pr < m.rows() && f.is_zero(m.at(pr, col))) ++pr;
    if (pr == m.rows()) continue;
    if (pr != row)
      for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m.at(pr, c), m.at(row, c));
    const auto inv = f.div(f.one(), m.at(row, col));
    for (std::size_t c = col; c < m.cols(); ++c)
      m.at(row, c) = f.mul(m.at(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || f.is_zero(m.at(r, col))) continue;
      const auto factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m, const F& f) {
  return rref(m, f).size();
}

// Basis of { v : m v = 0 } as matrix columns, from the reduced echelon form.
// Column j of the result carries a 1 in its own free coordinate and 0 in the
// other free coordinates, so coordinates of any kernel vector in this basis
// can be read off at the free positions.
template <class F>
Matrix<F> kernel_basis(Matrix<F> m, const F& f) {
  const std::size_t ncols = m.cols();
  std::vector<std::size_t> pivots = rref(m, f);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < ncols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<F> ker(ncols, free_cols.size(), f);
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    ker.at(free_cols[j], j) = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i)
      ker.at(pivots[i], j) = f.neg(m.at(i, free_cols[j]));
  }
  return ker;
}

// Free coordinate positions of the reduced-echelon kernel of m (the rows of
// kernel_basis(m) that carry the identity block).
template <class F>
std::vector<std::size_t> kernel_free_positions(Matrix<F> m, const F& f) {
  const std::size_t ncols = m.cols();
  std::vector<std::size_t> pivots = rref(m, f);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < ncols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  return free_cols;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m, const F& f) {
  if (m.rows() != m.cols()) throw ShapeMismatch("inverse: not square");
  const std::size_t n = m.rows();
  Matrix<F> aug(n, 2 * n, f);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = f.one();
  }
  auto pivots = rref(aug, f);
  if (pivots.size() != n || pivots.back() >= n)
    throw Error("inverse: singular matrix");
  Matrix<F> inv(n, n, f);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  return inv;
}

// Maintains a reduced column echelon basis of a growing subspace of F^dim.
// Used for minimal-generator cokernels and homology subquotients.
template <class F>
class ColumnReducer {
 public:
  using Elem = typename F::Elem;

  ColumnReducer(std::size_t dim, const F& f) : dim_(dim), f_(f) {}

  // Eliminates the pivot coordinates of v against the stored basis.
  void reduce(std::vector<Elem>& v) const {
    assert(v.size() == dim_);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Elem& c = v[pivot_[k]];
      if (f_.is_zero(c)) continue;
      const std::vector<Elem>& b = basis_[k];
      const Elem factor = c;  // pivot entries are normalized to 1
      for (std::size_t i = 0; i < dim_; ++i)
        if (!f_.is_zero(b[i])) v[i] = f_.sub(v[i], f_.mul(factor, b[i]));
    }
  }

  // Adds v to the span; returns true if the span grew.
  bool insert(std::vector<Elem> v) {
    reduce(v);
    std::size_t p = 0;
    while (p < dim_ && f_.is_zero(v[p])) ++p;
    if (p == dim_) return false;
    const Elem inv = f_.div(f_.one(), v[p]);
    for (auto& x : v) x = f_.mul(x, inv);
    // keep the stored basis fully reduced against the new pivot
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Elem& c = basis_[k][p];
      if (f_.is_zero(c)) continue;
      const Elem factor = c;
      for (std::size_t i = 0; i < dim_; ++i)
        if (!f_.is_zero(v[i]))
          basis_[k][i] = f_.sub(basis_[k][i], f_.mul(factor, v[i]));
    }
    std::size_t pos = 0;
    while (pos < pivot_.size() && pivot_[pos] < p) ++pos;
    pivot_.insert(pivot_.begin() + pos, p);
    basis_.insert(basis_.begin() + pos, std::move(v));
    return true;
  }

  std::size_t rank() const { return basis_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<std::size_t>& pivot_rows() const { return pivot_; }

  std::vector<std::size_t> free_rows() const {
    std::vector<bool> used(dim_, false);
    for (auto p : pivot_) used[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim_; ++i)
      if (!used[i]) out.push_back(i);
    return out;
  }

 private:
  std::size_t dim_;
  F f_;
  std::vector<std::vector<Elem>> basis_;  // sorted by pivot row
  std::vector<std::size_t> pivot_;
};

// One graded piece of a homology subquotient ker(dout)/im(din), with enough
// data to express any cycle in the chosen homology basis and to lift basis
// vectors back to cycles.  Bases are the deterministic reduced-echelon ones.
template <class F>
class HomologySpace {
 public:
  using Elem = typename F::Elem;

  // dout: V -> W, din: U -> V, with dout∘din = 0.
  HomologySpace(const Matrix<F>& dout, const Matrix<F>& din, const F& f)
      : f_(f),
        ker_(kernel_basis(dout, f)),
        free_pos_(kernel_free_positions(dout, f)),
        reducer_(ker_.cols(), f) {
    assert(din.rows() == dout.cols());
    for (std::size_t c = 0; c < din.cols(); ++c)
      reducer_.insert(kernel_coords(din.col(c)));
    hfree_ = reducer_.free_rows();
  }

  std::size_t dim() const { return hfree_.size(); }
  std::size_t ambient_dim() const { return ker_.rows(); }

  // Homology coordinates of a cycle (a vector of V with dout v = 0).
  std::vector<Elem> coords(const std::vector<Elem>& cycle) const {
    std::vector<Elem> kc = kernel_coords(cycle);
    reducer_.reduce(kc);
    std::vector<Elem> out;
    out.reserve(hfree_.size());
    for (auto i : hfree_) out.push_back(kc[i]);
    return out;
  }

  // A cycle representing the k-th homology basis vector.
  std::vector<Elem> representative(std::size_t k) const {
    return ker_.col(hfree_[k]);
  }

 private:
  std::vector<Elem> kernel_coords(const std::vector<Elem>& v) const {
    assert(v.size() == ker_.rows());
    std::vector<Elem> kc;
    kc.reserve(free_pos_.size());
    for (auto p : free_pos_) kc.push_back(v[p]);
    return kc;
  }

  F f_;
  Matrix<F> ker_;
  std::vector<std::size_t> free_pos_;
  ColumnReducer<F> reducer_;
  std::vector<std::size_t> hfree_;
};

// Homology dimensions of a finite complex of vector spaces.  maps[k] is
// d_{k+1}: V_{k+1} -> V_k; the result has one entry per position 0..maps.size().
// Checks that shapes chain and that consecutive composites vanish.
template <class F>
std::vector<std::size_t> complex_homology_dims(const std::vector<Matrix<F>>& maps,
                                               const F& f) {
  const std::size_t len = maps.size();
  std::vector<std::size_t> dims(len + 1);
  if (len == 0) return dims;  // no spaces can be inferred from no maps
  for (std::size_t k = 0; k + 1 < len; ++k) {
    if (maps[k].cols() != maps[k + 1].rows())
      throw ShapeMismatch("complex_homology_dims: maps " + std::to_string(k) +
                          " and " + std::to_string(k + 1) + " do not chain");
    if (!is_zero_matrix(matmul(maps[k], maps[k + 1], f), f))
      throw CompositionNonzero("complex_homology_dims: d∘d != 0 at " +
                               std::to_string(k));
  }
  std::vector<std::size_t> rk(len);
  for (std::size_t k = 0; k < len; ++k) rk[k] = rank(maps[k], f);
  // position 0: V_0 modulo im d_1; position k: ker d_k minus rank d_{k+1}
  dims[0] = maps[0].rows() - rk[0];
  for (std::size_t k = 1; k <= len; ++k) {
    std::size_t kerdim = maps[k - 1].cols() - rk[k - 1];
    std::size_t next_rank = (k < len) ? rk[k] : 0;
    assert(kerdim >= next_rank);
    dims[k] = kerdim - next_rank;
  }
  return dims;
}

}  // namespace lindef
