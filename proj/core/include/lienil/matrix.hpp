#pragma once

// Dense matrices over a Ring.  Entry products are always taken in
// row-times-column order, so everything here is valid for noncommutative
// entries.  Indices are 0-based.

#include <cstddef>
#include <functional>
#include <string>
#include <type_traits>
#include <vector>

#include "lienil/errors.hpp"
#include "lienil/ring.hpp"

namespace lienil {

template <class E>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const E& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(std::vector<std::vector<E>> rows) {
    Matrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (auto& r : rows) {
      if (r.size() != m.cols_) throw InvalidArgument("ragged matrix rows");
      for (auto& x : r) m.data_.push_back(std::move(x));
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  E& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const E& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const E& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw InvalidArgument("matrix index out of range");
    return (*this)(i, j);
  }

  const std::vector<E>& entries() const { return data_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<E> data_;
};

template <Ring R>
using MatrixOf = Matrix<ElementOf<R>>;

namespace detail {
inline void require_same_shape(std::size_t r1, std::size_t c1, std::size_t r2, std::size_t c2, const char* op) {
  if (r1 != r2 || c1 != c2)
    throw InvalidArgument(std::string(op) + ": dimension mismatch " + std::to_string(r1) + "x" + std::to_string(c1) +
                          " vs " + std::to_string(r2) + "x" + std::to_string(c2));
}
inline void require_square(std::size_t r, std::size_t c, const char* op) {
  if (r != c) throw InvalidArgument(std::string(op) + ": matrix must be square");
}
}  // namespace detail

template <Ring R>
MatrixOf<R> zero_matrix(const R& ring, std::size_t rows, std::size_t cols) {
  return MatrixOf<R>(rows, cols, ring.zero());
}

template <Ring R>
MatrixOf<R> identity_matrix(const R& ring, std::size_t n) {
  MatrixOf<R> m(n, n, ring.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
  return m;
}

/// c on the diagonal.
template <Ring R>
MatrixOf<R> scalar_matrix(const R& ring, std::size_t n, const ElementOf<R>& c) {
  MatrixOf<R> m(n, n, ring.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

/// Entrywise image under f.
template <class E, class F>
auto map_entries(const Matrix<E>& a, F&& f) {
  using Out = std::decay_t<std::invoke_result_t<F&, const E&>>;
  std::vector<std::vector<Out>> rows(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    rows[i].reserve(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) rows[i].push_back(f(a(i, j)));
  }
  if (a.rows() == 0) return Matrix<Out>();
  return Matrix<Out>::from_rows(std::move(rows));
}

template <Ring R>
MatrixOf<R> add(const R& ring, const MatrixOf<R>& a, const MatrixOf<R>& b) {
  detail::require_same_shape(a.rows(), a.cols(), b.rows(), b.cols(), "add");
  MatrixOf<R> r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = ring.add(a(i, j), b(i, j));
  return r;
}

template <Ring R>
MatrixOf<R> sub(const R& ring, const MatrixOf<R>& a, const MatrixOf<R>& b) {
  detail::require_same_shape(a.rows(), a.cols(), b.rows(), b.cols(), "sub");
  MatrixOf<R> r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = ring.sub(a(i, j), b(i, j));
  return r;
}

template <Ring R>
MatrixOf<R> neg(const R& ring, const MatrixOf<R>& a) {
  return map_entries(a, [&](const ElementOf<R>& x) { return ring.neg(x); });
}

template <Ring R>
MatrixOf<R> mul(const R& ring, const MatrixOf<R>& a, const MatrixOf<R>& b) {
  if (a.cols() != b.rows())
    throw InvalidArgument("mul: inner dimensions " + std::to_string(a.cols()) + " and " + std::to_string(b.rows()));
  MatrixOf<R> r(a.rows(), b.cols(), ring.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (ring.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) = ring.add(r(i, j), ring.mul(a(i, k), b(k, j)));
    }
  return r;
}

/// c a_{ij}
template <Ring R>
MatrixOf<R> mul_left(const R& ring, const ElementOf<R>& c, const MatrixOf<R>& a) {
  return map_entries(a, [&](const ElementOf<R>& x) { return ring.mul(c, x); });
}

/// a_{ij} c
template <Ring R>
MatrixOf<R> mul_right(const R& ring, const MatrixOf<R>& a, const ElementOf<R>& c) {
  return map_entries(a, [&](const ElementOf<R>& x) { return ring.mul(x, c); });
}

template <Ring R>
MatrixOf<R> scale(const R& ring, const Scalar& c, const MatrixOf<R>& a) {
  return map_entries(a, [&](const ElementOf<R>& x) { return ring.scale(c, x); });
}

template <Ring R>
MatrixOf<R> matrix_power(const R& ring, const MatrixOf<R>& a, unsigned k) {
  detail::require_square(a.rows(), a.cols(), "matrix_power");
  MatrixOf<R> r = identity_matrix(ring, a.rows());
  for (unsigned i = 0; i < k; ++i) r = mul(ring, r, a);
  return r;
}

template <Ring R>
ElementOf<R> trace(const R& ring, const MatrixOf<R>& a) {
  detail::require_square(a.rows(), a.cols(), "trace");
  ElementOf<R> t = ring.zero();
  for (std::size_t i = 0; i < a.rows(); ++i) t = ring.add(t, a(i, i));
  return t;
}

/// Deletes one row and one column.
template <class E>
Matrix<E> minor(const Matrix<E>& a, std::size_t row, std::size_t col) {
  if (row >= a.rows() || col >= a.cols()) throw InvalidArgument("minor: index out of range");
  if (a.rows() < 2 || a.cols() < 2) throw InvalidArgument("minor of a matrix with a single row or column");
  std::vector<std::vector<E>> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i == row) continue;
    std::vector<E> r;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (j != col) r.push_back(a(i, j));
    rows.push_back(std::move(r));
  }
  return Matrix<E>::from_rows(std::move(rows));
}

/// [a_{ij} b_{ij}]
template <Ring R>
MatrixOf<R> hadamard(const R& ring, const MatrixOf<R>& a, const MatrixOf<R>& b) {
  detail::require_same_shape(a.rows(), a.cols(), b.rows(), b.cols(), "hadamard");
  MatrixOf<R> r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = ring.mul(a(i, j), b(i, j));
  return r;
}

template <Ring R>
bool equal(const R& ring, const MatrixOf<R>& a, const MatrixOf<R>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!ring.equal(a(i, j), b(i, j))) return false;
  return true;
}

template <Ring R>
bool is_zero_matrix(const R& ring, const MatrixOf<R>& a) {
  for (const auto& x : a.entries())
    if (!ring.is_zero(x)) return false;
  return true;
}

/// The standard matrix unit E_{i,j}.
template <Ring R>
MatrixOf<R> matrix_unit(const R& ring, std::size_t n, std::size_t i, std::size_t j) {
  MatrixOf<R> m = zero_matrix(ring, n, n);
  m(i, j) = ring.one();
  return m;
}

template <Ring R>
std::string to_string(const R& ring, const MatrixOf<R>& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) s += ", ";
      s += ring.to_string(a(i, j));
    }
    s += "]";
  }
  return s + "]";
}

/// delta_n: delta applied entrywise.
template <Ring R>
MatrixOf<R> delta_n(const Endomorphism<R>& delta, const MatrixOf<R>& a) {
  return map_entries(a, [&](const ElementOf<R>& x) { return delta(x); });
}

// ---------------------------------------------------------------------------

/// M_n(R) as a ring in its own right.
template <Ring R>
class MatrixRing {
 public:
  using Base = R;
  using Element = MatrixOf<R>;

  MatrixRing(R base, std::size_t n) : base_(std::move(base)), n_(n) {
    if (n == 0) throw InvalidArgument("matrix ring of size 0");
  }

  const R& base() const { return base_; }
  std::size_t size() const { return n_; }

  Element zero() const { return zero_matrix(base_, n_, n_); }
  Element one() const { return identity_matrix(base_, n_); }
  Element add(const Element& a, const Element& b) const { return lienil::add(base_, check(a), check(b)); }
  Element sub(const Element& a, const Element& b) const { return lienil::sub(base_, check(a), check(b)); }
  Element neg(const Element& a) const { return lienil::neg(base_, check(a)); }
  Element mul(const Element& a, const Element& b) const { return lienil::mul(base_, check(a), check(b)); }
  bool equal(const Element& a, const Element& b) const { return lienil::equal(base_, check(a), check(b)); }
  bool is_zero(const Element& a) const { return is_zero_matrix(base_, check(a)); }

  /// Z(M_n(R)) = Z(R) I_n
  bool is_central(const Element& a) const {
    auto c = scalar_diagonal(check(a));
    return c && base_.is_central(*c);
  }
  /// Only recognises invertible scalar matrices c I_n.
  std::optional<Element> try_invert(const Element& a) const {
    auto c = scalar_diagonal(check(a));
    if (!c) return std::nullopt;
    auto inv = base_.try_invert(*c);
    if (!inv) return std::nullopt;
    return scalar_matrix(base_, n_, *inv);
  }
  std::optional<bool> is_non_zero_divisor(const Element& a) const {
    if (is_zero(a)) return false;
    auto c = scalar_diagonal(a);
    if (c && base_.try_invert(*c)) return true;
    return std::nullopt;
  }
  Element embed(const Scalar& c) const { return scalar_matrix(base_, n_, base_.embed(c)); }
  Element scale(const Scalar& c, const Element& a) const { return lienil::scale(base_, c, check(a)); }
  const CyclotomicField& field() const { return base_.field(); }
  std::string to_string(const Element& a) const { return lienil::to_string(base_, a); }

 private:
  const Element& check(const Element& a) const {
    if (a.rows() != n_ || a.cols() != n_)
      throw_context_mismatch(std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " matrix in M_" +
                             std::to_string(n_));
    return a;
  }
  std::optional<ElementOf<R>> scalar_diagonal(const Element& a) const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if (i == j && !base_.equal(a(i, j), a(0, 0))) return std::nullopt;
        if (i != j && !base_.is_zero(a(i, j))) return std::nullopt;
      }
    return a(0, 0);
  }

  R base_;
  std::size_t n_;
};

/// delta_n as an endomorphism of M_n(R).
template <Ring R>
Endomorphism<MatrixRing<R>> extend_to_matrices(const Endomorphism<R>& delta) {
  return {delta.name + "_n", [delta](const MatrixOf<R>& a) { return delta_n(delta, a); }};
}

// ---------------------------------------------------------------------------
// Classical determinant theory, valid over commutative rings only.

/// Laplace expansion along the first row.
template <Ring R>
ElementOf<R> classical_det(const R& ring, const MatrixOf<R>& a) {
  detail::require_square(a.rows(), a.cols(), "classical_det");
  const std::size_t n = a.rows();
  if (n == 0) return ring.one();
  if (n == 1) return a(0, 0);
  ElementOf<R> d = ring.zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (ring.is_zero(a(0, j))) continue;
    ElementOf<R> term = ring.mul(a(0, j), classical_det(ring, minor(a, 0, j)));
    d = (j % 2 == 0) ? ring.add(d, term) : ring.sub(d, term);
  }
  return d;
}

/// adj(A)_{r,s} = (-1)^{r+s} det(A with row s and column r deleted)
template <Ring R>
MatrixOf<R> classical_adjugate(const R& ring, const MatrixOf<R>& a) {
  detail::require_square(a.rows(), a.cols(), "classical_adjugate");
  const std::size_t n = a.rows();
  if (n == 1) return identity_matrix(ring, 1);
  MatrixOf<R> adj(n, n, ring.zero());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      ElementOf<R> c = classical_det(ring, minor(a, s, r));
      adj(r, s) = ((r + s) % 2 == 0) ? c : ring.neg(c);
    }
  return adj;
}

}  // namespace lienil
