#pragma once

// Transitive matrices: t_ii = 1 and t_ij t_jk = t_ik.  Equivalently
// t_ij = g_i g_j^{-1} for a sequence of units g_i, which is kept as a
// certificate.  Also the Hadamard automorphism Theta_T(A) = T * A.

#include <optional>
#include <string>
#include <vector>

#include "lienil/matrix.hpp"
#include "lienil/ring.hpp"

namespace lienil {

struct TransitivityFailure {
  std::size_t i, j, k;  // 0-based; i == j == k marks a bad diagonal entry
};

/// First index triple violating transitivity, or nullopt.
template <Ring R>
std::optional<TransitivityFailure> transitivity_failure(const R& ring, const MatrixOf<R>& t) {
  detail::require_square(t.rows(), t.cols(), "is_transitive");
  const std::size_t n = t.rows();
  for (std::size_t i = 0; i < n; ++i)
    if (!ring.equal(t(i, i), ring.one())) return TransitivityFailure{i, i, i};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!ring.equal(ring.mul(t(i, j), t(j, k)), t(i, k))) return TransitivityFailure{i, j, k};
  return std::nullopt;
}

template <Ring R>
bool is_transitive(const R& ring, const MatrixOf<R>& t) {
  return !transitivity_failure(ring, t).has_value();
}

/// A square matrix certified transitive.  Construction always re-runs the
/// full n^3 check, whatever the source.
template <Ring R>
class TransitiveMatrix {
 public:
  using Element = ElementOf<R>;

  /// Throws InvalidArgument if t is not transitive.
  static TransitiveMatrix verify(const R& ring, MatrixOf<R> t) {
    if (auto f = transitivity_failure(ring, t))
      throw InvalidArgument("matrix is not transitive at (" + std::to_string(f->i + 1) + "," +
                            std::to_string(f->j + 1) + "," + std::to_string(f->k + 1) + ")");
    TransitiveMatrix out;
    const std::size_t n = t.rows();
    // g_i = t_{i,1}; its inverse is t_{1,i} since t_{i,1} t_{1,i} = t_{i,i} = 1
    for (std::size_t i = 0; i < n; ++i) {
      out.units_.push_back(t(i, 0));
      out.inverses_.push_back(t(0, i));
    }
    out.matrix_ = std::move(t);
    return out;
  }

  /// T = [g_i g_j^{-1}]; throws NotInvertible for a non-unit g_i.
  static TransitiveMatrix from_units(const R& ring, std::vector<Element> g) {
    if (g.empty()) throw InvalidArgument("empty unit sequence");
    std::vector<Element> inv;
    for (std::size_t i = 0; i < g.size(); ++i) {
      auto x = ring.try_invert(g[i]);
      if (!x) throw NotInvertible("g_" + std::to_string(i + 1) + " = " + ring.to_string(g[i]) + " is not a unit");
      inv.push_back(std::move(*x));
    }
    const std::size_t n = g.size();
    MatrixOf<R> t(n, n, ring.zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t(i, j) = ring.mul(g[i], inv[j]);
    TransitiveMatrix out = verify(ring, std::move(t));
    out.units_ = std::move(g);
    out.inverses_ = std::move(inv);
    return out;
  }

  const MatrixOf<R>& matrix() const { return matrix_; }
  std::size_t size() const { return matrix_.rows(); }
  const Element& operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }
  /// Certificate: t_ij = units()[i] * inverses()[j].
  const std::vector<Element>& units() const { return units_; }
  const std::vector<Element>& inverses() const { return inverses_; }

  bool entries_central(const R& ring) const {
    for (const auto& x : matrix_.entries())
      if (!ring.is_central(x)) return false;
    return true;
  }

 private:
  TransitiveMatrix() = default;
  MatrixOf<R> matrix_;
  std::vector<Element> units_, inverses_;
};

template <Ring R>
TransitiveMatrix<R> transitive_from_units(const R& ring, std::vector<ElementOf<R>> g) {
  return TransitiveMatrix<R>::from_units(ring, std::move(g));
}

/// g_i = t_{i,1}.
template <Ring R>
std::vector<ElementOf<R>> factor_transitive(const R& ring, const TransitiveMatrix<R>& t) {
  std::vector<ElementOf<R>> g;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!ring.try_invert(t(i, 0)))
      throw NotInvertible("first-column entry t_" + std::to_string(i + 1) + ",1 is not invertible");
    g.push_back(t(i, 0));
  }
  return g;
}

/// The constant c with h_i = g_i c for all i, if there is one.
template <Ring R>
std::optional<ElementOf<R>> same_up_to_constant(const R& ring, const std::vector<ElementOf<R>>& g,
                                                const std::vector<ElementOf<R>>& h) {
  if (g.size() != h.size() || g.empty()) return std::nullopt;
  auto g1_inv = ring.try_invert(g[0]);
  if (!g1_inv) return std::nullopt;
  ElementOf<R> c = ring.mul(*g1_inv, h[0]);
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!ring.equal(h[i], ring.mul(g[i], c))) return std::nullopt;
  return c;
}

/// P^{(u)}: p_ij = u^{i-j}, from g_i = u^{i-1}.
template <Ring R>
TransitiveMatrix<R> power_transitive(const R& ring, const ElementOf<R>& u, std::size_t n) {
  std::vector<ElementOf<R>> g{ring.one()};
  for (std::size_t i = 1; i < n; ++i) g.push_back(ring.mul(g.back(), u));
  return transitive_from_units(ring, std::move(g));
}

/// H_n, every entry 1.
template <Ring R>
TransitiveMatrix<R> hadamard_identity(const R& ring, std::size_t n) {
  return TransitiveMatrix<R>::verify(ring, MatrixOf<R>(n, n, ring.one()));
}

/// Blow-up along cuts d_1 < ... < d_n (d_0 = 0 implied): the m x m matrix
/// with t_hat_{p,q} = t_{i,j} when d_{i-1} < p <= d_i and d_{j-1} < q <= d_j.
template <Ring R>
TransitiveMatrix<R> blow_up(const R& ring, const TransitiveMatrix<R>& t, const std::vector<std::size_t>& cuts) {
  if (cuts.size() != t.size())
    throw InvalidArgument("blow-up needs " + std::to_string(t.size()) + " cut points, got " +
                          std::to_string(cuts.size()));
  std::size_t prev = 0;
  for (std::size_t c : cuts) {
    if (c <= prev) throw InvalidArgument("blow-up cut sequence must be strictly increasing from 0");
    prev = c;
  }
  const std::size_t m = cuts.back();
  std::vector<std::size_t> block(m);
  for (std::size_t i = 0, p = 0; i < cuts.size(); ++i)
    for (; p < cuts[i]; ++p) block[p] = i;
  MatrixOf<R> out(m, m, ring.zero());
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) out(p, q) = t(block[p], block[q]);
  return TransitiveMatrix<R>::verify(ring, std::move(out));
}

/// T^2, checked against n T.  A mismatch means the certificate is broken.
template <Ring R>
MatrixOf<R> transitive_square(const R& ring, const TransitiveMatrix<R>& t) {
  MatrixOf<R> sq = mul(ring, t.matrix(), t.matrix());
  const Scalar n = ring.field().from_int(static_cast<long>(t.size()));
  if (!equal(ring, sq, scale(ring, n, t.matrix()))) throw InvariantViolation("transitive matrix with T^2 != nT");
  return sq;
}

/// Theta_T(A) = T * A.  T must have central entries.
template <Ring R>
MatrixOf<R> theta(const R& ring, const TransitiveMatrix<R>& t, const MatrixOf<R>& a) {
  if (!t.entries_central(ring)) throw InvalidArgument("Theta_T needs a matrix over the centre");
  return hadamard(ring, t.matrix(), a);
}

/// Theta_T^{-1}(A) = S * A with S = [t_ij^{-1}] = [t_ji].
template <Ring R>
MatrixOf<R> theta_inverse(const R& ring, const TransitiveMatrix<R>& t, const MatrixOf<R>& a) {
  if (!t.entries_central(ring)) throw InvalidArgument("Theta_T needs a matrix over the centre");
  const std::size_t n = t.size();
  MatrixOf<R> s(n, n, ring.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) = t(j, i);
  return hadamard(ring, s, a);
}

/// Witness that A -> T * A is not an automorphism.
template <Ring R>
struct ThetaCounterexample {
  std::size_t i, j, k;  // 0-based
  bool unit_failure;    // T * I != I; otherwise T*(E_ij E_jk) != (T*E_ij)(T*E_jk)
  MatrixOf<R> lhs, rhs;
};

/// For a matrix T that is not transitive, finds matrix units E_ij, E_jk
/// with Theta_T(E_ij E_jk) != Theta_T(E_ij) Theta_T(E_jk), or reports that
/// Theta_T does not fix I.  nullopt means Theta_T is multiplicative and
/// unital on all matrix units.
template <Ring R>
std::optional<ThetaCounterexample<R>> theta_counterexample(const R& ring, const MatrixOf<R>& t) {
  detail::require_square(t.rows(), t.cols(), "theta_counterexample");
  const std::size_t n = t.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        MatrixOf<R> eij = matrix_unit(ring, n, i, j), ejk = matrix_unit(ring, n, j, k);
        MatrixOf<R> lhs = hadamard(ring, t, mul(ring, eij, ejk));
        MatrixOf<R> rhs = mul(ring, hadamard(ring, t, eij), hadamard(ring, t, ejk));
        if (!equal(ring, lhs, rhs)) return ThetaCounterexample<R>{i, j, k, false, std::move(lhs), std::move(rhs)};
      }
  MatrixOf<R> id = identity_matrix(ring, n);
  MatrixOf<R> img = hadamard(ring, t, id);
  if (!equal(ring, img, id)) return ThetaCounterexample<R>{0, 0, 0, true, std::move(img), std::move(id)};
  return std::nullopt;
}

}  // namespace lienil
