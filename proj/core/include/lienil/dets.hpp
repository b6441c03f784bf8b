#pragma once

// Symmetric determinant, preadjoint, right/left adjoint sequences and
// determinants, characteristic polynomials and Cayley-Hamilton residuals for
// matrices over a noncommutative ring.
//
//   sdet(A) = sum_{a,b in S_n} sgn(a) sgn(b) A[a(1),b(1)] ... A[a(n),b(n)]
//   A*_{r,s} = the same sum restricted to a(s) = s, b(s) = r, with the
//              factor at position s left out
//
// Factors are multiplied in position order t = 1..n.  Both sums are
// evaluated as a deterministic parallel map-reduce over the outer
// permutation a; the inner sum over b is a depth-first walk sharing prefix
// products.

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lienil/caps.hpp"
#include "lienil/matrix.hpp"
#include "lienil/parallel.hpp"
#include "lienil/permutations.hpp"
#include "lienil/ring.hpp"
#include "lienil/rpoly.hpp"

namespace lienil {

enum class Side { Right, Left };

inline const char* to_string(Side s) { return s == Side::Right ? "right" : "left"; }

namespace detail {

/// sum over b (with b(skip) = fixed_col when skip is set) of
/// sgn(b) * prod_{t != skip} A[rows[t], b(t)].
template <Ring R>
ElementOf<R> signed_column_sum(const R& ring, const MatrixOf<R>& a, const std::vector<std::size_t>& rows,
                               std::optional<std::size_t> skip, std::optional<std::size_t> fixed_col) {
  const std::size_t n = a.rows();
  ElementOf<R> plus = ring.zero();
  ElementOf<R> minus = ring.zero();
  const std::uint64_t reserved = fixed_col ? (std::uint64_t{1} << *fixed_col) : 0;
  auto above = [](std::size_t c) { return ~std::uint64_t{0} << (c + 1); };

  auto walk = [&](auto&& self, std::size_t t, std::uint64_t used, unsigned parity,
                  const ElementOf<R>& prefix) -> void {
    if (t == n) {
      if (parity & 1U)
        minus = ring.add(minus, prefix);
      else
        plus = ring.add(plus, prefix);
      return;
    }
    if (skip && t == *skip) {
      const std::size_t c = *fixed_col;
      self(self, t + 1, used | (std::uint64_t{1} << c), parity + std::popcount(used & above(c)), prefix);
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      const std::uint64_t bit = std::uint64_t{1} << c;
      if ((used | reserved) & bit) continue;
      const ElementOf<R>& entry = a(rows[t], c);
      if (ring.is_zero(entry)) continue;
      ElementOf<R> next = ring.mul(prefix, entry);
      if (ring.is_zero(next)) continue;
      self(self, t + 1, used | bit, parity + std::popcount(used & above(c)), next);
    }
  };
  walk(walk, 0, 0, 0, ring.one());
  return ring.sub(plus, minus);
}

template <Ring R>
ElementOf<R> signed_add(const R& ring, const ElementOf<R>& acc, const ElementOf<R>& x, int sign) {
  return sign > 0 ? ring.add(acc, x) : ring.sub(acc, x);
}

}  // namespace detail

/// Symmetric determinant.  Throws CapExceeded above the enumeration cap.
template <Ring R>
ElementOf<R> sdet(const R& ring, const MatrixOf<R>& a) {
  detail::require_square(a.rows(), a.cols(), "sdet");
  const std::size_t n = a.rows();
  if (n == 0) return ring.one();
  EnumerationCaps::check(n);
  const auto outer = permutations(n);
  return deterministic_reduce(
      outer.size(), 1, ring.zero(),
      [&](std::size_t i) {
        ElementOf<R> inner = detail::signed_column_sum(ring, a, outer[i].image, std::nullopt, std::nullopt);
        return outer[i].sign > 0 ? inner : ring.neg(inner);
      },
      [&](ElementOf<R> x, ElementOf<R> y) { return ring.add(x, y); });
}

/// sdet written as sum_{tau,pi} sgn(pi) A[tau(1), pi(tau(1))] ... A[tau(n), pi(tau(n))].
/// A second, plain enumeration of the same quantity.
template <Ring R>
ElementOf<R> sdet_conjugate_form(const R& ring, const MatrixOf<R>& a) {
  detail::require_square(a.rows(), a.cols(), "sdet");
  const std::size_t n = a.rows();
  EnumerationCaps::check(n);
  ElementOf<R> sum = ring.zero();
  const auto perms = permutations(n);
  for (const auto& tau : perms)
    for (const auto& pi : perms) {
      ElementOf<R> prod = ring.one();
      for (std::size_t t = 0; t < n; ++t) {
        const std::size_t row = tau.image[t];
        prod = ring.mul(prod, a(row, pi.image[row]));
      }
      sum = detail::signed_add(ring, sum, prod, pi.sign);
    }
  return sum;
}

/// Entry (r, s) of the preadjoint, 0-based.
template <Ring R>
ElementOf<R> preadjoint_entry(const R& ring, const MatrixOf<R>& a, std::size_t r, std::size_t s) {
  const std::size_t n = a.rows();
  ElementOf<R> sum = ring.zero();
  for (const auto& alpha : permutations(n, std::pair{s, s})) {
    ElementOf<R> inner = detail::signed_column_sum(ring, a, alpha.image, s, r);
    sum = detail::signed_add(ring, sum, inner, alpha.sign);
  }
  return sum;
}

/// The preadjoint A*.  Entries are computed in parallel, each independently.
template <Ring R>
MatrixOf<R> preadjoint(const R& ring, const MatrixOf<R>& a) {
  detail::require_square(a.rows(), a.cols(), "preadjoint");
  const std::size_t n = a.rows();
  if (n == 0) throw InvalidArgument("preadjoint of an empty matrix");
  EnumerationCaps::check(n);
  MatrixOf<R> out(n, n, ring.zero());
  detail::run_chunks(n * n, [&](std::size_t idx) { out(idx / n, idx % n) = preadjoint_entry(ring, a, idx / n, idx % n); });
  return out;
}

/// A*_{r,s} = (-1)^{r+s} sdet(A with row s and column r deleted).
template <Ring R>
MatrixOf<R> preadjoint_via_minors(const R& ring, const MatrixOf<R>& a) {
  detail::require_square(a.rows(), a.cols(), "preadjoint");
  const std::size_t n = a.rows();
  if (n == 1) return identity_matrix(ring, 1);
  MatrixOf<R> out(n, n, ring.zero());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      ElementOf<R> d = sdet(ring, minor(a, s, r));
      out(r, s) = (r + s) % 2 == 0 ? d : ring.neg(d);
    }
  return out;
}

// ---------------------------------------------------------------------------

/// Right: P_1 = A*, P_{j+1} = (A P_1 ... P_j)*, running[j] = A P_1 ... P_{j+1}.
/// Left:  Q_1 = A*, Q_{j+1} = (Q_j ... Q_1 A)*, running[j] = Q_{j+1} ... Q_1 A.
template <Ring R>
struct AdjointSequence {
  Side side;
  std::vector<MatrixOf<R>> adjoints;
  std::vector<MatrixOf<R>> running;
};

template <Ring R>
AdjointSequence<R> adjoint_sequence(const R& ring, const MatrixOf<R>& a, unsigned k, Side side) {
  detail::require_square(a.rows(), a.cols(), "adjoint_sequence");
  EnumerationCaps::check(a.rows(), k);
  AdjointSequence<R> seq{side, {}, {}};
  MatrixOf<R> adj = preadjoint(ring, a);
  MatrixOf<R> run = side == Side::Right ? mul(ring, a, adj) : mul(ring, adj, a);
  seq.adjoints.push_back(std::move(adj));
  seq.running.push_back(run);
  for (unsigned j = 1; j < k; ++j) {
    adj = preadjoint(ring, run);
    run = side == Side::Right ? mul(ring, run, adj) : mul(ring, adj, run);
    seq.adjoints.push_back(std::move(adj));
    seq.running.push_back(run);
  }
  return seq;
}

template <Ring R>
AdjointSequence<R> right_adjoint_sequence(const R& ring, const MatrixOf<R>& a, unsigned k) {
  return adjoint_sequence(ring, a, k, Side::Right);
}

template <Ring R>
AdjointSequence<R> left_adjoint_sequence(const R& ring, const MatrixOf<R>& a, unsigned k) {
  return adjoint_sequence(ring, a, k, Side::Left);
}

/// rdet_(k)(A) = tr(A P_1 ... P_k)
template <Ring R>
ElementOf<R> rdet(const R& ring, const MatrixOf<R>& a, unsigned k) {
  return trace(ring, right_adjoint_sequence(ring, a, k).running.back());
}

/// ldet_(k)(A) = tr(Q_k ... Q_1 A)
template <Ring R>
ElementOf<R> ldet(const R& ring, const MatrixOf<R>& a, unsigned k) {
  return trace(ring, left_adjoint_sequence(ring, a, k).running.back());
}

template <Ring R>
ElementOf<R> side_det(const R& ring, const MatrixOf<R>& a, unsigned k, Side side) {
  return side == Side::Right ? rdet(ring, a, k) : ldet(ring, a, k);
}

// ---------------------------------------------------------------------------

/// n ((n-1)!)^(1 + n + ... + n^(k-1)), the leading coefficient of the k-th
/// characteristic polynomial of an n x n matrix.
Integer charpoly_leading_coefficient(std::size_t n, unsigned k);

template <Ring R>
struct CharPoly {
  Side side;
  unsigned k;
  /// coeffs[i] multiplies z^i; always n^k + 1 entries
  std::vector<ElementOf<R>> coeffs;

  std::size_t degree() const { return coeffs.size() - 1; }
};

/// zI - A over R[z].
template <Ring R>
MatrixOf<PolyRing<R>> characteristic_matrix(const PolyRing<R>& pr, const MatrixOf<R>& a) {
  detail::require_square(a.rows(), a.cols(), "characteristic_matrix");
  const std::size_t n = a.rows();
  MatrixOf<PolyRing<R>> b(n, n, pr.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto c = pr.constant(pr.base().neg(a(i, j)));
      b(i, j) = i == j ? pr.add(pr.z(), c) : c;
    }
  return b;
}

/// p_{A,k}(z) = rdet_(k)(zI - A) or q_{A,k}(z) = ldet_(k)(zI - A).
template <Ring R>
CharPoly<R> charpoly(const R& ring, const MatrixOf<R>& a, unsigned k, Side side) {
  detail::require_square(a.rows(), a.cols(), "charpoly");
  const std::size_t n = a.rows();
  EnumerationCaps::check(n, k, EnumerationCaps::kMaxCharpolyK);
  PolyRing<R> pr(ring);
  auto p = side_det(pr, characteristic_matrix(pr, a), k, side);
  std::size_t degree = 1;
  for (unsigned i = 0; i < k; ++i) degree *= n;
  if (pr.degree(p) != static_cast<long>(degree))
    throw InvariantViolation("characteristic polynomial has degree " + std::to_string(pr.degree(p)) +
                             ", expected " + std::to_string(degree));
  CharPoly<R> out{side, k, {}};
  for (std::size_t i = 0; i <= degree; ++i) out.coeffs.push_back(pr.coeff(p, i));
  return out;
}

/// Right: sum_i A^i lambda_i.  Left: sum_i lambda_i A^i.
template <Ring R>
MatrixOf<R> cayley_hamilton_residual(const R& ring, const MatrixOf<R>& a, const CharPoly<R>& p) {
  detail::require_square(a.rows(), a.cols(), "cayley_hamilton_residual");
  const std::size_t n = a.rows();
  MatrixOf<R> acc = zero_matrix(ring, n, n);
  MatrixOf<R> pw = identity_matrix(ring, n);
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    const MatrixOf<R> term = p.side == Side::Right ? mul_right(ring, pw, p.coeffs[i]) : mul_left(ring, p.coeffs[i], pw);
    acc = add(ring, acc, term);
    if (i + 1 < p.coeffs.size()) pw = mul(ring, pw, a);
  }
  return acc;
}

template <Ring R>
struct CayleyHamiltonReport {
  CharPoly<R> poly;
  MatrixOf<R> residual;
  bool holds;
};

/// Characteristic polynomial and its residual.  The identity is only
/// guaranteed for rings that are Lie nilpotent of index k; callers check
/// that separately.
template <Ring R>
CayleyHamiltonReport<R> cayley_hamilton_check(const R& ring, const MatrixOf<R>& a, unsigned k,
                                              Side side = Side::Right) {
  CharPoly<R> p = charpoly(ring, a, k, side);
  MatrixOf<R> res = cayley_hamilton_residual(ring, a, p);
  const bool ok = is_zero_matrix(ring, res);
  return {std::move(p), std::move(res), ok};
}

}  // namespace lienil
