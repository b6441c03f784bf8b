#pragma once

// The supermatrix algebra M_n(R, delta, T) = {A : delta(a_ij) = t_ij a_ij},
// the embedding delta-bar : R -> M_n(R) and the conditions under which it is
// an embedding into M_n(R) or into M_n(R, delta, T).

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lienil/matrix.hpp"
#include "lienil/ring.hpp"
#include "lienil/transitive.hpp"

namespace lienil {

template <Ring R>
class SuperAlgebraSpec {
 public:
  using Element = ElementOf<R>;

  /// Throws InvalidArgument unless every entry of T is central.
  SuperAlgebraSpec(R ring, Endomorphism<R> delta, TransitiveMatrix<R> t)
      : ring_(std::move(ring)), delta_(std::move(delta)), t_(std::move(t)) {
    if (!t_.entries_central(ring_)) throw InvalidArgument("supermatrix algebra needs a transitive T over Z(R)");
  }

  const R& ring() const { return ring_; }
  const Endomorphism<R>& delta() const { return delta_; }
  const TransitiveMatrix<R>& t() const { return t_; }
  std::size_t size() const { return t_.size(); }

 private:
  R ring_;
  Endomorphism<R> delta_;
  TransitiveMatrix<R> t_;
};

/// First entry (i, j) with delta(a_ij) != t_ij a_ij.
template <Ring R>
std::optional<std::pair<std::size_t, std::size_t>> membership_failure(const SuperAlgebraSpec<R>& spec,
                                                                      const MatrixOf<R>& a) {
  const std::size_t n = spec.size();
  detail::require_same_shape(a.rows(), a.cols(), n, n, "is_supermatrix");
  const R& ring = spec.ring();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!ring.equal(spec.delta()(a(i, j)), ring.mul(spec.t()(i, j), a(i, j)))) return std::pair{i, j};
  return std::nullopt;
}

template <Ring R>
bool is_supermatrix(const SuperAlgebraSpec<R>& spec, const MatrixOf<R>& a) {
  return !membership_failure(spec, a).has_value();
}

/// Membership of A + B, AB and c A.
template <Ring R>
bool closure_check(const SuperAlgebraSpec<R>& spec, const MatrixOf<R>& a, const MatrixOf<R>& b, const Scalar& c) {
  const R& ring = spec.ring();
  return is_supermatrix(spec, add(ring, a, b)) && is_supermatrix(spec, mul(ring, a, b)) &&
         is_supermatrix(spec, scale(ring, c, a));
}

/// delta-bar(r) = (1/n) [x_ij(r)],  x_ij(r) = sum_{k<n} t_ji^k delta^k(r).
template <Ring R>
MatrixOf<R> embed(const SuperAlgebraSpec<R>& spec, const ElementOf<R>& r) {
  const R& ring = spec.ring();
  const std::size_t n = spec.size();
  const Scalar n_s = ring.field().from_int(static_cast<long>(n));
  const Scalar inv_n = n_s.inv();
  std::vector<ElementOf<R>> iterates{r};
  for (std::size_t k = 1; k < n; ++k) iterates.push_back(spec.delta()(iterates.back()));
  MatrixOf<R> out(n, n, ring.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ElementOf<R> x = ring.zero();
      ElementOf<R> tp = ring.one();
      for (std::size_t k = 0; k < n; ++k) {
        x = ring.add(x, ring.mul(tp, iterates[k]));
        tp = ring.mul(tp, spec.t()(j, i));
      }
      out(i, j) = ring.scale(inv_n, x);
    }
  return out;
}

struct EmbeddingConditionsReport {
  std::size_t n = 0;
  bool units_central = true;      // t_i1 in U(R) and Z(R)
  bool inverse_n = true;          // 1/n exists
  bool roots_of_unity = true;     // t_i1^n = 1
  std::optional<bool> non_zero_divisors = true;  // 1 - t_ij, i != j; nullopt = unverified
  bool positive_power_sums = true;  // sum_i t_i1^k = 0, 1 <= k < n
  bool negative_power_sums = true;  // sum_i t_i1^-k = 0, 1 <= k < n
  bool t_fixed = true;            // delta(t_i1) = t_i1
  bool delta_period = true;       // delta^n = id on the samples
  /// All t_i1^n coincide, so the negative power sums follow from the positive ones.
  bool negative_sums_redundant = true;
  /// negative_sums_redundant and positive_power_sums imply negative_power_sums.
  bool redundancy_consistent = true;

  bool regime1() const { return units_central && inverse_n && roots_of_unity && non_zero_divisors == true; }
  bool regime2() const { return units_central && inverse_n && positive_power_sums && negative_power_sums; }
  bool regime3() const { return regime2() && t_fixed && roots_of_unity && delta_period; }
  bool all() const {
    return regime1() && regime2() && regime3() && negative_sums_redundant && redundancy_consistent;
  }
};

/// Every flag is an exact check except delta_period, which is checked on
/// the given samples.
template <Ring R>
EmbeddingConditionsReport check_embedding_conditions(const SuperAlgebraSpec<R>& spec,
                                                     std::span<const ElementOf<R>> samples) {
  const R& ring = spec.ring();
  const auto& t = spec.t();
  const std::size_t n = spec.size();
  EmbeddingConditionsReport rep;
  rep.n = n;
  rep.inverse_n = !ring.field().from_int(static_cast<long>(n)).is_zero();
  const ElementOf<R> one = ring.one();
  std::vector<ElementOf<R>> nth;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ti = t(i, 0);
    if (!ring.is_central(ti) || !ring.try_invert(ti)) rep.units_central = false;
    nth.push_back(power(ring, ti, static_cast<unsigned>(n)));
    if (!ring.equal(nth.back(), one)) rep.roots_of_unity = false;
    if (!ring.equal(spec.delta()(ti), ti)) rep.t_fixed = false;
    if (!ring.equal(nth.back(), nth.front())) rep.negative_sums_redundant = false;
  }
  bool unknown = false;
  for (std::size_t i = 0; i < n && rep.non_zero_divisors != false; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      auto v = ring.is_non_zero_divisor(ring.sub(one, t(i, j)));
      if (!v)
        unknown = true;
      else if (!*v) {
        rep.non_zero_divisors = false;
        break;
      }
    }
  if (rep.non_zero_divisors != false && unknown) rep.non_zero_divisors = std::nullopt;
  for (std::size_t k = 1; k < n; ++k) {
    ElementOf<R> pos = ring.zero(), neg = ring.zero();
    for (std::size_t i = 0; i < n; ++i) {
      pos = ring.add(pos, power(ring, t(i, 0), static_cast<unsigned>(k)));
      // t_i1^{-1} = t_1i
      neg = ring.add(neg, power(ring, t(0, i), static_cast<unsigned>(k)));
    }
    if (!ring.is_zero(pos)) rep.positive_power_sums = false;
    if (!ring.is_zero(neg)) rep.negative_power_sums = false;
  }
  rep.delta_period = has_period_on(ring, spec.delta(), static_cast<unsigned>(n), samples);
  rep.redundancy_consistent =
      !(rep.negative_sums_redundant && rep.positive_power_sums) || rep.negative_power_sums;
  return rep;
}

struct EmbeddingFailure {
  std::string law;     // unit | additivity | multiplicativity | injectivity | membership
  std::size_t sample;  // index into the pair list
};

struct EmbeddingVerification {
  std::vector<EmbeddingFailure> failures;
  /// Image membership is asserted only in regime (3).
  bool membership_asserted = false;
  /// Outside regime (3): how many images happened to be members anyway.
  std::size_t members_observed = 0;
  std::size_t images_checked = 0;

  bool ok() const { return failures.empty(); }
};

/// Checks the embedding laws on every pair: delta-bar(1) = I, additivity,
/// multiplicativity, the row-sum witness sum_i delta-bar(r)_{1,i} = r (so
/// delta-bar(r) = 0 forces r = 0), and image membership.  Throws
/// InvalidArgument unless the conditions report shows regime (2).
template <Ring R>
EmbeddingVerification verify_embedding(const SuperAlgebraSpec<R>& spec, const EmbeddingConditionsReport& conditions,
                                       std::span<const std::pair<ElementOf<R>, ElementOf<R>>> pairs) {
  if (!conditions.regime2()) throw InvalidArgument("embedding conditions do not hold for this spec");
  const R& ring = spec.ring();
  const std::size_t n = spec.size();
  EmbeddingVerification out;
  out.membership_asserted = conditions.regime3();
  if (!equal(ring, embed(spec, ring.one()), identity_matrix(ring, n))) out.failures.push_back({"unit", 0});

  auto witness = [&](const MatrixOf<R>& img, const ElementOf<R>& r) {
    ElementOf<R> s = ring.zero();
    for (std::size_t i = 0; i < n; ++i) s = ring.add(s, img(0, i));
    return ring.equal(s, r);
  };
  auto membership = [&](const MatrixOf<R>& img, std::size_t idx) {
    ++out.images_checked;
    const bool m = is_supermatrix(spec, img);
    if (m && !out.membership_asserted) ++out.members_observed;
    if (!m && out.membership_asserted) out.failures.push_back({"membership", idx});
  };

  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    const auto& [r, s] = pairs[idx];
    const MatrixOf<R> er = embed(spec, r), es = embed(spec, s);
    if (!equal(ring, embed(spec, ring.add(r, s)), add(ring, er, es))) out.failures.push_back({"additivity", idx});
    if (!equal(ring, embed(spec, ring.mul(r, s)), mul(ring, er, es)))
      out.failures.push_back({"multiplicativity", idx});
    if (!witness(er, r) || !witness(es, s)) out.failures.push_back({"injectivity", idx});
    membership(er, idx);
    membership(es, idx);
  }
  return out;
}

}  // namespace lienil
