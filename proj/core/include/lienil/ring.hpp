#pragma once

// The unital-ring contract every construction in the library is generic
// over.  A ring is a context object R with a nested Element value type; all
// arithmetic goes through the context.  Every ring is an algebra over the
// cyclotomic field returned by field().

#include <concepts>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lienil/errors.hpp"
#include "lienil/scalars.hpp"

namespace lienil {

template <class R>
concept Ring = requires(const R& r, const typename R::Element& a, const typename R::Element& b, const Scalar& c) {
  typename R::Element;
  { r.zero() } -> std::same_as<typename R::Element>;
  { r.one() } -> std::same_as<typename R::Element>;
  { r.add(a, b) } -> std::same_as<typename R::Element>;
  { r.sub(a, b) } -> std::same_as<typename R::Element>;
  { r.neg(a) } -> std::same_as<typename R::Element>;
  { r.mul(a, b) } -> std::same_as<typename R::Element>;
  { r.equal(a, b) } -> std::same_as<bool>;
  { r.is_zero(a) } -> std::same_as<bool>;
  { r.is_central(a) } -> std::same_as<bool>;
  { r.try_invert(a) } -> std::same_as<std::optional<typename R::Element>>;
  // nullopt: the ring cannot decide
  { r.is_non_zero_divisor(a) } -> std::same_as<std::optional<bool>>;
  { r.embed(c) } -> std::same_as<typename R::Element>;
  { r.scale(c, a) } -> std::same_as<typename R::Element>;
  { r.field() } -> std::same_as<const CyclotomicField&>;
  { r.to_string(a) } -> std::same_as<std::string>;
};

template <Ring R>
using ElementOf = typename R::Element;

template <Ring R>
ElementOf<R> from_int(const R& ring, long v) {
  return ring.embed(ring.field().from_int(v));
}

template <Ring R>
ElementOf<R> power(const R& ring, const ElementOf<R>& x, unsigned k) {
  ElementOf<R> result = ring.one();
  for (unsigned i = 0; i < k; ++i) result = ring.mul(result, x);
  return result;
}

/// x^k for possibly negative k; negative powers need a unit.
template <Ring R>
ElementOf<R> signed_power(const R& ring, const ElementOf<R>& x, long k) {
  if (k >= 0) return power(ring, x, static_cast<unsigned>(k));
  auto inv = ring.try_invert(x);
  if (!inv) throw NotInvertible("negative power of non-unit " + ring.to_string(x));
  return power(ring, *inv, static_cast<unsigned>(-k));
}

/// [x, y] = xy - yx
template <Ring R>
ElementOf<R> commutator(const R& ring, const ElementOf<R>& x, const ElementOf<R>& y) {
  return ring.sub(ring.mul(x, y), ring.mul(y, x));
}

/// [[...[[x1, x2], x3], ...], xm]
template <Ring R>
ElementOf<R> left_normed_commutator(const R& ring, std::span<const ElementOf<R>> xs) {
  if (xs.empty()) throw InvalidArgument("empty commutator");
  ElementOf<R> acc = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) acc = commutator(ring, acc, xs[i]);
  return acc;
}

/// True iff the left-normed commutator of length k+1 vanishes on every tuple.
template <Ring R>
bool is_lie_nilpotent_index(const R& ring, unsigned k, std::span<const std::vector<ElementOf<R>>> witnesses) {
  if (k == 0) throw InvalidArgument("Lie nilpotency index must be positive");
  for (const auto& tuple : witnesses) {
    if (tuple.size() != k + 1)
      throw InvalidArgument("witness tuple of length " + std::to_string(tuple.size()) + ", expected " +
                            std::to_string(k + 1));
    if (!ring.is_zero(left_normed_commutator<R>(ring, tuple))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

/// A named ring endomorphism.  Validation against the ring laws is done by
/// the factories that build them (see validate_endomorphism).
template <Ring R>
struct Endomorphism {
  using Element = ElementOf<R>;

  std::string name;
  std::function<Element(const Element&)> action;

  Element operator()(const Element& x) const { return action(x); }

  /// delta^k(x)
  Element iterate(const Element& x, unsigned k) const {
    Element y = x;
    for (unsigned i = 0; i < k; ++i) y = action(y);
    return y;
  }
};

template <Ring R>
Endomorphism<R> identity_endomorphism(const R&) {
  return {"identity", [](const ElementOf<R>& x) { return x; }};
}

template <Ring R>
bool fixed_ring_member(const R& ring, const Endomorphism<R>& delta, const ElementOf<R>& x) {
  return ring.equal(delta(x), x);
}

/// First violated endomorphism law over the samples, or nullopt.  Checks
/// delta(1) = 1 and additivity/multiplicativity on every ordered pair.
template <Ring R>
std::optional<std::string> endomorphism_violation(const R& ring, const Endomorphism<R>& delta,
                                                  std::span<const ElementOf<R>> samples) {
  if (!ring.equal(delta(ring.one()), ring.one())) return delta.name + "(1) != 1";
  std::vector<ElementOf<R>> images;
  images.reserve(samples.size());
  for (const auto& s : samples) images.push_back(delta(s));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = 0; j < samples.size(); ++j) {
      if (!ring.equal(delta(ring.add(samples[i], samples[j])), ring.add(images[i], images[j])))
        return "additivity fails on samples " + std::to_string(i) + ", " + std::to_string(j);
      if (!ring.equal(delta(ring.mul(samples[i], samples[j])), ring.mul(images[i], images[j])))
        return "multiplicativity fails on samples " + std::to_string(i) + ", " + std::to_string(j);
    }
  }
  return std::nullopt;
}

/// Throws InvalidArgument when endomorphism_violation finds a problem.
template <Ring R>
void validate_endomorphism(const R& ring, const Endomorphism<R>& delta, std::span<const ElementOf<R>> samples) {
  if (auto v = endomorphism_violation(ring, delta, samples)) throw InvalidArgument("invalid endomorphism: " + *v);
}

/// delta^n(x) = x on every sample.
template <Ring R>
bool has_period_on(const R& ring, const Endomorphism<R>& delta, unsigned n, std::span<const ElementOf<R>> samples) {
  for (const auto& s : samples)
    if (!ring.equal(delta.iterate(s, n), s)) return false;
  return true;
}

// ---------------------------------------------------------------------------

/// The scalar field K viewed as a ring.
class ScalarRing {
 public:
  using Element = Scalar;

  explicit ScalarRing(const CyclotomicField& field = CyclotomicField::rationals()) : field_(&field) {}

  Element zero() const { return field_->zero(); }
  Element one() const { return field_->one(); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool is_central(const Element&) const { return true; }
  std::optional<Element> try_invert(const Element& a) const {
    if (a.is_zero()) return std::nullopt;
    return a.inv();
  }
  std::optional<bool> is_non_zero_divisor(const Element& a) const { return !a.is_zero(); }
  Element embed(const Scalar& c) const { return c; }
  Element scale(const Scalar& c, const Element& a) const { return c * a; }
  const CyclotomicField& field() const { return *field_; }
  std::string to_string(const Element& a) const { return a.to_string(); }

 private:
  const CyclotomicField* field_;
};

static_assert(Ring<ScalarRing>);

}  // namespace lienil
