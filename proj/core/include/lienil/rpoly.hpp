#pragma once

// R[z]: polynomials over a (noncommutative) ring R in one central
// indeterminate z.  Coefficient products keep their left/right order.

#include <algorithm>
#include <string>
#include <vector>

#include "lienil/ring.hpp"

namespace lienil {

template <class E>
struct RPolynomial {
  /// coeffs[i] multiplies z^i; trailing zeros are trimmed by the ring
  std::vector<E> coeffs;
};

template <Ring R>
class PolyRing {
 public:
  using Base = R;
  using Coeff = ElementOf<R>;
  using Element = RPolynomial<Coeff>;

  explicit PolyRing(R base) : base_(std::move(base)) {}

  const R& base() const { return base_; }

  Element zero() const { return {}; }
  Element one() const { return constant(base_.one()); }
  Element z() const { return Element{{base_.zero(), base_.one()}}; }
  Element constant(const Coeff& c) const { return trimmed(Element{{c}}); }
  /// c * z^k
  Element monomial(const Coeff& c, std::size_t k) const {
    Element p;
    p.coeffs.assign(k + 1, base_.zero());
    p.coeffs[k] = c;
    return trimmed(std::move(p));
  }

  Element from_coeffs(std::vector<Coeff> coeffs) const { return trimmed(Element{std::move(coeffs)}); }

  /// -1 for the zero polynomial
  long degree(const Element& p) const { return static_cast<long>(p.coeffs.size()) - 1; }
  Coeff coeff(const Element& p, std::size_t i) const { return i < p.coeffs.size() ? p.coeffs[i] : base_.zero(); }

  Element add(const Element& a, const Element& b) const {
    Element r;
    const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
    r.coeffs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i >= a.coeffs.size())
        r.coeffs.push_back(b.coeffs[i]);
      else if (i >= b.coeffs.size())
        r.coeffs.push_back(a.coeffs[i]);
      else
        r.coeffs.push_back(base_.add(a.coeffs[i], b.coeffs[i]));
    }
    return trimmed(std::move(r));
  }
  Element neg(const Element& a) const {
    Element r;
    r.coeffs.reserve(a.coeffs.size());
    for (const auto& c : a.coeffs) r.coeffs.push_back(base_.neg(c));
    return r;
  }
  Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

  /// sum_m (sum_{i+j=m} a_i b_j) z^m
  Element mul(const Element& a, const Element& b) const {
    if (a.coeffs.empty() || b.coeffs.empty()) return {};
    Element r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, base_.zero());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
      if (base_.is_zero(a.coeffs[i])) continue;
      for (std::size_t j = 0; j < b.coeffs.size(); ++j)
        r.coeffs[i + j] = base_.add(r.coeffs[i + j], base_.mul(a.coeffs[i], b.coeffs[j]));
    }
    return trimmed(std::move(r));
  }

  bool equal(const Element& a, const Element& b) const {
    if (a.coeffs.size() != b.coeffs.size()) return false;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
      if (!base_.equal(a.coeffs[i], b.coeffs[i])) return false;
    return true;
  }
  bool is_zero(const Element& a) const { return a.coeffs.empty(); }

  /// Z(R[z]) = Z(R)[z]
  bool is_central(const Element& a) const {
    return std::all_of(a.coeffs.begin(), a.coeffs.end(), [&](const Coeff& c) { return base_.is_central(c); });
  }

  /// Only constants with an invertible coefficient are recognised.
  std::optional<Element> try_invert(const Element& a) const {
    if (a.coeffs.size() != 1) return std::nullopt;
    auto inv = base_.try_invert(a.coeffs[0]);
    if (!inv) return std::nullopt;
    return constant(*inv);
  }
  std::optional<bool> is_non_zero_divisor(const Element& a) const {
    if (a.coeffs.empty()) return false;
    if (a.coeffs.size() == 1) return base_.is_non_zero_divisor(a.coeffs[0]);
    return std::nullopt;
  }

  Element embed(const Scalar& c) const { return constant(base_.embed(c)); }
  Element scale(const Scalar& c, const Element& a) const {
    Element r;
    r.coeffs.reserve(a.coeffs.size());
    for (const auto& x : a.coeffs) r.coeffs.push_back(base_.scale(c, x));
    return trimmed(std::move(r));
  }
  const CyclotomicField& field() const { return base_.field(); }

  std::string to_string(const Element& a) const {
    if (a.coeffs.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
      if (base_.is_zero(a.coeffs[i])) continue;
      if (!s.empty()) s += " + ";
      s += "(" + base_.to_string(a.coeffs[i]) + ")";
      if (i == 1) s += "·z";
      if (i > 1) s += "·z^" + std::to_string(i);
    }
    return s;
  }

  /// Horner-free right substitution: sum_i x^i a_i.
  Coeff evaluate_right(const Element& p, const Coeff& x) const {
    Coeff acc = base_.zero();
    Coeff xp = base_.one();
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
      acc = base_.add(acc, base_.mul(xp, p.coeffs[i]));
      if (i + 1 < p.coeffs.size()) xp = base_.mul(xp, x);
    }
    return acc;
  }
  /// sum_i a_i x^i
  Coeff evaluate_left(const Element& p, const Coeff& x) const {
    Coeff acc = base_.zero();
    Coeff xp = base_.one();
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
      acc = base_.add(acc, base_.mul(p.coeffs[i], xp));
      if (i + 1 < p.coeffs.size()) xp = base_.mul(xp, x);
    }
    return acc;
  }

 private:
  Element trimmed(Element p) const {
    while (!p.coeffs.empty() && base_.is_zero(p.coeffs.back())) p.coeffs.pop_back();
    return p;
  }

  R base_;
};

/// delta_z: applies delta coefficientwise and fixes z.
template <Ring R>
Endomorphism<PolyRing<R>> extend_to_poly(const PolyRing<R>& ring, const Endomorphism<R>& delta) {
  return {delta.name + "_z", [ring, delta](const typename PolyRing<R>::Element& p) {
            std::vector<ElementOf<R>> c;
            c.reserve(p.coeffs.size());
            for (const auto& x : p.coeffs) c.push_back(delta(x));
            return ring.from_coeffs(std::move(c));
          }};
}

}  // namespace lienil
