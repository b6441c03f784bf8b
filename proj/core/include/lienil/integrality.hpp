#pragma once

// Integrality over the fixed ring: for r in R, the k-th right
// characteristic polynomial of delta-bar(r) in M_n(R, delta, P^(e)),
// divided by its (integer) leading coefficient, is a monic polynomial with
// coefficients in Fix(delta) that annihilates r.  Same on the left.

#include <span>
#include <vector>

#include "lienil/dets.hpp"
#include "lienil/supermatrix.hpp"

namespace lienil {

template <Ring R>
struct IntegralityCertificate {
  unsigned n = 0, k = 0;
  EmbeddingConditionsReport conditions;
  MatrixOf<R> image;  // delta-bar(r)
  CharPoly<R> right, left;
  /// c'_i = lambda_i / lambda_top and c''_i, ascending; the top entry is 1
  std::vector<ElementOf<R>> right_monic, left_monic;
  bool coefficients_fixed = false;
  /// sum_i r^i c'_i and sum_i c''_i r^i
  ElementOf<R> right_value, left_value;
  bool right_holds = false, left_holds = false;

  bool holds() const { return coefficients_fixed && right_holds && left_holds; }
};

/// Throws InvalidArgument when the field has no primitive n-th root or the
/// embedding conditions fail (delta^n = id is checked on delta_samples).
template <Ring R>
IntegralityCertificate<R> integrality_certificate(const R& ring, const Endomorphism<R>& delta, const ElementOf<R>& r,
                                                  unsigned n, unsigned k,
                                                  std::span<const ElementOf<R>> delta_samples) {
  if (n == 0) throw InvalidArgument("integrality needs n >= 1");
  auto e = ring.field().primitive_root(n);
  if (!e) throw InvalidArgument("scalar field has no primitive " + std::to_string(n) + "-th root of unity");
  SuperAlgebraSpec<R> spec(ring, delta, power_transitive(ring, ring.embed(*e), n));

  IntegralityCertificate<R> cert;
  cert.n = n;
  cert.k = k;
  cert.conditions = check_embedding_conditions(spec, delta_samples);
  if (!cert.conditions.regime3())
    throw InvalidArgument("embedding conditions fail for (" + delta.name + ", P^(e), n=" + std::to_string(n) + ")");
  cert.image = embed(spec, r);
  cert.right = charpoly(ring, cert.image, k, Side::Right);
  cert.left = charpoly(ring, cert.image, k, Side::Left);

  auto normalise = [&](const CharPoly<R>& p) {
    auto inv = ring.try_invert(p.coeffs.back());
    if (!inv) throw NotInvertible("leading coefficient " + ring.to_string(p.coeffs.back()) + " is not a unit");
    std::vector<ElementOf<R>> c;
    for (const auto& x : p.coeffs) c.push_back(p.side == Side::Right ? ring.mul(x, *inv) : ring.mul(*inv, x));
    return c;
  };
  cert.right_monic = normalise(cert.right);
  cert.left_monic = normalise(cert.left);

  cert.coefficients_fixed = true;
  for (const auto* cs : {&cert.right_monic, &cert.left_monic})
    for (const auto& c : *cs)
      if (!fixed_ring_member(ring, delta, c)) cert.coefficients_fixed = false;

  PolyRing<R> pr(ring);
  cert.right_value = pr.evaluate_right(typename PolyRing<R>::Element{cert.right_monic}, r);
  cert.left_value = pr.evaluate_left(typename PolyRing<R>::Element{cert.left_monic}, r);
  cert.right_holds = ring.is_zero(cert.right_value);
  cert.left_holds = ring.is_zero(cert.left_value);
  return cert;
}

}  // namespace lienil
