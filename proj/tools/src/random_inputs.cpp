#include "lienil_tools/random_inputs.hpp"

namespace lienil::tools {

Scalar random_scalar(const CyclotomicField& field, Rng& rng, long bound) {
  QPoly p;
  for (std::size_t i = 0; i < field.degree(); ++i) p.push_back(Rational(rng.uniform(-bound, bound)));
  // occasionally a proper fraction, so denominators get exercised
  if (rng.coin(1, 4)) p[0] /= Rational(rng.uniform(2, 5));
  return field.from_poly(std::move(p));
}

Scalar random_nonzero_scalar(const CyclotomicField& field, Rng& rng, long bound) {
  for (;;) {
    Scalar s = random_scalar(field, rng, bound);
    if (!s.is_zero()) return s;
  }
}

Scalar random_element(const ScalarRing& ring, Rng& rng) { return random_scalar(ring.field(), rng); }

GrassmannElement random_element(const GrassmannAlgebra& ring, Rng& rng) { return ring.random_element(rng, 4); }

Scalar random_unit(const ScalarRing& ring, Rng& rng) { return random_nonzero_scalar(ring.field(), rng); }

GrassmannElement random_unit(const GrassmannAlgebra& ring, Rng& rng) { return ring.random_unit(rng); }

Scalar random_central_unit(const ScalarRing& ring, Rng& rng) { return random_unit(ring, rng); }

GrassmannElement random_central_unit(const GrassmannAlgebra& ring, Rng& rng) {
  GrassmannElement x = ring.even_part(ring.random_element(rng, 4));
  return ring.add(ring.sub(x, ring.embed(ring.scalar_part(x))),
                  ring.embed(random_nonzero_scalar(ring.field(), rng)));
}

}  // namespace lienil::tools
