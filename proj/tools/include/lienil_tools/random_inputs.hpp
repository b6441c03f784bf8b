#pragma once

// Random inputs for the property checks.  Everything is driven by an
// explicit Rng so a seed fixes the whole run.

#include "lienil/grassmann.hpp"
#include "lienil/matrix.hpp"
#include "lienil/random.hpp"
#include "lienil/ring.hpp"

namespace lienil::tools {

/// Integer coefficients in [-bound, bound] on every power of the root.
Scalar random_scalar(const CyclotomicField& field, Rng& rng, long bound = 3);
Scalar random_nonzero_scalar(const CyclotomicField& field, Rng& rng, long bound = 3);

Scalar random_element(const ScalarRing& ring, Rng& rng);
GrassmannElement random_element(const GrassmannAlgebra& ring, Rng& rng);

Scalar random_unit(const ScalarRing& ring, Rng& rng);
GrassmannElement random_unit(const GrassmannAlgebra& ring, Rng& rng);

/// Units of the centre: nonzero scalars, or even Grassmann elements with
/// nonzero scalar part.
Scalar random_central_unit(const ScalarRing& ring, Rng& rng);
GrassmannElement random_central_unit(const GrassmannAlgebra& ring, Rng& rng);

template <Ring R>
MatrixOf<R> random_matrix(const R& ring, std::size_t n, Rng& rng) {
  MatrixOf<R> a(n, n, ring.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = random_element(ring, rng);
  return a;
}

}  // namespace lienil::tools
