#pragma once

// Supermatrix algebras over the Grassmann algebra: per-entry shape bases,
// random members, and the three worked examples
//
//   "5.1"  M_n(E, epsilon, P(d,n))          P = [[1,-1],[-1,1]] blown up
//   "5.2"  M_n(E, rho_e, P^(e))             over Q(zeta_n)
//   "5.3"  M_n(E, sigma, Q(d,n))            Q = [[1, 1+v1v2],[1-v1v2, 1]]

#include <cstdint>
#include <string>
#include <vector>

#include "lienil/grassmann.hpp"
#include "lienil/matrix.hpp"
#include "lienil/random.hpp"
#include "lienil/supermatrix.hpp"

namespace lienil {

using GrassmannSpec = SuperAlgebraSpec<GrassmannAlgebra>;
using GrassmannMatrix = MatrixOf<GrassmannAlgebra>;
using ShapeMatrix = Matrix<ComponentBasis>;

/// Per-entry bases of {x : delta(x) = t_ij x}.  Entries with equal t_ij
/// share one solve.
ShapeMatrix supermatrix_shape(const GrassmannSpec& spec, unsigned cap = kDefaultSolverCap);

/// Entry (i, j) drawn independently from span(shape(i, j)).
GrassmannMatrix sample_supermatrix(const GrassmannSpec& spec, const ShapeMatrix& shape, Rng& rng, long bound = 3);
GrassmannMatrix sample_supermatrix(const GrassmannSpec& spec, std::uint64_t seed);

/// Q(zeta_n) for n >= 3; Q itself for n <= 2.
const CyclotomicField& field_with_root(unsigned n);

// Shape characterizations, built directly from their descriptions.
/// E0 + E0 v1
ComponentBasis fix_sigma_basis(const GrassmannAlgebra& alg);
/// E0 v1: odd monomials containing v1.
ComponentBasis even_times_v1_basis(const GrassmannAlgebra& alg);
/// {g0 + g1 : 2 g1 - sign v2 g0 in E0 v1}; sign = +1 gives Omega_{1,2},
/// sign = -1 gives Omega_{2,1}.
ComponentBasis omega_basis(const GrassmannAlgebra& alg, int sign);
/// Membership test straight from the same description, by splitting x.
bool omega_member(const GrassmannAlgebra& alg, const GrassmannElement& x, int sign);

struct ExampleParams {
  std::size_t n = 2;
  std::size_t d = 1;      // block cut for 5.1 and 5.3
  unsigned g = 0;         // 0: 6 for 5.1/5.2, 4 for 5.3
};

struct ExampleAlgebra {
  std::string name;
  ExampleParams params;
  GrassmannSpec spec;
  /// Solver output per entry.
  ShapeMatrix shape;
  /// The same subspaces from their closed-form description.
  ShapeMatrix expected;
  /// Label of each expected subspace ("E_{1,3}", "E0+E0v1", "Omega_{1,2}").
  Matrix<std::string> labels;

  bool shape_matches() const;
};

/// Throws InvalidArgument for an unknown name or bad parameters.
ExampleAlgebra example_algebra(const std::string& name, ExampleParams params);

}  // namespace lienil
