#pragma once

// The Grassmann (exterior) algebra E on g anticommuting generators
// v1..vg over a cyclotomic field, with its gradings, the automorphisms
// epsilon, rho_e and sigma, and an exact solver for {x : delta(x) = t x}.
//
// A monomial v_{i1}...v_{ik} (i1 < ... < ik) is a bitmask with bit (i-1)
// set for each generator v_i.  Elements are sparse, sorted by mask, with no
// zero coefficients stored.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lienil/caps.hpp"
#include "lienil/random.hpp"
#include "lienil/ring.hpp"
#include "lienil/scalars.hpp"

namespace lienil {

using Mask = std::uint64_t;

struct GrassmannTerm {
  Mask mask;
  Scalar coeff;
};

class GrassmannElement {
 public:
  GrassmannElement() = default;

  unsigned generators() const { return g_; }
  std::span<const GrassmannTerm> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

 private:
  friend class GrassmannAlgebra;
  unsigned g_ = 0;
  std::vector<GrassmannTerm> terms_;
};

/// Sign of the product of monomials a and b: 0 if they share a generator,
/// otherwise (-1)^(number of pairs i in a, j in b with i > j).
int monomial_sign(Mask a, Mask b);

/// Ascending generator indices (1-based) of a monomial.
std::vector<unsigned> monomial_indices(Mask m);

class GrassmannAlgebra {
 public:
  using Element = GrassmannElement;
  static constexpr unsigned kMaxGenerators = 64;
  static constexpr unsigned kDefaultGenerators = 6;

  explicit GrassmannAlgebra(unsigned generators = kDefaultGenerators,
                            const CyclotomicField& field = CyclotomicField::rationals());

  unsigned generators() const { return g_; }
  /// 2^g; throws CapExceeded when g = 64.
  std::uint64_t dimension() const;

  // Ring contract
  Element zero() const;
  Element one() const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  bool equal(const Element& a, const Element& b) const;
  bool is_zero(const Element& a) const;
  /// Z(E) = E0 when g >= 2.
  bool is_central(const Element& a) const;
  /// Units are exactly the elements with nonzero scalar part; the inverse is
  /// a terminating geometric series in the nilpotent part.
  std::optional<Element> try_invert(const Element& a) const;
  /// Nonzero scalar part <=> unit <=> non-zero-divisor.
  std::optional<bool> is_non_zero_divisor(const Element& a) const;
  Element embed(const Scalar& c) const;
  Element scale(const Scalar& c, const Element& a) const;
  const CyclotomicField& field() const { return *field_; }
  std::string to_string(const Element& a) const;

  /// v_i, 1-based.
  Element generator(unsigned i) const;
  Element monomial(Mask mask, const Scalar& c) const;
  /// Product v_{i1} v_{i2} ... in the given order (indices 1-based).
  Element word(std::initializer_list<unsigned> indices, long coeff = 1) const;
  /// Canonicalises: merges equal masks, drops zeros, validates masks.
  Element from_terms(std::vector<GrassmannTerm> terms) const;

  Scalar coefficient(const Element& a, Mask mask) const;
  Scalar scalar_part(const Element& a) const;
  /// Length-k homogeneous component E(k).
  Element component(const Element& a, unsigned k) const;
  Element even_part(const Element& a) const;
  Element odd_part(const Element& a) const;

  /// Negates odd monomials.
  Element epsilon(const Element& a) const;
  /// Scales the length-k component by e^k.
  Element rho(const Element& a, const Scalar& e) const;
  /// (1 + v1) a (1 - v1)
  Element sigma(const Element& a) const;
  /// (1 - v1) a (1 + v1)
  Element sigma_inverse(const Element& a) const;

  /// Dense coordinates indexed by mask (length 2^g).
  std::vector<Scalar> to_coordinates(const Element& a) const;
  Element from_coordinates(std::span<const Scalar> coords) const;

  /// Uniform integer coefficients in [-coeff_bound, coeff_bound] on between
  /// 1 and max_terms random monomials.
  Element random_element(Rng& rng, unsigned max_terms = 6, long coeff_bound = 3) const;
  /// Random element with nonzero scalar part.
  Element random_unit(Rng& rng, unsigned max_terms = 4) const;

  /// "3/2 + 2·v1v3 − v1v2v4", monomials by length then lexicographically.
  std::string pretty(const Element& a) const;

  bool operator==(const GrassmannAlgebra& o) const { return g_ == o.g_ && field_ == o.field_; }

 private:
  void check(const Element& a) const;
  Element make(std::vector<GrassmannTerm> sorted_terms) const;

  unsigned g_;
  const CyclotomicField* field_;
};

static_assert(Ring<GrassmannAlgebra>);

// ---------------------------------------------------------------------------
// Automorphisms

Endomorphism<GrassmannAlgebra> epsilon_automorphism(const GrassmannAlgebra& alg);
/// rho_e for a root of unity e of the algebra's field.
Endomorphism<GrassmannAlgebra> rho_automorphism(const GrassmannAlgebra& alg, const Scalar& e);
/// rho_e where e is the primitive n-th root of unity of the field.
Endomorphism<GrassmannAlgebra> rho_automorphism(const GrassmannAlgebra& alg, unsigned n);
Endomorphism<GrassmannAlgebra> sigma_automorphism(const GrassmannAlgebra& alg);
Endomorphism<GrassmannAlgebra> sigma_inverse_automorphism(const GrassmannAlgebra& alg);
/// The K-algebra endomorphism with v_i -> images[i-1].  Throws
/// InvalidArgument unless the images pairwise anticommute and square to 0.
Endomorphism<GrassmannAlgebra> endomorphism_from_generator_images(const GrassmannAlgebra& alg,
                                                                  std::vector<GrassmannElement> images);

/// Samples for endomorphism validation: generators, 1, and random products.
std::vector<GrassmannElement> validation_samples(const GrassmannAlgebra& alg, std::uint64_t seed, std::size_t count);

// ---------------------------------------------------------------------------
// Subspaces

/// K-linearly independent spanning set of a subspace of E.
struct ComponentBasis {
  std::vector<GrassmannElement> basis;
  std::size_t dimension() const { return basis.size(); }
};

/// Linearly independent subset-free basis of span(elems).
ComponentBasis span_of(const GrassmannAlgebra& alg, std::span<const GrassmannElement> elems);
std::size_t span_rank(const GrassmannAlgebra& alg, std::span<const GrassmannElement> elems);
bool in_span(const GrassmannAlgebra& alg, const ComponentBasis& b, const GrassmannElement& x);
/// Equal rank and mutual containment.
bool same_subspace(const GrassmannAlgebra& alg, const ComponentBasis& a, const ComponentBasis& b);
bool is_independent(const GrassmannAlgebra& alg, const ComponentBasis& b);

/// Basis of E_{m,n} = sum_u E(m + n u) in the g-generator truncation.
ComponentBasis graded_component_basis(const GrassmannAlgebra& alg, unsigned m, unsigned n);

/// Basis of {x in E : delta(x) = t x}; delta must be K-linear.  Materialises
/// the 2^g x 2^g matrix of x -> delta(x) - t x, so g is capped.
ComponentBasis solve_constraint(const GrassmannAlgebra& alg, const Endomorphism<GrassmannAlgebra>& delta,
                                const GrassmannElement& t, unsigned cap = kDefaultSolverCap);

/// Random element of span(b): integer coefficients in [-bound, bound].
GrassmannElement sample_from(const GrassmannAlgebra& alg, const ComponentBasis& b, Rng& rng, long bound = 3);

/// Checks [[...[x1, x2], ...], x_{k+1}] = 0 on all (k+1)-tuples of basis
/// monomials.  The identity is multilinear, so this is a proof for the
/// truncation.
bool lie_nilpotent_exhaustive(const GrassmannAlgebra& alg, unsigned k);

}  // namespace lienil
