#include <doctest.h>

#include "lienil/errors.hpp"
#include "lienil/grassmann.hpp"
#include "lienil/oracle.hpp"
#include "lienil/rpoly.hpp"
#include "../support/free_algebra.hpp"

using namespace lienil;

TEST_CASE("commutators") {
  const GrassmannAlgebra e(4);
  const auto v1 = e.generator(1), v2 = e.generator(2), v3 = e.generator(3);
  CHECK(e.equal(commutator(e, v1, v2), e.word({1, 2}, 2)));
  CHECK(e.is_zero(commutator(e, v1, e.word({2, 3}))));
  const std::vector<GrassmannElement> xs{v1, v2, v3};
  CHECK(e.is_zero(left_normed_commutator<GrassmannAlgebra>(e, xs)));
  CHECK_THROWS_AS(left_normed_commutator<GrassmannAlgebra>(e, std::span<const GrassmannElement>{}), InvalidArgument);
}

TEST_CASE("Lie nilpotency witnesses") {
  const GrassmannAlgebra e(4);
  const auto v1 = e.generator(1), v2 = e.generator(2), v3 = e.generator(3);
  const std::vector<std::vector<GrassmannElement>> pairs{{v1, v2}};
  CHECK_FALSE(is_lie_nilpotent_index<GrassmannAlgebra>(e, 1, pairs));
  const std::vector<std::vector<GrassmannElement>> triples{{v1, v2, v3}, {e.add(v1, e.one()), v2, v1}};
  CHECK(is_lie_nilpotent_index<GrassmannAlgebra>(e, 2, triples));
  CHECK_THROWS_AS(is_lie_nilpotent_index<GrassmannAlgebra>(e, 2, pairs), InvalidArgument);
  CHECK_THROWS_AS(is_lie_nilpotent_index<GrassmannAlgebra>(e, 0, pairs), InvalidArgument);
}

TEST_CASE("fixed ring and iterates") {
  const GrassmannAlgebra e(4);
  const auto eps = epsilon_automorphism(e);
  CHECK(fixed_ring_member(e, eps, e.word({1, 2})));
  CHECK_FALSE(fixed_ring_member(e, eps, e.generator(3)));
  CHECK(e.equal(eps.iterate(e.generator(1), 2), e.generator(1)));
  CHECK(e.equal(eps.iterate(e.generator(1), 3), e.neg(e.generator(1))));
  const auto samples = validation_samples(e, 9, 4);
  CHECK(has_period_on(e, eps, 2, std::span(samples)));
  CHECK_FALSE(has_period_on(e, eps, 1, std::span(samples)));
}

TEST_CASE("endomorphism validation catches a non-multiplicative map") {
  const GrassmannAlgebra e(3);
  // x -> 2x is additive but not unital
  Endomorphism<GrassmannAlgebra> twice{"twice", [e](const GrassmannElement& x) { return e.scale(e.field().from_int(2), x); }};
  const auto samples = validation_samples(e, 1, 3);
  CHECK(endomorphism_violation(e, twice, std::span(samples)).has_value());
  CHECK_THROWS_AS(validate_endomorphism(e, twice, std::span(samples)), InvalidArgument);
}

TEST_CASE("R[z] keeps coefficient order") {
  const oracle::FreeAlgebra f({"a", "b"});
  const PolyRing<oracle::FreeAlgebra> pr(f);
  const auto a = f.var(0), b = f.var(1);
  // (a z)(b) = ab z, not ba z
  const auto p = pr.mul(pr.monomial(a, 1), pr.constant(b));
  CHECK(pr.degree(p) == 1);
  CHECK(f.equal(pr.coeff(p, 1), f.mul(a, b)));
  CHECK_FALSE(f.equal(pr.coeff(p, 1), f.mul(b, a)));
  // right substitution x^i a_i versus left a_i x^i
  const auto q = pr.from_coeffs({f.zero(), a});  // a z
  CHECK(f.equal(pr.evaluate_right(q, b), f.mul(b, a)));
  CHECK(f.equal(pr.evaluate_left(q, b), f.mul(a, b)));
  CHECK(pr.is_zero(pr.sub(p, p)));
  CHECK(pr.degree(pr.zero()) == -1);
}

TEST_CASE("extending an endomorphism to R[z]") {
  const GrassmannAlgebra e(3);
  const PolyRing<GrassmannAlgebra> pr(e);
  const auto eps = extend_to_poly(pr, epsilon_automorphism(e));
  const auto p = pr.from_coeffs({e.generator(1), e.one(), e.word({1, 2})});
  const auto img = eps(p);
  CHECK(e.equal(pr.coeff(img, 0), e.neg(e.generator(1))));
  CHECK(e.equal(pr.coeff(img, 2), e.word({1, 2})));
  CHECK(pr.equal(eps(pr.z()), pr.z()));
}

TEST_CASE("commutative oracle ring") {
  const CommutativePolyRing r({"x", "y"});
  const auto x = r.var("x"), y = r.var("y");
  const auto s = r.add(x, y);
  const auto sq = r.mul(s, s);
  CHECK(r.equal(sq, r.add(r.add(r.mul(x, x), r.scale(r.field().from_int(2), r.mul(x, y))), r.mul(y, y))));
  CHECK(r.monomial_key(r.parse_monomial_key("x^2*y")) == "x^2*y");
  CHECK(r.is_zero(r.sub(r.mul(x, y), r.mul(y, x))));
  CHECK_THROWS_AS(r.var("z"), InvalidArgument);
  CHECK_FALSE(r.try_invert(x).has_value());
  CHECK(r.equal(r.try_invert(r.embed(r.field().from_int(4))).value(), r.embed(r.field().from_rational(Rational(1, 4)))));
  CHECK(symbolic_matrix_variables(2) == std::vector<std::string>{"a11", "a12", "a21", "a22"});
}
