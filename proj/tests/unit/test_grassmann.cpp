#include <doctest.h>

#include "lienil/errors.hpp"
#include "lienil/grassmann.hpp"

using namespace lienil;

namespace {
long binomial(unsigned n, unsigned k) {
  long r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace

TEST_CASE("generators anticommute and square to zero") {
  const GrassmannAlgebra e(5);
  for (unsigned i = 1; i <= 5; ++i) {
    CHECK(e.is_zero(e.mul(e.generator(i), e.generator(i))));
    for (unsigned j = 1; j <= 5; ++j)
      CHECK(e.equal(e.mul(e.generator(i), e.generator(j)), e.neg(e.mul(e.generator(j), e.generator(i)))));
  }
  CHECK(e.equal(e.word({3, 1, 2}), e.word({1, 2, 3})));   // two transpositions
  CHECK(e.equal(e.word({2, 1, 3}), e.word({1, 2, 3}, -1)));
  CHECK(e.is_zero(e.word({1, 2, 1})));
  CHECK_THROWS_AS(e.generator(6), InvalidArgument);
  CHECK_THROWS_AS(e.generator(0), InvalidArgument);
}

TEST_CASE("monomial sign counts inversions") {
  CHECK(monomial_sign(0b001, 0b010) == 1);   // v1 * v2
  CHECK(monomial_sign(0b010, 0b001) == -1);  // v2 * v1
  CHECK(monomial_sign(0b110, 0b001) == 1);   // v2v3 * v1: two swaps
  CHECK(monomial_sign(0b011, 0b001) == 0);
  CHECK(monomial_indices(0b1011) == std::vector<unsigned>{1, 2, 4});
}

TEST_CASE("associativity on random elements") {
  const GrassmannAlgebra e(6);
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto a = e.random_element(rng), b = e.random_element(rng), c = e.random_element(rng);
    CHECK(e.equal(e.mul(e.mul(a, b), c), e.mul(a, e.mul(b, c))));
    CHECK(e.equal(e.mul(a, e.add(b, c)), e.add(e.mul(a, b), e.mul(a, c))));
  }
}

TEST_CASE("gradings and homogeneous components") {
  const GrassmannAlgebra e(4);
  const auto x = e.add(e.add(e.one(), e.generator(2)), e.word({1, 3, 4}, 5));
  CHECK(e.equal(e.component(x, 0), e.one()));
  CHECK(e.equal(e.component(x, 1), e.generator(2)));
  CHECK(e.is_zero(e.component(x, 2)));
  CHECK(e.equal(e.odd_part(x), e.add(e.generator(2), e.word({1, 3, 4}, 5))));
  CHECK(e.equal(e.add(e.even_part(x), e.odd_part(x)), x));
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned m = 0; m < n; ++m) {
      long dim = 0;
      for (unsigned k = m; k <= 4; k += n) dim += binomial(4, k);
      CHECK(static_cast<long>(graded_component_basis(e, m, n).dimension()) == dim);
    }
  CHECK_THROWS_AS(graded_component_basis(e, 2, 2), InvalidArgument);
}

TEST_CASE("epsilon, rho and sigma") {
  const GrassmannAlgebra e(4, CyclotomicField::get(3));
  const Scalar z = e.field().root();
  const auto v1 = e.generator(1), v2 = e.generator(2);
  CHECK(e.equal(e.epsilon(v1), e.neg(v1)));
  CHECK(e.equal(e.epsilon(e.word({1, 2})), e.word({1, 2})));
  CHECK(e.equal(e.rho(e.word({1, 2, 3}), z), e.word({1, 2, 3})));  // z^3 = 1
  CHECK(e.equal(e.rho(v1, z), e.scale(z, v1)));
  CHECK(e.equal(e.rho(e.word({1, 2}), z), e.scale(z * z, e.word({1, 2}))));
  // rho_{-1} = epsilon
  Rng rng(3);
  const auto x = e.random_element(rng, 8);
  CHECK(e.equal(e.rho(x, e.field().from_int(-1)), e.epsilon(x)));
  // sigma by its definition
  const auto one_plus = e.add(e.one(), v1), one_minus = e.sub(e.one(), v1);
  CHECK(e.equal(e.sigma(x), e.mul(e.mul(one_plus, x), one_minus)));
  CHECK(e.equal(e.sigma_inverse(e.sigma(x)), x));
  CHECK(e.equal(e.sigma(v2), e.add(v2, e.word({1, 2}, 2))));
}

TEST_CASE("automorphism factories validate") {
  const GrassmannAlgebra e(4);
  CHECK(epsilon_automorphism(e).name == "epsilon");
  CHECK_THROWS_AS(rho_automorphism(e, 3U), InvalidArgument);  // Q has no primitive cube root
  CHECK(rho_automorphism(e, 2U).name == "rho_e:2");
  // v_i -> v_i + v1v2 v_i ... images must anticommute: v1 -> 1 fails
  std::vector<GrassmannElement> bad{e.one(), e.generator(2), e.generator(3), e.generator(4)};
  CHECK_THROWS_AS(endomorphism_from_generator_images(e, bad), InvalidArgument);
  std::vector<GrassmannElement> swap{e.generator(2), e.generator(1), e.generator(3), e.generator(4)};
  const auto d = endomorphism_from_generator_images(e, swap);
  CHECK(e.equal(d(e.word({1, 3})), e.word({2, 3})));
}

TEST_CASE("centre, units and inverses") {
  const GrassmannAlgebra e(4);
  CHECK(e.is_central(e.word({1, 2})));
  CHECK_FALSE(e.is_central(e.generator(1)));
  CHECK(e.is_central(e.word({1, 2, 3, 4})));
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto u = e.random_unit(rng);
    const auto inv = e.try_invert(u);
    REQUIRE(inv.has_value());
    CHECK(e.equal(e.mul(u, *inv), e.one()));
    CHECK(e.equal(e.mul(*inv, u), e.one()));
  }
  CHECK_FALSE(e.try_invert(e.generator(1)).has_value());
  CHECK(e.is_non_zero_divisor(e.add(e.one(), e.generator(1))) == true);
  CHECK(e.is_non_zero_divisor(e.generator(1)) == false);
}

TEST_CASE("constraint solver") {
  const GrassmannAlgebra e(4);
  const auto eps = epsilon_automorphism(e);
  const auto even = solve_constraint(e, eps, e.one());
  const auto odd = solve_constraint(e, eps, e.embed(e.field().from_int(-1)));
  CHECK(same_subspace(e, even, graded_component_basis(e, 0, 2)));
  CHECK(same_subspace(e, odd, graded_component_basis(e, 1, 2)));
  CHECK_FALSE(same_subspace(e, even, odd));
  CHECK(is_independent(e, even));
  CHECK(even.dimension() == 8);
  CHECK(solve_constraint(e, eps, e.embed(e.field().from_int(3))).dimension() == 0);
  const GrassmannAlgebra big(13);
  CHECK_THROWS_AS(solve_constraint(big, epsilon_automorphism(big), big.one()), CapExceeded);
}

TEST_CASE("Lie nilpotency of the truncated algebra") {
  const GrassmannAlgebra e(4);
  CHECK(lie_nilpotent_exhaustive(e, 2));
  CHECK_FALSE(lie_nilpotent_exhaustive(e, 1));
}

TEST_CASE("pretty printing") {
  const GrassmannAlgebra e(4);
  const auto x = e.add(e.add(e.embed(e.field().from_rational(Rational(3, 2))), e.word({1, 3}, 2)),
                       e.word({1, 2, 4}, -1));
  CHECK(e.pretty(x) == "3/2 + 2·v1v3 − v1v2v4");
  CHECK(e.pretty(e.zero()) == "0");
  CHECK(e.pretty(e.neg(e.generator(2))) == "−v2");
}

TEST_CASE("coordinates round trip") {
  const GrassmannAlgebra e(5);
  Rng rng(8);
  const auto x = e.random_element(rng, 10);
  CHECK(e.equal(e.from_coordinates(e.to_coordinates(x)), x));
  CHECK(e.to_coordinates(x).size() == 32);
}

TEST_CASE("context mismatch") {
  const GrassmannAlgebra a(3), b(4);
  CHECK_THROWS_AS(a.add(a.generator(1), b.generator(1)), ContextMismatch);
}
