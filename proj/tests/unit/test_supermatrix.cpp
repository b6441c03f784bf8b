#include <doctest.h>

#include <vector>

#include "lienil/errors.hpp"
#include "lienil/examples.hpp"
#include "lienil/supermatrix.hpp"

using namespace lienil;

namespace {
GrassmannSpec p_spec(const GrassmannAlgebra& e) {
  return {e, epsilon_automorphism(e), power_transitive(e, e.embed(e.field().from_int(-1)), 2)};
}
}  // namespace

TEST_CASE("membership in M_2(E, epsilon, P)") {
  const GrassmannAlgebra e(4);
  const auto spec = p_spec(e);
  CHECK(is_supermatrix(spec, identity_matrix(e, 2)));
  MatrixOf<GrassmannAlgebra> a(2, 2, e.zero());
  a(0, 0) = e.generator(1);
  CHECK_FALSE(is_supermatrix(spec, a));
  const auto f = membership_failure(spec, a);
  REQUIRE(f.has_value());
  CHECK(f->first == 0);
  CHECK(f->second == 0);
  a(0, 0) = e.word({1, 2});
  a(0, 1) = e.generator(3);
  a(1, 0) = e.word({1, 2, 4});
  CHECK(is_supermatrix(spec, a));
  CHECK(closure_check(spec, a, identity_matrix(e, 2), e.field().from_rational(Rational(-3, 2))));
  CHECK_THROWS_AS(is_supermatrix(spec, identity_matrix(e, 3)), InvalidArgument);
}

TEST_CASE("embedding of odd and scalar elements") {
  const GrassmannAlgebra e(4);
  const auto spec = p_spec(e);
  const auto img = embed(spec, e.generator(1));
  CHECK(e.is_zero(img(0, 0)));
  CHECK(e.is_zero(img(1, 1)));
  CHECK(e.equal(img(0, 1), e.generator(1)));
  CHECK(e.equal(img(1, 0), e.generator(1)));
  CHECK(equal(e, embed(spec, e.one()), identity_matrix(e, 2)));
  CHECK(is_zero_matrix(e, embed(spec, e.zero())));
  // mixed element: even part on the diagonal, odd part off it
  const auto x = e.add(e.word({2, 3}), e.generator(4));
  const auto m = embed(spec, x);
  CHECK(e.equal(m(0, 0), e.word({2, 3})));
  CHECK(e.equal(m(0, 1), e.generator(4)));
  CHECK(is_supermatrix(spec, m));
}

TEST_CASE("embedding conditions") {
  const GrassmannAlgebra e(4);
  const auto samples = validation_samples(e, 7, 10);
  const auto good = check_embedding_conditions(p_spec(e), std::span<const GrassmannElement>(samples));
  CHECK(good.all());

  const GrassmannSpec h{e, epsilon_automorphism(e), hadamard_identity(e, 2)};
  const auto bad = check_embedding_conditions(h, std::span<const GrassmannElement>(samples));
  CHECK_FALSE(bad.positive_power_sums);
  CHECK_FALSE(bad.regime2());
  CHECK(bad.roots_of_unity);
  CHECK(bad.non_zero_divisors == false);  // 1 - 1 = 0
  std::vector<std::pair<GrassmannElement, GrassmannElement>> pairs{{e.one(), e.generator(1)}};
  CHECK_THROWS_AS(verify_embedding(h, bad, std::span<const std::pair<GrassmannElement, GrassmannElement>>(pairs)),
                  InvalidArgument);

  const GrassmannSpec one{e, epsilon_automorphism(e), hadamard_identity(e, 1)};
  CHECK(check_embedding_conditions(one, std::span<const GrassmannElement>(samples)).regime2());

  const auto rep = verify_embedding(p_spec(e), good, std::span<const std::pair<GrassmannElement, GrassmannElement>>(pairs));
  CHECK(rep.ok());
  CHECK(rep.membership_asserted);
}

TEST_CASE("rho_3 over Q(zeta_3) with P^(e)") {
  const GrassmannAlgebra e(4, CyclotomicField::get(3));
  const auto z = e.embed(e.field().root());
  const GrassmannSpec spec{e, rho_automorphism(e, 3U), power_transitive(e, z, 3)};
  const auto samples = validation_samples(e, 9, 10);
  const auto rep = check_embedding_conditions(spec, std::span<const GrassmannElement>(samples));
  CHECK(rep.all());
  const auto img = embed(spec, e.generator(1));
  CHECK(is_supermatrix(spec, img));
  GrassmannElement row = e.zero();
  for (std::size_t j = 0; j < 3; ++j) row = e.add(row, img(0, j));
  CHECK(e.equal(row, e.generator(1)));
}

TEST_CASE("non-central T is rejected") {
  const GrassmannAlgebra e(3);
  const auto u = e.add(e.one(), e.generator(1));
  CHECK_THROWS_AS((GrassmannSpec{e, epsilon_automorphism(e), power_transitive(e, u, 2)}), InvalidArgument);
}

TEST_CASE("example shapes") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto ex = example_algebra("5.2", {n, 1, 5});
    CHECK(ex.shape_matches());
    CHECK(ex.labels(1, 0) == "E_{1," + std::to_string(n) + "}");
  }
  const auto a = example_algebra("5.1", {3, 2, 4});
  CHECK(a.shape_matches());
  CHECK(a.labels(0, 2) == "E1");
  CHECK(a.labels(0, 1) == "E0");
  const auto s = example_algebra("5.3", {2, 1, 4});
  CHECK(s.shape_matches());
  CHECK(s.labels(0, 1) == "Omega_{1,2}");
  CHECK(s.labels(1, 0) == "Omega_{2,1}");
  CHECK(s.shape(0, 0).dimension() == 12);
}

TEST_CASE("example parameters are validated") {
  CHECK_THROWS_AS(example_algebra("5.4", {}), InvalidArgument);
  CHECK_THROWS_AS(example_algebra("5.1", {2, 2, 4}), InvalidArgument);
  CHECK_THROWS_AS(example_algebra("5.1", {2, 0, 4}), InvalidArgument);
}

TEST_CASE("sampled members are closed under the operations") {
  const auto ex = example_algebra("5.3", {3, 1, 4});
  Rng rng(21);
  for (int i = 0; i < 5; ++i) {
    const auto a = sample_supermatrix(ex.spec, ex.shape, rng);
    const auto b = sample_supermatrix(ex.spec, ex.shape, rng);
    CHECK(is_supermatrix(ex.spec, a));
    CHECK(closure_check(ex.spec, a, b, ex.spec.ring().field().from_int(7)));
    CHECK(is_supermatrix(ex.spec, delta_n(ex.spec.delta(), a)));
  }
}

TEST_CASE("Omega membership matches the constraint") {
  const GrassmannAlgebra e(4);
  const auto v1 = e.generator(1), v2 = e.generator(2);
  // g0 = 1 needs g1 = v2/2 modulo E0 v1
  const auto x = e.add(e.one(), e.scale(e.field().from_rational(Rational(1, 2)), v2));
  CHECK(omega_member(e, x, +1));
  CHECK_FALSE(omega_member(e, x, -1));
  CHECK(omega_member(e, e.add(x, v1), +1));
  CHECK_FALSE(omega_member(e, e.one(), +1));
  // sigma(x) = (1 + v1v2) x
  const auto t = e.add(e.one(), e.word({1, 2}));
  CHECK(e.equal(e.sigma(x), e.mul(t, x)));
}
