#include <doctest.h>

#include "lienil/errors.hpp"
#include "lienil/grassmann.hpp"
#include "lienil/matrix.hpp"
#include "lienil/transitive.hpp"

using namespace lienil;

namespace {
const ScalarRing Q;

MatrixOf<ScalarRing> q_matrix(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (long x : r) out.back().push_back(Q.field().from_int(x));
  }
  return MatrixOf<ScalarRing>::from_rows(std::move(out));
}
}  // namespace

TEST_CASE("P = [[1,-1],[-1,1]] is transitive and squares to 2P") {
  const auto p = power_transitive(Q, Q.field().from_int(-1), 2);
  CHECK(equal(Q, p.matrix(), q_matrix({{1, -1}, {-1, 1}})));
  CHECK(equal(Q, transitive_square(Q, p), scale(Q, Q.field().from_int(2), p.matrix())));
}

TEST_CASE("H_n and P^(u) satisfy T^2 = nT") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto h = hadamard_identity(Q, n);
    CHECK_NOTHROW(transitive_square(Q, h));
    const auto p = power_transitive(Q, Q.field().from_int(3), n);
    CHECK_NOTHROW(transitive_square(Q, p));
    Scalar u = Q.one();
    for (std::size_t i = 1; i < n; ++i) u = u * Q.field().from_int(3);
    CHECK(p(n - 1, 0) == u);
  }
}

TEST_CASE("non-transitive matrices are rejected") {
  CHECK_THROWS_AS(TransitiveMatrix<ScalarRing>::verify(Q, q_matrix({{1, 2}, {3, 1}})), InvalidArgument);
  CHECK_THROWS_AS(TransitiveMatrix<ScalarRing>::verify(Q, q_matrix({{2, 1}, {1, 2}})), InvalidArgument);
  const auto f = transitivity_failure(Q, q_matrix({{1, 2}, {3, 1}}));
  REQUIRE(f.has_value());
  CHECK_FALSE(is_transitive(Q, q_matrix({{1, 2, 1}, {1, 1, 1}, {1, 1, 1}})));
  CHECK_FALSE(is_transitive(Q, q_matrix({{1, 2}, {0, 1}})));
}

TEST_CASE("blow-up of P along cuts (2, 3)") {
  const auto p = power_transitive(Q, Q.field().from_int(-1), 2);
  const auto b = blow_up(Q, p, {2, 3});
  CHECK(equal(Q, b.matrix(), q_matrix({{1, 1, -1}, {1, 1, -1}, {-1, -1, 1}})));
  CHECK_THROWS_AS(blow_up(Q, p, {2, 2}), InvalidArgument);
  CHECK_THROWS_AS(blow_up(Q, p, {3}), InvalidArgument);
}

TEST_CASE("factorisation recovers the units up to a constant") {
  const std::vector<Scalar> g{Q.field().from_int(2), Q.field().from_int(-3), Q.field().from_rational(Rational(1, 5))};
  const auto t = transitive_from_units(Q, g);
  const auto h = factor_transitive(Q, t);
  const auto c = same_up_to_constant(Q, g, h);
  REQUIRE(c.has_value());
  CHECK(*c == Q.field().from_rational(Rational(1, 2)));
  CHECK(h[0] == Q.one());
  CHECK_THROWS_AS(transitive_from_units(Q, {Q.one(), Q.zero()}), NotInvertible);
}

TEST_CASE("Theta_T over Q") {
  const auto t = power_transitive(Q, Q.field().from_int(2), 3);
  const auto a = q_matrix({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
  const auto b = q_matrix({{0, 1, 0}, {-1, 3, 2}, {5, 0, 1}});
  CHECK(equal(Q, theta(Q, t, mul(Q, a, b)), mul(Q, theta(Q, t, a), theta(Q, t, b))));
  CHECK(equal(Q, theta_inverse(Q, t, theta(Q, t, a)), a));
  CHECK(equal(Q, theta(Q, t, identity_matrix(Q, 3)), identity_matrix(Q, 3)));
}

TEST_CASE("Theta counterexamples") {
  const auto ce = theta_counterexample(Q, q_matrix({{1, 2}, {3, 1}}));
  REQUIRE(ce.has_value());
  CHECK_FALSE(ce->unit_failure);
  // Each witness is re-checked independently.
  const auto t = q_matrix({{1, 2}, {3, 1}});
  const auto eij = matrix_unit(Q, 2, ce->i, ce->j), ejk = matrix_unit(Q, 2, ce->j, ce->k);
  CHECK_FALSE(equal(Q, hadamard(Q, t, mul(Q, eij, ejk)), mul(Q, hadamard(Q, t, eij), hadamard(Q, t, ejk))));
  CHECK_FALSE(theta_counterexample(Q, power_transitive(Q, Q.field().from_int(5), 3).matrix()).has_value());

  const GrassmannAlgebra e(4);
  MatrixOf<GrassmannAlgebra> te(2, 2, e.one());
  te(0, 1) = e.add(e.one(), e.word({1, 2}));
  CHECK(theta_counterexample(e, te).has_value());
}

TEST_CASE("Theta needs central entries") {
  const GrassmannAlgebra e(3);
  const auto t = power_transitive(e, e.add(e.one(), e.generator(1)), 2);
  CHECK_THROWS_AS(theta(e, t, identity_matrix(e, 2)), InvalidArgument);
}

TEST_CASE("delta_n, minors and matrix units") {
  const GrassmannAlgebra e(3);
  MatrixOf<GrassmannAlgebra> a(2, 2, e.zero());
  a(0, 0) = e.generator(1);
  a(1, 1) = e.word({1, 2});
  const auto d = delta_n(epsilon_automorphism(e), a);
  CHECK(e.equal(d(0, 0), e.neg(e.generator(1))));
  CHECK(e.equal(d(1, 1), e.word({1, 2})));
  const auto m = q_matrix({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  CHECK(equal(Q, minor(m, 1, 1), q_matrix({{1, 3}, {7, 9}})));
  CHECK_THROWS_AS(minor(m, 3, 0), InvalidArgument);
  CHECK(classical_det(Q, q_matrix({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == Q.field().from_int(-3));
  CHECK(equal(Q, mul(Q, matrix_unit(Q, 3, 0, 1), matrix_unit(Q, 3, 1, 2)), matrix_unit(Q, 3, 0, 2)));
  CHECK_THROWS_AS(mul(Q, q_matrix({{1, 2}}), q_matrix({{1, 2}})), InvalidArgument);
}
