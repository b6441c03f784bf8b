#include <doctest.h>

#include "free_algebra.hpp"
#include "lienil/errors.hpp"
#include "lienil/dets.hpp"
#include "lienil/examples.hpp"
#include "lienil/integrality.hpp"

using namespace lienil;
using oracle::FreeAlgebra;

namespace {
const ScalarRing Q;

MatrixOf<ScalarRing> q_matrix(const std::vector<std::vector<long>>& rows) {
  MatrixOf<ScalarRing> m(rows.size(), rows.size(), Q.zero());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = Q.field().from_int(rows[i][j]);
  return m;
}

MatrixOf<GrassmannAlgebra> random_grassmann(const GrassmannAlgebra& e, std::size_t n, Rng& rng) {
  MatrixOf<GrassmannAlgebra> m(n, n, e.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = e.random_element(rng, 4);
  return m;
}

Scalar factorial(long n) {
  Scalar r = Q.one();
  for (long i = 2; i <= n; ++i) r = r * Q.field().from_int(i);
  return r;
}
}  // namespace

TEST_CASE("2x2 symmetric determinant and preadjoint over the free algebra") {
  const FreeAlgebra f({"a", "b", "c", "d"});
  const auto a = f.var(0), b = f.var(1), c = f.var(2), d = f.var(3);
  MatrixOf<FreeAlgebra> m = MatrixOf<FreeAlgebra>::from_rows({{a, b}, {c, d}});
  const auto expected = f.sub(f.add(f.mul(a, d), f.mul(d, a)), f.add(f.mul(b, c), f.mul(c, b)));
  CHECK(f.equal(sdet(f, m), expected));
  CHECK(f.equal(sdet_conjugate_form(f, m), expected));
  const auto adj = preadjoint(f, m);
  CHECK(equal(f, adj, MatrixOf<FreeAlgebra>::from_rows({{d, f.neg(b)}, {f.neg(c), a}})));

  const auto p = charpoly(f, m, 1, Side::Right);
  REQUIRE(p.degree() == 2);
  CHECK(f.equal(p.coeffs[2], f.embed(Q.field().from_int(2))));
  CHECK(f.equal(p.coeffs[1], f.scale(Q.field().from_int(-2), f.add(a, d))));
  CHECK(f.equal(p.coeffs[0], expected));
}

TEST_CASE("library agrees with brute-force enumeration on the free algebra") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n * n; ++i) names.push_back("x" + std::to_string(i));
    const FreeAlgebra f(names);
    MatrixOf<FreeAlgebra> m(n, n, f.zero());
    for (std::size_t i = 0; i < n * n; ++i) m(i / n, i % n) = f.var(static_cast<int>(i));
    CHECK(f.equal(sdet(f, m), oracle::brute_sdet(f, m)));
    CHECK(equal(f, preadjoint(f, m), oracle::brute_preadjoint(f, m)));
  }
}

TEST_CASE("library agrees with brute-force enumeration on Grassmann matrices") {
  const GrassmannAlgebra e(6);
  Rng rng(31);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 3; ++trial) {
      const auto m = random_grassmann(e, n, rng);
      CHECK(e.equal(sdet(e, m), oracle::brute_sdet(e, m)));
      CHECK(equal(e, preadjoint(e, m), oracle::brute_preadjoint(e, m)));
      if (n >= 2) CHECK(equal(e, preadjoint(e, m), preadjoint_via_minors(e, m)));
    }
}

TEST_CASE("small and identity matrices") {
  const auto one = q_matrix({{7}});
  CHECK(sdet(Q, one) == Q.field().from_int(7));
  CHECK(equal(Q, preadjoint(Q, one), identity_matrix(Q, 1)));
  CHECK(sdet(Q, MatrixOf<ScalarRing>()) == Q.one());
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto id = identity_matrix(Q, n);
    CHECK(sdet(Q, id) == factorial(static_cast<long>(n)));
    CHECK(equal(Q, preadjoint(Q, id), scale(Q, factorial(static_cast<long>(n) - 1), id)));
  }
}

TEST_CASE("commutative rdet and ldet against the closed form") {
  // Over a field A* = (n-1)! adj A, so each running product is c_j I with
  // c_1 = (n-1)! det A and c_{j+1} = (n-1)! c_j^n; rdet_(k) = n c_k.
  const std::vector<MatrixOf<ScalarRing>> cases{q_matrix({{2, 1}, {5, 3}}), q_matrix({{1, 2, 0}, {3, -1, 4}, {2, 2, 1}})};
  for (const auto& a : cases) {
    const long n = static_cast<long>(a.rows());
    const Scalar det = classical_det(Q, a);
    Scalar c = factorial(n - 1) * det;
    for (unsigned k = 1; k <= 2; ++k) {
      CHECK(rdet(Q, a, k) == Q.field().from_int(n) * c);
      CHECK(ldet(Q, a, k) == rdet(Q, a, k));
      Scalar p = Q.one();
      for (long i = 0; i < n; ++i) p = p * c;
      c = factorial(n - 1) * p;
    }
  }
  const auto a = q_matrix({{2, 1}, {5, 3}});
  CHECK(rdet(Q, a, 2) == Q.field().from_int(2));  // 2 det^2 with det = 1
}

TEST_CASE("rdet_(1) = ldet_(1) = sdet on Grassmann matrices") {
  const GrassmannAlgebra e(6);
  Rng rng(44);
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto m = random_grassmann(e, n, rng);
    CHECK(e.equal(rdet(e, m, 1), sdet(e, m)));
    CHECK(e.equal(ldet(e, m, 1), sdet(e, m)));
  }
}

TEST_CASE("characteristic polynomial basics") {
  const auto p = charpoly(Q, q_matrix({{5}}), 1, Side::Right);
  REQUIRE(p.degree() == 1);
  CHECK(p.coeffs[1] == Q.one());
  CHECK(p.coeffs[0] == Q.field().from_int(-5));
  CHECK(charpoly_leading_coefficient(2, 1) == 2);
  CHECK(charpoly_leading_coefficient(2, 2) == 2);
  CHECK(charpoly_leading_coefficient(3, 1) == 6);
  CHECK(charpoly_leading_coefficient(3, 2) == 48);
  const auto a = q_matrix({{1, 2, 0}, {3, -1, 4}, {2, 2, 1}});
  for (unsigned k = 1; k <= 2; ++k) {
    const auto c = charpoly(Q, a, k, Side::Right);
    CHECK(c.coeffs.back() == Q.field().from_rational(Rational(charpoly_leading_coefficient(3, k))));
  }
}

TEST_CASE("Cayley-Hamilton over a commutative ring") {
  const auto a = q_matrix({{1, 2, 0}, {3, -1, 4}, {2, 2, 1}});
  CHECK(cayley_hamilton_check(Q, a, 1).holds);
  CHECK(cayley_hamilton_check(Q, a, 1, Side::Left).holds);
  CHECK(cayley_hamilton_check(Q, zero_matrix(Q, 3, 3), 2).holds);
}

TEST_CASE("Cayley-Hamilton of index 2 on the epsilon supermatrices") {
  const auto ex = example_algebra("5.1", {2, 1, 6});
  Rng rng(2);
  for (int i = 0; i < 5; ++i) {
    const auto a = sample_supermatrix(ex.spec, ex.shape, rng);
    const auto rep = cayley_hamilton_check(ex.spec.ring(), a, 2);
    CHECK(rep.holds);
    CHECK(rep.poly.degree() == 4);
  }
}

TEST_CASE("enumeration caps") {
  CHECK_THROWS_AS(sdet(Q, identity_matrix(Q, 6)), CapExceeded);
  CHECK_THROWS_AS(charpoly(Q, identity_matrix(Q, 2), 3, Side::Right), CapExceeded);
  CHECK_THROWS_AS(rdet(Q, identity_matrix(Q, 2), 0), InvalidArgument);
  CHECK_THROWS_AS(sdet(Q, MatrixOf<ScalarRing>(2, 3, Q.zero())), InvalidArgument);
}

TEST_CASE("integrality certificates") {
  const GrassmannAlgebra e(4);
  const auto samples = validation_samples(e, 5, 8);
  const auto eps = epsilon_automorphism(e);
  for (const auto& r : {e.generator(1), e.add(e.word({1, 2}), e.generator(3)), e.word({2, 4})}) {
    const auto cert = integrality_certificate(e, eps, r, 2, 2, std::span<const GrassmannElement>(samples));
    CHECK(cert.holds());
    CHECK(cert.right_monic.size() == 5);
    CHECK(e.equal(cert.right_monic.back(), e.one()));
  }
  // rho_e with n = 3 over Q has no primitive cube root
  CHECK_THROWS_AS(integrality_certificate(e, eps, e.one(), 3, 1, std::span<const GrassmannElement>(samples)),
                  InvalidArgument);
}
