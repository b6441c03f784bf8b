#include <doctest.h>

#include "lienil/errors.hpp"
#include "lienil/scalars.hpp"

using namespace lienil;

namespace {

// Phi_n(x) = prod_{d | n} (x^d - 1)^{mu(n/d)}, with integer polynomial
// arithmetic written out here.
using IPoly = std::vector<long>;

int mobius(unsigned n) {
  int m = 1;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  return n > 1 ? -m : m;
}

IPoly times(const IPoly& a, const IPoly& b) {
  IPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// exact division by a monic polynomial
IPoly divide(IPoly a, const IPoly& b) {
  IPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = a[i + b.size() - 1];
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
  }
  for (long c : a) REQUIRE(c == 0);
  return q;
}

IPoly phi_oracle(unsigned n) {
  IPoly num{1}, den{1};
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d) continue;
    IPoly f(d + 1, 0);
    f[0] = -1;
    f[d] = 1;
    const int mu = mobius(n / d);
    if (mu == 1) num = times(num, f);
    if (mu == -1) den = times(den, f);
  }
  return divide(num, den);
}

}  // namespace

TEST_CASE("rational text forms") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational(" -4 ") == Rational(-4));
  CHECK(parse_rational("+7/-14") == Rational(-1, 2));
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), DivisionByZero);
  CHECK_THROWS_AS(parse_rational("x"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("1.5"), InvalidArgument);
  CHECK_THROWS_AS(inverse(Rational(0)), DivisionByZero);
  CHECK(inverse(Rational(-2, 3)) == Rational(-3, 2));
}

TEST_CASE("cyclotomic polynomials match the Mobius product") {
  for (unsigned n = 1; n <= 30; ++n) {
    const IPoly expect = phi_oracle(n);
    const QPoly& got = cyclotomic_polynomial(n);
    REQUIRE(got.size() == expect.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == Rational(expect[i]));
  }
}

TEST_CASE("arithmetic in Q(zeta_3)") {
  const auto& f = CyclotomicField::get(3);
  const Scalar z = f.root();
  CHECK(f.degree() == 2);
  CHECK(z.pow(3) == f.one());
  CHECK(z * z + z + f.one() == f.zero());
  CHECK(z.inv() == z * z);
  CHECK(z.pow(-1) == z.pow(2));
  CHECK((f.from_int(2) - z).inv() * (f.from_int(2) - z) == f.one());
  CHECK_THROWS_AS(f.zero().inv(), DivisionByZero);
  CHECK(f.parse("[1, 2]") == f.one() + f.from_int(2) * z);
  CHECK(f.parse("-1/2") == f.from_rational(Rational(-1, 2)));
  CHECK((f.one() + f.from_int(2) * z).to_string() == "[1, 2]");
}

TEST_CASE("roots of unity") {
  const auto& q = CyclotomicField::rationals();
  CHECK(q.primitive_root(2).value() == q.from_int(-1));
  CHECK_FALSE(q.primitive_root(3).has_value());
  const auto& f4 = CyclotomicField::get(4);
  const Scalar i = f4.primitive_root(4).value();
  CHECK(i * i == f4.from_int(-1));
  CHECK_FALSE(CyclotomicField::get(3).primitive_root(4).has_value());
  // Q(zeta_3) = Q(zeta_6): -zeta_3 is a primitive 6th root
  const auto& f3 = CyclotomicField::get(3);
  const Scalar w = f3.primitive_root(6).value();
  CHECK(w.pow(6) == f3.one());
  CHECK_FALSE(w.pow(2) == f3.one());
  CHECK_FALSE(w.pow(3) == f3.one());
}

TEST_CASE("mixing fields is rejected") {
  const Scalar a = CyclotomicField::get(3).one();
  const Scalar b = CyclotomicField::get(5).one();
  CHECK_THROWS_AS(a + b, ContextMismatch);
  CHECK(&CyclotomicField::get(7) == &CyclotomicField::get(7));
}

TEST_CASE("random inverses in Q(zeta_5)") {
  const auto& f = CyclotomicField::get(5);
  const Scalar z = f.root();
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) {
      const Scalar x = f.from_int(a) + f.from_int(b) * z + z.pow(3);
      CHECK(x * x.inv() == f.one());
    }
}
