#include "lienil/examples.hpp"

#include <algorithm>
#include <bit>
#include <iterator>

#include "lienil/errors.hpp"

namespace lienil {

ShapeMatrix supermatrix_shape(const GrassmannSpec& spec, unsigned cap) {
  const auto& alg = spec.ring();
  const std::size_t n = spec.size();
  std::vector<std::pair<GrassmannElement, ComponentBasis>> solved;
  ShapeMatrix out(n, n, ComponentBasis{});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& t = spec.t()(i, j);
      auto it = std::find_if(solved.begin(), solved.end(), [&](const auto& p) { return alg.equal(p.first, t); });
      if (it == solved.end()) {
        solved.emplace_back(t, solve_constraint(alg, spec.delta(), t, cap));
        it = std::prev(solved.end());
      }
      out(i, j) = it->second;
    }
  return out;
}

GrassmannMatrix sample_supermatrix(const GrassmannSpec& spec, const ShapeMatrix& shape, Rng& rng, long bound) {
  const std::size_t n = spec.size();
  detail::require_same_shape(shape.rows(), shape.cols(), n, n, "sample_supermatrix");
  GrassmannMatrix a(n, n, spec.ring().zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = sample_from(spec.ring(), shape(i, j), rng, bound);
  return a;
}

GrassmannMatrix sample_supermatrix(const GrassmannSpec& spec, std::uint64_t seed) {
  Rng rng(seed);
  return sample_supermatrix(spec, supermatrix_shape(spec), rng);
}

const CyclotomicField& field_with_root(unsigned n) {
  if (n == 0) throw InvalidArgument("root-of-unity order must be positive");
  return n <= 2 ? CyclotomicField::rationals() : CyclotomicField::get(n);
}

namespace {

Mask full_mask(const GrassmannAlgebra& alg) {
  (void)alg.dimension();  // rejects g = 64
  return (Mask{1} << alg.generators()) - 1;
}

GrassmannElement mono(const GrassmannAlgebra& alg, Mask m) { return alg.monomial(m, alg.field().one()); }

}  // namespace

ComponentBasis fix_sigma_basis(const GrassmannAlgebra& alg) {
  ComponentBasis b;
  const Mask full = full_mask(alg);
  for (Mask m = 0; m <= full; ++m)
    if (std::popcount(m) % 2 == 0 || (m & 1U)) b.basis.push_back(mono(alg, m));
  return b;
}

ComponentBasis even_times_v1_basis(const GrassmannAlgebra& alg) {
  ComponentBasis b;
  const Mask full = full_mask(alg);
  for (Mask m = 0; m <= full; ++m)
    if (std::popcount(m) % 2 == 1 && (m & 1U)) b.basis.push_back(mono(alg, m));
  return b;
}

ComponentBasis omega_basis(const GrassmannAlgebra& alg, int sign) {
  if (sign != 1 && sign != -1) throw InvalidArgument("omega sign must be +1 or -1");
  if (alg.generators() < 2) throw InvalidArgument("omega needs at least two generators");
  ComponentBasis b = even_times_v1_basis(alg);
  // g0 + (sign/2) v2 g0 for each even monomial g0
  const Scalar half = alg.field().from_rational(Rational(sign, 2));
  const GrassmannElement v2 = alg.generator(2);
  const Mask full = full_mask(alg);
  for (Mask m = 0; m <= full; ++m) {
    if (std::popcount(m) % 2 != 0) continue;
    const GrassmannElement g0 = mono(alg, m);
    b.basis.push_back(alg.add(g0, alg.scale(half, alg.mul(v2, g0))));
  }
  return b;
}

bool omega_member(const GrassmannAlgebra& alg, const GrassmannElement& x, int sign) {
  const GrassmannElement g0 = alg.even_part(x), g1 = alg.odd_part(x);
  const GrassmannElement w = alg.sub(alg.scale(alg.field().from_int(2), g1),
                                     alg.scale(alg.field().from_int(sign), alg.mul(alg.generator(2), g0)));
  // w is odd; w in E0 v1 <=> every monomial of w contains v1
  for (const auto& term : w.terms())
    if (!(term.mask & 1U)) return false;
  return true;
}

bool ExampleAlgebra::shape_matches() const {
  for (std::size_t i = 0; i < shape.rows(); ++i)
    for (std::size_t j = 0; j < shape.cols(); ++j)
      if (!same_subspace(spec.ring(), shape(i, j), expected(i, j))) return false;
  return true;
}

namespace {

std::vector<std::size_t> cuts_for(const ExampleParams& p) {
  if (p.d < 1 || p.d >= p.n)
    throw InvalidArgument("block cut d must satisfy 1 <= d < n (got d=" + std::to_string(p.d) +
                          ", n=" + std::to_string(p.n) + ")");
  return {p.d, p.n};
}

ExampleAlgebra finish(std::string name, ExampleParams p, GrassmannSpec spec, ShapeMatrix expected,
                      Matrix<std::string> labels) {
  ShapeMatrix shape = supermatrix_shape(spec);
  return ExampleAlgebra{std::move(name), p, std::move(spec), std::move(shape), std::move(expected), std::move(labels)};
}

ExampleAlgebra example_5_1(ExampleParams p) {
  if (p.g == 0) p.g = 6;
  GrassmannAlgebra alg(p.g);
  auto pm = power_transitive(alg, alg.embed(alg.field().from_int(-1)), 2);
  auto t = blow_up(alg, pm, cuts_for(p));
  const ComponentBasis even = graded_component_basis(alg, 0, 2), odd = graded_component_basis(alg, 1, 2);
  ShapeMatrix expected(p.n, p.n, ComponentBasis{});
  Matrix<std::string> labels(p.n, p.n, "");
  for (std::size_t i = 0; i < p.n; ++i)
    for (std::size_t j = 0; j < p.n; ++j) {
      const bool same = (i < p.d) == (j < p.d);
      expected(i, j) = same ? even : odd;
      labels(i, j) = same ? "E0" : "E1";
    }
  GrassmannSpec spec(alg, epsilon_automorphism(alg), std::move(t));
  return finish("5.1", p, std::move(spec), std::move(expected), std::move(labels));
}

ExampleAlgebra example_5_2(ExampleParams p) {
  if (p.g == 0) p.g = 6;
  if (p.n < 2) throw InvalidArgument("example 5.2 needs n >= 2");
  const unsigned n = static_cast<unsigned>(p.n);
  GrassmannAlgebra alg(p.g, field_with_root(n));
  auto e = alg.field().primitive_root(n);
  if (!e) throw InvariantViolation("no primitive root in Q(zeta_n)");
  auto t = power_transitive(alg, alg.embed(*e), p.n);
  ShapeMatrix expected(p.n, p.n, ComponentBasis{});
  Matrix<std::string> labels(p.n, p.n, "");
  for (std::size_t i = 0; i < p.n; ++i)
    for (std::size_t j = 0; j < p.n; ++j) {
      const unsigned m = static_cast<unsigned>((i + p.n - j) % p.n);
      expected(i, j) = graded_component_basis(alg, m, n);
      labels(i, j) = "E_{" + std::to_string(m) + "," + std::to_string(n) + "}";
    }
  GrassmannSpec spec(alg, rho_automorphism(alg, n), std::move(t));
  return finish("5.2", p, std::move(spec), std::move(expected), std::move(labels));
}

ExampleAlgebra example_5_3(ExampleParams p) {
  if (p.g == 0) p.g = 4;
  if (p.g < 2) throw InvalidArgument("example 5.3 needs g >= 2");
  GrassmannAlgebra alg(p.g);
  const GrassmannElement v1v2 = alg.word({1, 2});
  auto q = TransitiveMatrix<GrassmannAlgebra>::verify(
      alg, GrassmannMatrix::from_rows({{alg.one(), alg.add(alg.one(), v1v2)}, {alg.sub(alg.one(), v1v2), alg.one()}}));
  auto t = blow_up(alg, q, cuts_for(p));
  for (const auto& x : t.matrix().entries())
    if (!alg.is_zero(alg.odd_part(x))) throw InvariantViolation("Q(d,n) has an entry outside E0");
  const ComponentBasis fix = fix_sigma_basis(alg), o12 = omega_basis(alg, 1), o21 = omega_basis(alg, -1);
  ShapeMatrix expected(p.n, p.n, ComponentBasis{});
  Matrix<std::string> labels(p.n, p.n, "");
  for (std::size_t i = 0; i < p.n; ++i)
    for (std::size_t j = 0; j < p.n; ++j) {
      const bool bi = i < p.d, bj = j < p.d;
      if (bi == bj) {
        expected(i, j) = fix;
        labels(i, j) = "E0+E0v1";
      } else if (bi) {
        expected(i, j) = o12;
        labels(i, j) = "Omega_{1,2}";
      } else {
        expected(i, j) = o21;
        labels(i, j) = "Omega_{2,1}";
      }
    }
  GrassmannSpec spec(alg, sigma_automorphism(alg), std::move(t));
  return finish("5.3", p, std::move(spec), std::move(expected), std::move(labels));
}

}  // namespace

ExampleAlgebra example_algebra(const std::string& name, ExampleParams params) {
  if (params.n < 1) throw InvalidArgument("example size must be positive");
  if (name == "5.1") return example_5_1(params);
  if (name == "5.2") return example_5_2(params);
  if (name == "5.3") return example_5_3(params);
  throw InvalidArgument("unknown example '" + name + "' (expected 5.1, 5.2 or 5.3)");
}

}  // namespace lienil
