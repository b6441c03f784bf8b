#include "lienil/grassmann.hpp"

#include <algorithm>
#include <bit>

#include "lienil/errors.hpp"
#include "lienil/linalg.hpp"

namespace lienil {

int monomial_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // For each generator j in b, count generators of a with a larger index.
  unsigned inversions = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    const unsigned j = static_cast<unsigned>(std::countr_zero(rest));
    const Mask above = j >= 63 ? Mask{0} : (~Mask{0} << (j + 1));
    inversions += static_cast<unsigned>(std::popcount(a & above));
  }
  return (inversions & 1U) ? -1 : 1;
}

std::vector<unsigned> monomial_indices(Mask m) {
  std::vector<unsigned> idx;
  for (; m; m &= m - 1) idx.push_back(static_cast<unsigned>(std::countr_zero(m)) + 1);
  return idx;
}

namespace {

bool mask_less(const GrassmannTerm& a, const GrassmannTerm& b) { return a.mask < b.mask; }

// Display order: by length, then lexicographic on ascending index lists.
bool display_less(Mask a, Mask b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  return monomial_indices(a) < monomial_indices(b);
}

}  // namespace

GrassmannAlgebra::GrassmannAlgebra(unsigned generators, const CyclotomicField& field)
    : g_(generators), field_(&field) {
  if (generators > kMaxGenerators)
    throw InvalidArgument("at most " + std::to_string(kMaxGenerators) + " Grassmann generators");
}

std::uint64_t GrassmannAlgebra::dimension() const {
  if (g_ >= 64) throw CapExceeded("dimension 2^64 not representable");
  return std::uint64_t{1} << g_;
}

void GrassmannAlgebra::check(const Element& a) const {
  if (a.g_ != g_)
    throw_context_mismatch("Grassmann element on " + std::to_string(a.g_) + " generators used in algebra on " +
                           std::to_string(g_));
  if (!a.terms_.empty() && !(a.terms_.front().coeff.field() == *field_))
    throw_context_mismatch("Grassmann element over a different scalar field");
}

GrassmannElement GrassmannAlgebra::make(std::vector<GrassmannTerm> sorted_terms) const {
  Element e;
  e.g_ = g_;
  e.terms_ = std::move(sorted_terms);
  return e;
}

GrassmannElement GrassmannAlgebra::from_terms(std::vector<GrassmannTerm> terms) const {
  const Mask limit = g_ >= 64 ? ~Mask{0} : (Mask{1} << g_) - 1;
  for (const auto& t : terms) {
    if ((t.mask & ~limit) != 0) throw InvalidArgument("monomial uses a generator beyond v" + std::to_string(g_));
    if (!(t.coeff.field() == *field_)) throw_context_mismatch("coefficient from a different scalar field");
  }
  std::stable_sort(terms.begin(), terms.end(), mask_less);
  std::vector<GrassmannTerm> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mask == t.mask)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const GrassmannTerm& t) { return t.coeff.is_zero(); });
  return make(std::move(out));
}

GrassmannElement GrassmannAlgebra::zero() const { return make({}); }

GrassmannElement GrassmannAlgebra::one() const { return make({{0, field_->one()}}); }

GrassmannElement GrassmannAlgebra::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  std::vector<GrassmannTerm> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->mask < j->mask)) {
      out.push_back(*i++);
    } else if (i == a.terms_.end() || j->mask < i->mask) {
      out.push_back(*j++);
    } else {
      Scalar c = i->coeff + j->coeff;
      if (!c.is_zero()) out.push_back({i->mask, std::move(c)});
      ++i;
      ++j;
    }
  }
  return make(std::move(out));
}

GrassmannElement GrassmannAlgebra::neg(const Element& a) const {
  check(a);
  Element r = a;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

GrassmannElement GrassmannAlgebra::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

GrassmannElement GrassmannAlgebra::mul(const Element& a, const Element& b) const {
  check(a);
  check(b);
  std::vector<GrassmannTerm> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      const int s = monomial_sign(x.mask, y.mask);
      if (s == 0) continue;
      Scalar c = x.coeff * y.coeff;
      if (s < 0) c = -c;
      prod.push_back({x.mask | y.mask, std::move(c)});
    }
  }
  std::sort(prod.begin(), prod.end(), mask_less);
  std::vector<GrassmannTerm> out;
  out.reserve(prod.size());
  for (auto& t : prod) {
    if (!out.empty() && out.back().mask == t.mask)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const GrassmannTerm& t) { return t.coeff.is_zero(); });
  return make(std::move(out));
}

bool GrassmannAlgebra::equal(const Element& a, const Element& b) const {
  check(a);
  check(b);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mask != b.terms_[i].mask || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  return true;
}

bool GrassmannAlgebra::is_zero(const Element& a) const {
  check(a);
  return a.terms_.empty();
}

bool GrassmannAlgebra::is_central(const Element& a) const {
  check(a);
  // An odd monomial commutes with every generator only if it contains all of them.
  const Mask full = g_ >= 64 ? ~Mask{0} : (Mask{1} << g_) - 1;
  return std::all_of(a.terms_.begin(), a.terms_.end(),
                     [&](const GrassmannTerm& t) { return std::popcount(t.mask) % 2 == 0 || t.mask == full; });
}

std::optional<GrassmannElement> GrassmannAlgebra::try_invert(const Element& a) const {
  check(a);
  const Scalar c = scalar_part(a);
  if (c.is_zero()) return std::nullopt;
  const Scalar c_inv = c.inv();
  // a = c (1 + n) with n nilpotent; a^{-1} = c^{-1} sum_k (-n)^k
  const Element minus_n = neg(sub(scale(c_inv, a), one()));
  Element sum = one();
  Element term = one();
  for (unsigned k = 1; k <= g_; ++k) {
    term = mul(term, minus_n);
    if (term.is_zero()) break;
    sum = add(sum, term);
  }
  return scale(c_inv, sum);
}

std::optional<bool> GrassmannAlgebra::is_non_zero_divisor(const Element& a) const {
  return !scalar_part(a).is_zero();
}

GrassmannElement GrassmannAlgebra::embed(const Scalar& c) const {
  if (!(c.field() == *field_)) throw_context_mismatch("scalar from a different field");
  if (c.is_zero()) return zero();
  return make({{0, c}});
}

GrassmannElement GrassmannAlgebra::scale(const Scalar& c, const Element& a) const {
  check(a);
  if (c.is_zero()) return zero();
  Element r = a;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

std::string GrassmannAlgebra::to_string(const Element& a) const { return pretty(a); }

GrassmannElement GrassmannAlgebra::generator(unsigned i) const {
  if (i == 0 || i > g_) throw InvalidArgument("generator index v" + std::to_string(i) + " out of range");
  return make({{Mask{1} << (i - 1), field_->one()}});
}

GrassmannElement GrassmannAlgebra::monomial(Mask mask, const Scalar& c) const { return from_terms({{mask, c}}); }

GrassmannElement GrassmannAlgebra::word(std::initializer_list<unsigned> indices, long coeff) const {
  Element r = embed(field_->from_int(coeff));
  for (unsigned i : indices) r = mul(r, generator(i));
  return r;
}

Scalar GrassmannAlgebra::coefficient(const Element& a, Mask mask) const {
  check(a);
  auto it = std::lower_bound(a.terms_.begin(), a.terms_.end(), GrassmannTerm{mask, Scalar()}, mask_less);
  if (it != a.terms_.end() && it->mask == mask) return it->coeff;
  return field_->zero();
}

Scalar GrassmannAlgebra::scalar_part(const Element& a) const { return coefficient(a, 0); }

GrassmannElement GrassmannAlgebra::component(const Element& a, unsigned k) const {
  check(a);
  Element r = make({});
  for (const auto& t : a.terms_)
    if (static_cast<unsigned>(std::popcount(t.mask)) == k) r.terms_.push_back(t);
  return r;
}

GrassmannElement GrassmannAlgebra::even_part(const Element& a) const {
  check(a);
  Element r = make({});
  for (const auto& t : a.terms_)
    if (std::popcount(t.mask) % 2 == 0) r.terms_.push_back(t);
  return r;
}

GrassmannElement GrassmannAlgebra::odd_part(const Element& a) const { return sub(a, even_part(a)); }

GrassmannElement GrassmannAlgebra::epsilon(const Element& a) const {
  check(a);
  Element r = a;
  for (auto& t : r.terms_)
    if (std::popcount(t.mask) % 2 == 1) t.coeff = -t.coeff;
  return r;
}

GrassmannElement GrassmannAlgebra::rho(const Element& a, const Scalar& e) const {
  check(a);
  std::vector<Scalar> powers{field_->one()};
  for (unsigned k = 1; k <= g_; ++k) powers.push_back(powers.back() * e);
  std::vector<GrassmannTerm> out;
  out.reserve(a.terms_.size());
  for (const auto& t : a.terms_) {
    Scalar c = t.coeff * powers[static_cast<unsigned>(std::popcount(t.mask))];
    if (!c.is_zero()) out.push_back({t.mask, std::move(c)});
  }
  return make(std::move(out));
}

GrassmannElement GrassmannAlgebra::sigma(const Element& a) const {
  if (g_ == 0) throw InvalidArgument("sigma needs at least one generator");
  const Element v1 = generator(1);
  return mul(mul(add(one(), v1), a), sub(one(), v1));
}

GrassmannElement GrassmannAlgebra::sigma_inverse(const Element& a) const {
  if (g_ == 0) throw InvalidArgument("sigma needs at least one generator");
  const Element v1 = generator(1);
  return mul(mul(sub(one(), v1), a), add(one(), v1));
}

std::vector<Scalar> GrassmannAlgebra::to_coordinates(const Element& a) const {
  check(a);
  std::vector<Scalar> v(dimension(), field_->zero());
  for (const auto& t : a.terms_) v[t.mask] = t.coeff;
  return v;
}

GrassmannElement GrassmannAlgebra::from_coordinates(std::span<const Scalar> coords) const {
  if (coords.size() != dimension()) throw InvalidArgument("coordinate vector has wrong length");
  std::vector<GrassmannTerm> out;
  for (Mask m = 0; m < coords.size(); ++m)
    if (!coords[m].is_zero()) out.push_back({m, coords[m]});
  return make(std::move(out));
}

GrassmannElement GrassmannAlgebra::random_element(Rng& rng, unsigned max_terms, long coeff_bound) const {
  const unsigned terms = static_cast<unsigned>(rng.uniform(1, std::max(1U, max_terms)));
  const Mask limit = g_ >= 64 ? ~Mask{0} : (Mask{1} << g_) - 1;
  std::vector<GrassmannTerm> out;
  for (unsigned i = 0; i < terms; ++i) {
    const Mask m = rng.next() & limit;
    const long c = rng.uniform(-coeff_bound, coeff_bound);
    out.push_back({m, field_->from_int(c)});
  }
  return from_terms(std::move(out));
}

GrassmannElement GrassmannAlgebra::random_unit(Rng& rng, unsigned max_terms) const {
  long c = 0;
  while (c == 0) c = rng.uniform(-3, 3);
  Element nil = random_element(rng, max_terms);
  return add(embed(field_->from_int(c)), sub(nil, embed(scalar_part(nil))));
}

std::string GrassmannAlgebra::pretty(const Element& a) const {
  check(a);
  if (a.terms_.empty()) return "0";
  std::vector<const GrassmannTerm*> order;
  for (const auto& t : a.terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](const GrassmannTerm* x, const GrassmannTerm* y) { return display_less(x->mask, y->mask); });
  std::string s;
  bool first = true;
  for (const GrassmannTerm* t : order) {
    std::string mono;
    for (unsigned i : monomial_indices(t->mask)) mono += "v" + std::to_string(i);
    Scalar c = t->coeff;
    bool negative = c.is_rational() && c.rational_value() < 0;
    if (negative) c = -c;
    if (first)
      s += negative ? "−" : "";
    else
      s += negative ? " − " : " + ";
    first = false;
    std::string cs = c.to_string();
    if (mono.empty())
      s += cs;
    else if (c.is_one())
      s += mono;
    else
      s += cs + "·" + mono;
  }
  return s;
}

// ---------------------------------------------------------------------------

std::vector<GrassmannElement> validation_samples(const GrassmannAlgebra& alg, std::uint64_t seed,
                                                 std::size_t count) {
  std::vector<GrassmannElement> s{alg.one()};
  for (unsigned i = 1; i <= alg.generators(); ++i) s.push_back(alg.generator(i));
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) s.push_back(alg.random_element(rng, 4));
  return s;
}

namespace {

constexpr std::uint64_t kValidationSeed = 0x5eed0001;
constexpr std::size_t kValidationCount = 6;

Endomorphism<GrassmannAlgebra> validated(const GrassmannAlgebra& alg, Endomorphism<GrassmannAlgebra> d) {
  const auto samples = validation_samples(alg, kValidationSeed, kValidationCount);
  validate_endomorphism<GrassmannAlgebra>(alg, d, samples);
  return d;
}

}  // namespace

Endomorphism<GrassmannAlgebra> epsilon_automorphism(const GrassmannAlgebra& alg) {
  return validated(alg, {"epsilon", [alg](const GrassmannElement& x) { return alg.epsilon(x); }});
}

Endomorphism<GrassmannAlgebra> rho_automorphism(const GrassmannAlgebra& alg, const Scalar& e) {
  if (e.is_zero()) throw InvalidArgument("rho_e needs a nonzero e");
  return validated(alg, {"rho_" + e.to_string(), [alg, e](const GrassmannElement& x) { return alg.rho(x, e); }});
}

Endomorphism<GrassmannAlgebra> rho_automorphism(const GrassmannAlgebra& alg, unsigned n) {
  auto e = alg.field().primitive_root(n);
  if (!e)
    throw InvalidArgument("Q(zeta_" + std::to_string(alg.field().order()) + ") has no primitive " +
                          std::to_string(n) + "-th root of unity");
  auto d = rho_automorphism(alg, *e);
  d.name = "rho_e:" + std::to_string(n);
  return d;
}

Endomorphism<GrassmannAlgebra> sigma_automorphism(const GrassmannAlgebra& alg) {
  return validated(alg, {"sigma", [alg](const GrassmannElement& x) { return alg.sigma(x); }});
}

Endomorphism<GrassmannAlgebra> sigma_inverse_automorphism(const GrassmannAlgebra& alg) {
  return validated(alg, {"sigma^-1", [alg](const GrassmannElement& x) { return alg.sigma_inverse(x); }});
}

Endomorphism<GrassmannAlgebra> endomorphism_from_generator_images(const GrassmannAlgebra& alg,
                                                                  std::vector<GrassmannElement> images) {
  if (images.size() != alg.generators())
    throw InvalidArgument("expected " + std::to_string(alg.generators()) + " generator images, got " +
                          std::to_string(images.size()));
  // E is presented by v_i v_j + v_j v_i = 0 (i <= j); the images must satisfy the relations.
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i; j < images.size(); ++j)
      if (!alg.is_zero(alg.add(alg.mul(images[i], images[j]), alg.mul(images[j], images[i]))))
        throw InvalidArgument("generator images " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                              " do not anticommute");
  auto action = [alg, images = std::move(images)](const GrassmannElement& x) {
    GrassmannElement acc = alg.zero();
    for (const auto& t : x.terms()) {
      GrassmannElement m = alg.embed(t.coeff);
      for (unsigned i : monomial_indices(t.mask)) m = alg.mul(m, images[i - 1]);
      acc = alg.add(acc, m);
    }
    return acc;
  };
  return validated(alg, {"generator_images", std::move(action)});
}

// ---------------------------------------------------------------------------

namespace {

ScalarMatrix coordinate_rows(const GrassmannAlgebra& alg, std::span<const GrassmannElement> elems) {
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(elems.size());
  for (const auto& e : elems) rows.push_back(alg.to_coordinates(e));
  return ScalarMatrix::from_rows(rows, alg.dimension(), alg.field());
}

void check_solver_cap(const GrassmannAlgebra& alg, unsigned cap) {
  if (alg.generators() > cap)
    throw CapExceeded("Grassmann algebra on " + std::to_string(alg.generators()) +
                      " generators exceeds the exhaustive solver cap of " + std::to_string(cap));
}

}  // namespace

ComponentBasis span_of(const GrassmannAlgebra& alg, std::span<const GrassmannElement> elems) {
  check_solver_cap(alg, kDefaultSolverCap);
  if (elems.empty()) return {};
  RowEchelon e = row_reduce(coordinate_rows(alg, elems));
  ComponentBasis b;
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    std::vector<Scalar> row(alg.dimension(), alg.field().zero());
    for (std::size_t c = 0; c < row.size(); ++c) row[c] = e.reduced(r, c);
    b.basis.push_back(alg.from_coordinates(row));
  }
  return b;
}

std::size_t span_rank(const GrassmannAlgebra& alg, std::span<const GrassmannElement> elems) {
  check_solver_cap(alg, kDefaultSolverCap);
  if (elems.empty()) return 0;
  return rank(coordinate_rows(alg, elems));
}

bool in_span(const GrassmannAlgebra& alg, const ComponentBasis& b, const GrassmannElement& x) {
  std::vector<GrassmannElement> ext = b.basis;
  const std::size_t r = span_rank(alg, ext);
  ext.push_back(x);
  return span_rank(alg, ext) == r;
}

bool is_independent(const GrassmannAlgebra& alg, const ComponentBasis& b) {
  return span_rank(alg, b.basis) == b.basis.size();
}

bool same_subspace(const GrassmannAlgebra& alg, const ComponentBasis& a, const ComponentBasis& b) {
  const std::size_t ra = span_rank(alg, a.basis);
  const std::size_t rb = span_rank(alg, b.basis);
  if (ra != rb) return false;
  std::vector<GrassmannElement> both = a.basis;
  both.insert(both.end(), b.basis.begin(), b.basis.end());
  return span_rank(alg, both) == ra;
}

ComponentBasis graded_component_basis(const GrassmannAlgebra& alg, unsigned m, unsigned n) {
  if (n == 0 || m >= n) throw InvalidArgument("graded component needs 0 <= m < n");
  check_solver_cap(alg, kDefaultSolverCap);
  ComponentBasis b;
  for (Mask mask = 0; mask < alg.dimension(); ++mask)
    if (static_cast<unsigned>(std::popcount(mask)) % n == m) b.basis.push_back(alg.monomial(mask, alg.field().one()));
  return b;
}

ComponentBasis solve_constraint(const GrassmannAlgebra& alg, const Endomorphism<GrassmannAlgebra>& delta,
                                const GrassmannElement& t, unsigned cap) {
  check_solver_cap(alg, cap);
  const std::size_t dim = alg.dimension();
  // column j = coordinates of delta(b_j) - t b_j
  ScalarMatrix m(dim, dim, alg.field());
  for (Mask j = 0; j < dim; ++j) {
    const GrassmannElement b = alg.monomial(j, alg.field().one());
    const GrassmannElement img = alg.sub(delta(b), alg.mul(t, b));
    for (const auto& term : img.terms()) m(term.mask, j) = term.coeff;
  }
  ComponentBasis out;
  for (const auto& v : kernel_basis(m)) out.basis.push_back(alg.from_coordinates(v));
  return out;
}

GrassmannElement sample_from(const GrassmannAlgebra& alg, const ComponentBasis& b, Rng& rng, long bound) {
  GrassmannElement acc = alg.zero();
  for (const auto& v : b.basis) {
    const long c = rng.uniform(-bound, bound);
    if (c != 0) acc = alg.add(acc, alg.scale(alg.field().from_int(c), v));
  }
  return acc;
}

bool lie_nilpotent_exhaustive(const GrassmannAlgebra& alg, unsigned k) {
  if (k == 0) throw InvalidArgument("Lie nilpotency index must be positive");
  check_solver_cap(alg, kDefaultSolverCap);
  const std::size_t dim = alg.dimension();
  std::vector<GrassmannElement> basis;
  basis.reserve(dim);
  for (Mask m = 0; m < dim; ++m) basis.push_back(alg.monomial(m, alg.field().one()));
  // Depth-first over tuples, reusing the partial commutator of the prefix.
  std::vector<GrassmannElement> partial(k + 1);
  auto rec = [&](auto&& self, unsigned depth) -> bool {
    for (std::size_t i = 0; i < dim; ++i) {
      partial[depth] = depth == 0 ? basis[i] : commutator(alg, partial[depth - 1], basis[i]);
      if (depth == k) {
        if (!partial[depth].is_zero()) return false;
      } else if (partial[depth].is_zero()) {
        continue;  // every extension vanishes too
      } else if (!self(self, depth + 1)) {
        return false;
      }
    }
    return true;
  };
  return rec(rec, 0);
}

}  // namespace lienil
