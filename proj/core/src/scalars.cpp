#include "lienil/scalars.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>

#include "lienil/errors.hpp"

namespace lienil {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_text(s)) throw InvalidArgument("not an integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = strip(text);
  auto slash = s.find('/');
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(parse_integer(s));
  } else {
    Integer num = parse_integer(strip(s.substr(0, slash)));
    Integer den = parse_integer(strip(s.substr(slash + 1)));
    if (den == 0) throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
    q = Rational(num, den);
    q.canonicalize();
  }
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational inverse(const Rational& q) {
  if (q == 0) throw DivisionByZero("inverse of zero rational");
  return Rational(1) / q;
}

namespace qpoly {

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  QPoly d = b;
  trim(d);
  if (d.empty()) throw DivisionByZero("polynomial division by zero");
  QPoly rem = a;
  trim(rem);
  if (rem.size() < d.size()) return {{}, rem};
  QPoly quot(rem.size() - d.size() + 1, Rational(0));
  const Rational lead_inv = inverse(d.back());
  for (std::size_t i = rem.size(); i-- >= d.size();) {
    Rational c = rem[i] * lead_inv;
    if (c == 0) continue;
    std::size_t shift = i + 1 - d.size();
    quot[shift] = c;
    for (std::size_t j = 0; j < d.size(); ++j) rem[shift + j] -= c * d[j];
  }
  trim(quot);
  trim(rem);
  return {quot, rem};
}

}  // namespace qpoly

const QPoly& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw InvalidArgument("cyclotomic polynomial order must be positive");
  static std::mutex mu;
  static std::map<unsigned, QPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  QPoly p(n + 1, Rational(0));
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = qpoly::divmod(p, cyclotomic_polynomial(d));
    if (!r.empty()) throw InvariantViolation("x^n - 1 not divisible by Phi_d");
    p = std::move(q);
  }
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

// ---------------------------------------------------------------------------

CyclotomicField::CyclotomicField(unsigned order) : order_(order), modulus_(cyclotomic_polynomial(order)) {}

const CyclotomicField& CyclotomicField::get(unsigned order) {
  if (order == 0) throw InvalidArgument("cyclotomic field order must be positive");
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<CyclotomicField>> fields;
  std::lock_guard lock(mu);
  auto& slot = fields[order];
  if (!slot) slot.reset(new CyclotomicField(order));
  return *slot;
}

Scalar CyclotomicField::zero() const { return Scalar(this, std::vector<Rational>(degree(), Rational(0))); }

Scalar CyclotomicField::one() const { return from_int(1); }

Scalar CyclotomicField::root() const { return from_poly({Rational(0), Rational(1)}); }

Scalar CyclotomicField::from_int(long v) const { return from_rational(Rational(v)); }

Scalar CyclotomicField::from_rational(const Rational& q) const {
  std::vector<Rational> c(degree(), Rational(0));
  c[0] = q;
  return Scalar(this, std::move(c));
}

Scalar CyclotomicField::from_poly(QPoly p) const {
  const std::size_t d = degree();
  for (std::size_t i = p.size(); i-- > d;) {
    if (p[i] == 0) continue;
    Rational c = p[i];
    // modulus is monic of degree d
    for (std::size_t j = 0; j <= d; ++j) p[i - d + j] -= c * modulus_[j];
  }
  p.resize(d, Rational(0));
  return Scalar(this, std::move(p));
}

std::optional<Scalar> CyclotomicField::primitive_root(unsigned n) const {
  if (n == 0) throw InvalidArgument("root-of-unity order must be positive");
  // Every root of unity in Q(zeta_m) is +-zeta_m^j.
  std::vector<unsigned> primes;
  for (unsigned p = 2, m = n; m > 1; ++p) {
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  const Scalar one_s = one();
  const Scalar z = root();
  Scalar zj = one_s;
  for (unsigned j = 0; j < order_; ++j, zj *= z) {
    for (const Scalar& cand : {zj, -zj}) {
      if (!(cand.pow(n) == one_s)) continue;
      bool primitive = true;
      for (unsigned p : primes)
        if (cand.pow(n / p) == one_s) primitive = false;
      if (primitive) return cand;
    }
  }
  return std::nullopt;
}

Scalar CyclotomicField::parse(std::string_view text) const {
  std::string_view s = strip(text);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw InvalidArgument("unterminated coefficient list: '" + std::string(text) + "'");
    s = strip(s.substr(1, s.size() - 2));
    QPoly p;
    while (!s.empty()) {
      auto comma = s.find(',');
      p.push_back(parse_rational(s.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      s.remove_prefix(comma + 1);
      if (strip(s).empty()) throw InvalidArgument("trailing comma in '" + std::string(text) + "'");
    }
    if (p.empty()) throw InvalidArgument("empty coefficient list");
    return from_poly(std::move(p));
  }
  return from_rational(parse_rational(s));
}

// ---------------------------------------------------------------------------

Scalar::Scalar() : field_(&CyclotomicField::rationals()), coeffs_{Rational(0)} {}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw_context_mismatch("scalars from Q(zeta_" + std::to_string(field_->order()) + ") and Q(zeta_" +
                           std::to_string(o.field_->order()) + ")");
}

bool Scalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

const Rational& Scalar::rational_value() const {
  if (!is_rational()) throw InvalidArgument("scalar " + to_string() + " is not rational");
  return coeffs_[0];
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (coeffs_.size() == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  QPoly prod(2 * coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      if (o.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  *this = field_->from_poly(std::move(prod));
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  return a.coeffs_ == b.coeffs_;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  if (coeffs_.size() == 1) return Scalar(field_, {Rational(1) / coeffs_[0]});
  // Extended Euclid: find s with s*a = 1 mod Phi.
  QPoly r0 = field_->modulus(), r1(coeffs_.begin(), coeffs_.end());
  qpoly::trim(r1);
  QPoly s0, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    auto [q, r] = qpoly::divmod(r0, r1);
    QPoly qs = qpoly::mul(q, s1);
    QPoly s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    qpoly::trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) throw InvariantViolation("cyclotomic modulus not irreducible");
  }
  const Rational c = Rational(1) / r1[0];
  for (auto& x : s1) x *= c;
  return field_->from_poly(std::move(s1));
}

Scalar Scalar::pow(long k) const {
  if (k < 0) return inv().pow(-k);
  Scalar result = field_->one();
  Scalar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (coeffs_.size() == 1) return lienil::to_string(coeffs_[0]);
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ", ";
    s += lienil::to_string(coeffs_[i]);
  }
  return s + "]";
}

}  // namespace lienil
