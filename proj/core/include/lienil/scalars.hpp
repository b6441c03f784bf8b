#pragma once

// Exact base-field arithmetic: GMP rationals and cyclotomic extensions
// Q(zeta_n) = Q[x]/(Phi_n).  Q itself is the degree-one case (n = 1 or 2),
// so every ring in the library is an algebra over some CyclotomicField.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lienil {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" (optional sign, surrounding blanks allowed).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
Rational inverse(const Rational& q);

/// Dense polynomial over Q, ascending powers.  Used for Phi_n and for the
/// representatives of cyclotomic residue classes.
using QPoly = std::vector<Rational>;

namespace qpoly {
void trim(QPoly& p);
QPoly mul(const QPoly& a, const QPoly& b);
/// Quotient and remainder; divisor must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
}  // namespace qpoly

/// Phi_n as ascending integer coefficients, obtained by exact division of
/// x^n - 1 by Phi_d for every proper divisor d of n.
const QPoly& cyclotomic_polynomial(unsigned n);

class Scalar;

/// Q(zeta_n).  Instances are interned: one object per order for the whole
/// process, so handles are compared by address.
class CyclotomicField {
 public:
  static const CyclotomicField& get(unsigned order);
  static const CyclotomicField& rationals() { return get(1); }

  CyclotomicField(const CyclotomicField&) = delete;
  CyclotomicField& operator=(const CyclotomicField&) = delete;

  unsigned order() const { return order_; }
  std::size_t degree() const { return modulus_.size() - 1; }
  const QPoly& modulus() const { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  /// The class of x: a primitive order()-th root of unity.
  Scalar root() const;
  Scalar from_int(long v) const;
  Scalar from_rational(const Rational& q) const;
  /// Reduces an arbitrary polynomial in the root modulo Phi_n.
  Scalar from_poly(QPoly p) const;

  /// A primitive n-th root of unity of this field, if it has one.
  std::optional<Scalar> primitive_root(unsigned n) const;

  /// Accepts the rational text form or a coefficient list "[c0, c1, ...]"
  /// in powers of root().
  Scalar parse(std::string_view text) const;

  bool operator==(const CyclotomicField& other) const { return this == &other; }

 private:
  explicit CyclotomicField(unsigned order);

  unsigned order_;
  QPoly modulus_;
};

/// Element of a CyclotomicField.  Immutable value; coefficient vector always
/// has exactly degree() entries.
class Scalar {
 public:
  /// Zero of Q.
  Scalar();

  const CyclotomicField& field() const { return *field_; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Throws InvalidArgument unless is_rational().
  const Rational& rational_value() const;

  Scalar inv() const;
  Scalar pow(long k) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }
  Scalar operator-() const;
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "p/q" over Q, "[c0, c1, ...]" otherwise.
  std::string to_string() const;

 private:
  friend class CyclotomicField;
  Scalar(const CyclotomicField* f, std::vector<Rational> c) : field_(f), coeffs_(std::move(c)) {}
  void check_same_field(const Scalar& o) const;

  const CyclotomicField* field_;
  std::vector<Rational> coeffs_;
};

}  // namespace lienil
