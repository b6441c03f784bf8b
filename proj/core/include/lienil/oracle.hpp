#pragma once

// Commutative multivariate polynomial ring K[x1..xm], used as an
// independent oracle: over it the symmetric determinant and preadjoint must
// reduce to n! det and (n-1)! adj, which are computed here by classical
// cofactor expansion.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lienil/ring.hpp"
#include "lienil/scalars.hpp"

namespace lienil {

/// Exponent vector, one entry per ring variable.
using Exponents = std::vector<unsigned>;

struct OraclePolynomial {
  std::map<Exponents, Scalar> terms;  // no zero coefficients
};

class CommutativePolyRing {
 public:
  using Element = OraclePolynomial;

  explicit CommutativePolyRing(std::vector<std::string> variables,
                               const CyclotomicField& field = CyclotomicField::rationals());

  const std::vector<std::string>& variables() const { return vars_; }

  Element zero() const { return {}; }
  Element one() const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  bool equal(const Element& a, const Element& b) const;
  bool is_zero(const Element& a) const { return a.terms.empty(); }
  bool is_central(const Element&) const { return true; }
  /// Only nonzero constants are units.
  std::optional<Element> try_invert(const Element& a) const;
  /// Integral domain: every nonzero element.
  std::optional<bool> is_non_zero_divisor(const Element& a) const { return !a.terms.empty(); }
  Element embed(const Scalar& c) const;
  Element scale(const Scalar& c, const Element& a) const;
  const CyclotomicField& field() const { return *field_; }
  std::string to_string(const Element& a) const;

  /// The variable with the given name.
  Element var(const std::string& name) const;
  Element term(const Exponents& e, const Scalar& c) const;
  /// "x^2*y" style key; "" for the constant monomial.
  std::string monomial_key(const Exponents& e) const;
  Exponents parse_monomial_key(const std::string& key) const;

  bool operator==(const CommutativePolyRing& o) const { return vars_ == o.vars_ && field_ == o.field_; }

 private:
  void check(const Element& a) const;

  std::vector<std::string> vars_;
  const CyclotomicField* field_;
};

static_assert(Ring<CommutativePolyRing>);

/// Variable names a11, a12, ... for a fully symbolic n x n matrix
/// (row-major, 1-based, with '_' separators when n > 9).
std::vector<std::string> symbolic_matrix_variables(std::size_t n, const std::string& prefix = "a");

}  // namespace lienil
