#include "lienil/oracle.hpp"

#include <algorithm>
#include <set>

#include "lienil/errors.hpp"

namespace lienil {

CommutativePolyRing::CommutativePolyRing(std::vector<std::string> variables, const CyclotomicField& field)
    : vars_(std::move(variables)), field_(&field) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty() || v.find_first_of("*^ ") != std::string::npos)
      throw InvalidArgument("bad variable name '" + v + "'");
    if (!seen.insert(v).second) throw InvalidArgument("duplicate variable '" + v + "'");
  }
}

void CommutativePolyRing::check(const Element& a) const {
  if (!a.terms.empty()) {
    const auto& [e, c] = *a.terms.begin();
    if (e.size() != vars_.size()) throw_context_mismatch("polynomial over a different variable set");
    if (!(c.field() == *field_)) throw_context_mismatch("polynomial over a different scalar field");
  }
}

OraclePolynomial CommutativePolyRing::one() const { return embed(field_->one()); }

OraclePolynomial CommutativePolyRing::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element r = a;
  for (const auto& [e, c] : b.terms) {
    auto [it, inserted] = r.terms.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) r.terms.erase(it);
    }
  }
  return r;
}

OraclePolynomial CommutativePolyRing::neg(const Element& a) const {
  check(a);
  Element r = a;
  for (auto& [e, c] : r.terms) c = -c;
  return r;
}

OraclePolynomial CommutativePolyRing::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

OraclePolynomial CommutativePolyRing::mul(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element r;
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      Exponents e(vars_.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Scalar c = ca * cb;
      auto [it, inserted] = r.terms.emplace(std::move(e), c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) r.terms.erase(it);
      }
    }
  }
  return r;
}

bool CommutativePolyRing::equal(const Element& a, const Element& b) const {
  check(a);
  check(b);
  if (a.terms.size() != b.terms.size()) return false;
  auto i = a.terms.begin();
  for (auto j = b.terms.begin(); j != b.terms.end(); ++i, ++j)
    if (i->first != j->first || !(i->second == j->second)) return false;
  return true;
}

std::optional<OraclePolynomial> CommutativePolyRing::try_invert(const Element& a) const {
  check(a);
  if (a.terms.size() != 1) return std::nullopt;
  const auto& [e, c] = *a.terms.begin();
  if (std::any_of(e.begin(), e.end(), [](unsigned x) { return x != 0; })) return std::nullopt;
  return embed(c.inv());
}

OraclePolynomial CommutativePolyRing::embed(const Scalar& c) const {
  if (!(c.field() == *field_)) throw_context_mismatch("scalar from a different field");
  Element r;
  if (!c.is_zero()) r.terms.emplace(Exponents(vars_.size(), 0), c);
  return r;
}

OraclePolynomial CommutativePolyRing::scale(const Scalar& c, const Element& a) const {
  check(a);
  if (c.is_zero()) return {};
  Element r = a;
  for (auto& [e, x] : r.terms) x *= c;
  return r;
}

OraclePolynomial CommutativePolyRing::var(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw InvalidArgument("unknown variable '" + name + "'");
  Exponents e(vars_.size(), 0);
  e[static_cast<std::size_t>(it - vars_.begin())] = 1;
  return term(e, field_->one());
}

OraclePolynomial CommutativePolyRing::term(const Exponents& e, const Scalar& c) const {
  if (e.size() != vars_.size()) throw InvalidArgument("exponent vector has wrong length");
  Element r;
  if (!c.is_zero()) r.terms.emplace(e, c);
  return r;
}

std::string CommutativePolyRing::monomial_key(const Exponents& e) const {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars_[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

Exponents CommutativePolyRing::parse_monomial_key(const std::string& key) const {
  Exponents e(vars_.size(), 0);
  std::size_t pos = 0;
  while (pos < key.size()) {
    std::size_t star = key.find('*', pos);
    std::string factor = key.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    pos = star == std::string::npos ? key.size() : star + 1;
    unsigned power = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      const std::string p = factor.substr(caret + 1);
      if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidArgument("bad exponent in monomial '" + key + "'");
      power = static_cast<unsigned>(std::stoul(p));
      factor.resize(caret);
    }
    auto it = std::find(vars_.begin(), vars_.end(), factor);
    if (it == vars_.end()) throw InvalidArgument("unknown variable '" + factor + "' in monomial '" + key + "'");
    e[static_cast<std::size_t>(it - vars_.begin())] += power;
  }
  return e;
}

std::string CommutativePolyRing::to_string(const Element& a) const {
  check(a);
  if (a.terms.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : a.terms) {
    if (!s.empty()) s += " + ";
    const std::string key = monomial_key(e);
    if (key.empty())
      s += c.to_string();
    else if (c.is_one())
      s += key;
    else
      s += c.to_string() + "*" + key;
  }
  return s;
}

std::vector<std::string> symbolic_matrix_variables(std::size_t n, const std::string& prefix) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      v.push_back(n > 9 ? prefix + std::to_string(i) + "_" + std::to_string(j)
                        : prefix + std::to_string(i) + std::to_string(j));
  return v;
}

}  // namespace lienil
