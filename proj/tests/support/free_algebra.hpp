#pragma once

// Test oracles that share no code with the determinant module.
//
// FreeAlgebra: Q<x1..xm>, noncommutative polynomials as word -> coefficient
// maps.  Nothing commutes, so any reordering of factors shows up.
//
// brute_sdet / brute_preadjoint: the defining double sums, enumerated with
// std::next_permutation and an explicit inversion count.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "lienil/matrix.hpp"
#include "lienil/ring.hpp"

namespace oracle {

using lienil::Scalar;

struct Word {
  std::map<std::vector<int>, Scalar> terms;
};

class FreeAlgebra {
 public:
  using Element = Word;

  explicit FreeAlgebra(std::vector<std::string> names) : names_(std::move(names)) {}

  Element var(int i) const { return Element{{{{i}, field().one()}}}; }
  Element zero() const { return {}; }
  Element one() const { return Element{{{{}, field().one()}}}; }
  Element add(const Element& a, const Element& b) const {
    Element r = a;
    for (const auto& [w, c] : b.terms) put(r, w, c);
    return r;
  }
  Element neg(const Element& a) const {
    Element r;
    for (const auto& [w, c] : a.terms) r.terms.emplace(w, -c);
    return r;
  }
  Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }
  Element mul(const Element& a, const Element& b) const {
    Element r;
    for (const auto& [u, c] : a.terms)
      for (const auto& [v, d] : b.terms) {
        std::vector<int> w = u;
        w.insert(w.end(), v.begin(), v.end());
        put(r, w, c * d);
      }
    return r;
  }
  bool equal(const Element& a, const Element& b) const { return is_zero(sub(a, b)); }
  bool is_zero(const Element& a) const { return a.terms.empty(); }
  bool is_central(const Element& a) const {
    return std::all_of(a.terms.begin(), a.terms.end(), [](const auto& t) { return t.first.empty(); });
  }
  std::optional<Element> try_invert(const Element& a) const {
    if (a.terms.size() != 1 || !a.terms.begin()->first.empty()) return std::nullopt;
    return embed(a.terms.begin()->second.inv());
  }
  std::optional<bool> is_non_zero_divisor(const Element& a) const { return !a.terms.empty(); }
  Element embed(const Scalar& c) const {
    Element r;
    if (!c.is_zero()) r.terms.emplace(std::vector<int>{}, c);
    return r;
  }
  Element scale(const Scalar& c, const Element& a) const { return mul(embed(c), a); }
  const lienil::CyclotomicField& field() const { return lienil::CyclotomicField::rationals(); }
  std::string to_string(const Element& a) const {
    if (a.terms.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : a.terms) {
      if (!s.empty()) s += " + ";
      s += c.to_string();
      for (int i : w) s += "*" + names_[static_cast<std::size_t>(i)];
    }
    return s;
  }

 private:
  static void put(Element& r, const std::vector<int>& w, const Scalar& c) {
    auto it = r.terms.find(w);
    if (it == r.terms.end()) {
      if (!c.is_zero()) r.terms.emplace(w, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) r.terms.erase(it);
  }
  std::vector<std::string> names_;
};

static_assert(lienil::Ring<FreeAlgebra>);

inline int inversion_sign(const std::vector<std::size_t>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  return inv % 2 ? -1 : 1;
}

template <lienil::Ring R>
lienil::ElementOf<R> brute_sdet(const R& ring, const lienil::MatrixOf<R>& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> alpha(n);
  std::iota(alpha.begin(), alpha.end(), 0);
  auto sum = ring.zero();
  do {
    std::vector<std::size_t> beta(n);
    std::iota(beta.begin(), beta.end(), 0);
    do {
      auto prod = ring.one();
      for (std::size_t t = 0; t < n; ++t) prod = ring.mul(prod, a(alpha[t], beta[t]));
      sum = inversion_sign(alpha) * inversion_sign(beta) > 0 ? ring.add(sum, prod) : ring.sub(sum, prod);
    } while (std::next_permutation(beta.begin(), beta.end()));
  } while (std::next_permutation(alpha.begin(), alpha.end()));
  return sum;
}

/// Filters S_n x S_n by alpha(s) = s, beta(s) = r and drops the factor at s.
template <lienil::Ring R>
lienil::MatrixOf<R> brute_preadjoint(const R& ring, const lienil::MatrixOf<R>& a) {
  const std::size_t n = a.rows();
  lienil::MatrixOf<R> out(n, n, ring.zero());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::size_t> alpha(n);
      std::iota(alpha.begin(), alpha.end(), 0);
      do {
        if (alpha[s] != s) continue;
        std::vector<std::size_t> beta(n);
        std::iota(beta.begin(), beta.end(), 0);
        do {
          if (beta[s] != r) continue;
          auto prod = ring.one();
          for (std::size_t t = 0; t < n; ++t)
            if (t != s) prod = ring.mul(prod, a(alpha[t], beta[t]));
          out(r, s) = inversion_sign(alpha) * inversion_sign(beta) > 0 ? ring.add(out(r, s), prod)
                                                                       : ring.sub(out(r, s), prod);
        } while (std::next_permutation(beta.begin(), beta.end()));
      } while (std::next_permutation(alpha.begin(), alpha.end()));
    }
  return out;
}

}  // namespace oracle
