#pragma once

// JSON encodings.
//
//   scalar        "3/2", 5, or "[c0, c1, ...]" in powers of zeta_n
//   grassmann     {"g": 4, "coeffs": {"": "3/2", "1,2": "-1"}}; keys are
//                 ascending 1-based generator indices
//   poly          {"terms": {"a11*a22": "1", "": "-2"}}
//   matrix        {"n": 2, "entries": [[x, y], [z, w]]}
//   rpolynomial   {"coeffs": [x0, x1, ...]}
//   charpoly      {"side": "right", "k": 2, "coeffs": [...]}
//   ring          {"type": "rational"} | {"type": "cyclotomic", "order": 3}
//                 | {"type": "grassmann", "g": 4, "order": 1}
//                 | {"type": "poly", "vars": ["x", "y"], "order": 1}
//   spec          {"ring": ..., "delta": "epsilon" | "rho_e:3" | "sigma"
//                  | "identity" | {"generator_images": [...]}, "T": matrix, "n": 2}
//
// In every element position a bare scalar is accepted as a constant.
// Malformed input raises InvalidArgument.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "lienil/dets.hpp"
#include "lienil/grassmann.hpp"
#include "lienil/matrix.hpp"
#include "lienil/oracle.hpp"
#include "lienil/ring.hpp"
#include "lienil/rpoly.hpp"
#include "lienil/supermatrix.hpp"

namespace lienil {

using Json = nlohmann::json;

/// Parses text, mapping syntax errors to InvalidArgument.
Json parse_json(const std::string& text);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const CyclotomicField& field, const Json& j);

Json element_to_json(const ScalarRing& ring, const Scalar& x);
Scalar element_from_json(const ScalarRing& ring, const Json& j);
Json element_to_json(const GrassmannAlgebra& ring, const GrassmannElement& x);
GrassmannElement element_from_json(const GrassmannAlgebra& ring, const Json& j);
Json element_to_json(const CommutativePolyRing& ring, const OraclePolynomial& x);
OraclePolynomial element_from_json(const CommutativePolyRing& ring, const Json& j);

Json ring_to_json(const ScalarRing& ring);
Json ring_to_json(const GrassmannAlgebra& ring);
Json ring_to_json(const CommutativePolyRing& ring);

using AnyRing = std::variant<ScalarRing, GrassmannAlgebra, CommutativePolyRing>;
AnyRing ring_from_json(const Json& j);

/// "identity" for every ring; the Grassmann automorphisms by name.
Endomorphism<ScalarRing> endomorphism_from_json(const ScalarRing& ring, const Json& j);
Endomorphism<GrassmannAlgebra> endomorphism_from_json(const GrassmannAlgebra& ring, const Json& j);
Endomorphism<CommutativePolyRing> endomorphism_from_json(const CommutativePolyRing& ring, const Json& j);

/// Incremental 64-bit FNV-1a.
class Fnv1a {
 public:
  void update(std::string_view bytes);
  void update(const Json& j) { update(std::string_view(j.dump())); }
  std::string hex() const;

 private:
  std::uint64_t h_ = 1469598103934665603ULL;
};

/// FNV-1a of the compact dump, as 16 hex digits.
std::string digest(const Json& j);

namespace detail {
void require(bool ok, const std::string& what);
}  // namespace detail

template <Ring R>
Json matrix_to_json(const R& ring, const MatrixOf<R>& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(element_to_json(ring, a(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"n", a.rows()}, {"entries", std::move(rows)}};
}

template <Ring R>
MatrixOf<R> matrix_from_json(const R& ring, const Json& j) {
  detail::require(j.is_object() && j.contains("entries") && j["entries"].is_array(),
                  "matrix JSON needs an \"entries\" array");
  const Json& rows = j["entries"];
  const std::size_t n = rows.size();
  if (j.contains("n")) detail::require(j["n"].is_number_unsigned() && j["n"].get<std::size_t>() == n,
                                       "matrix \"n\" does not match the number of rows");
  detail::require(n > 0, "empty matrix");
  MatrixOf<R> a(n, n, ring.zero());
  for (std::size_t i = 0; i < n; ++i) {
    detail::require(rows[i].is_array() && rows[i].size() == n, "matrix must be square");
    for (std::size_t c = 0; c < n; ++c) a(i, c) = element_from_json(ring, rows[i][c]);
  }
  return a;
}

template <Ring R>
Json rpolynomial_to_json(const R& ring, const std::vector<ElementOf<R>>& coeffs) {
  Json c = Json::array();
  for (const auto& x : coeffs) c.push_back(element_to_json(ring, x));
  return {{"coeffs", std::move(c)}};
}

template <Ring R>
Json charpoly_to_json(const R& ring, const CharPoly<R>& p) {
  Json j = rpolynomial_to_json(ring, p.coeffs);
  j["side"] = to_string(p.side);
  j["k"] = p.k;
  return j;
}

template <Ring R>
CharPoly<R> charpoly_from_json(const R& ring, const Json& j) {
  detail::require(j.is_object() && j.contains("coeffs") && j["coeffs"].is_array(), "charpoly JSON needs \"coeffs\"");
  CharPoly<R> p{Side::Right, 1, {}};
  if (j.contains("side")) {
    const std::string s = j["side"].get<std::string>();
    detail::require(s == "right" || s == "left", "side must be right or left");
    p.side = s == "right" ? Side::Right : Side::Left;
  }
  if (j.contains("k")) p.k = j["k"].get<unsigned>();
  for (const auto& c : j["coeffs"]) p.coeffs.push_back(element_from_json(ring, c));
  return p;
}

template <Ring R>
SuperAlgebraSpec<R> spec_from_json(const R& ring, const Json& j) {
  detail::require(j.is_object() && j.contains("T"), "spec JSON needs \"T\"");
  auto t = TransitiveMatrix<R>::verify(ring, matrix_from_json(ring, j["T"]));
  if (j.contains("n"))
    detail::require(j["n"].get<std::size_t>() == t.size(), "spec \"n\" does not match the size of T");
  Endomorphism<R> delta = endomorphism_from_json(ring, j.value("delta", Json("identity")));
  return SuperAlgebraSpec<R>(ring, std::move(delta), std::move(t));
}

}  // namespace lienil
