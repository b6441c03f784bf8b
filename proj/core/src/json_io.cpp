#include "lienil/json_io.hpp"

#include <cstdio>
#include <sstream>

namespace lienil {

namespace detail {
void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}
}  // namespace detail

using detail::require;

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const CyclotomicField& field, const Json& j) {
  if (j.is_string()) return field.parse(j.get<std::string>());
  if (j.is_number_integer()) return field.from_int(j.get<long>());
  if (j.is_array()) {
    std::string text = "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) text += ",";
      require(j[i].is_string() || j[i].is_number_integer(), "scalar coefficient must be a string or integer");
      text += j[i].is_string() ? j[i].get<std::string>() : std::to_string(j[i].get<long>());
    }
    return field.parse(text + "]");
  }
  throw InvalidArgument("expected a scalar, got " + j.dump());
}

namespace {

bool is_scalar_json(const Json& j) { return j.is_string() || j.is_number_integer() || j.is_array(); }

std::string mask_key(Mask m) {
  std::string s;
  for (unsigned i : monomial_indices(m)) {
    if (!s.empty()) s += ",";
    s += std::to_string(i);
  }
  return s;
}

Mask parse_mask_key(const std::string& key, unsigned g) {
  Mask m = 0;
  unsigned last = 0;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    unsigned idx = 0;
    try {
      std::size_t used = 0;
      idx = static_cast<unsigned>(std::stoul(part, &used));
      require(used == part.size(), "");
    } catch (...) {
      throw InvalidArgument("bad Grassmann monomial key '" + key + "'");
    }
    require(idx >= 1 && idx <= g, "generator index " + std::to_string(idx) + " out of range in key '" + key + "'");
    require(idx > last, "Grassmann monomial key '" + key + "' must be strictly ascending");
    last = idx;
    m |= Mask{1} << (idx - 1);
  }
  return m;
}

const CyclotomicField& field_from_json(const Json& j) {
  const unsigned order = j.value("order", 1U);
  require(order >= 1, "field order must be positive");
  return CyclotomicField::get(order);
}

}  // namespace

Json element_to_json(const ScalarRing&, const Scalar& x) { return scalar_to_json(x); }
Scalar element_from_json(const ScalarRing& ring, const Json& j) { return scalar_from_json(ring.field(), j); }

Json element_to_json(const GrassmannAlgebra& ring, const GrassmannElement& x) {
  Json c = Json::object();
  for (const auto& t : x.terms()) c[mask_key(t.mask)] = scalar_to_json(t.coeff);
  return {{"g", ring.generators()}, {"coeffs", std::move(c)}};
}

GrassmannElement element_from_json(const GrassmannAlgebra& ring, const Json& j) {
  if (is_scalar_json(j)) return ring.embed(scalar_from_json(ring.field(), j));
  require(j.is_object() && j.contains("coeffs") && j["coeffs"].is_object(),
          "Grassmann element JSON needs a \"coeffs\" object");
  if (j.contains("g"))
    require(j["g"].get<unsigned>() == ring.generators(), "Grassmann element has g=" + j["g"].dump() +
                                                            ", ring has g=" + std::to_string(ring.generators()));
  std::vector<GrassmannTerm> terms;
  for (const auto& [key, val] : j["coeffs"].items())
    terms.push_back({parse_mask_key(key, ring.generators()), scalar_from_json(ring.field(), val)});
  return ring.from_terms(std::move(terms));
}

Json element_to_json(const CommutativePolyRing& ring, const OraclePolynomial& x) {
  Json t = Json::object();
  for (const auto& [e, c] : x.terms) t[ring.monomial_key(e)] = scalar_to_json(c);
  return {{"terms", std::move(t)}};
}

OraclePolynomial element_from_json(const CommutativePolyRing& ring, const Json& j) {
  if (is_scalar_json(j)) return ring.embed(scalar_from_json(ring.field(), j));
  require(j.is_object() && j.contains("terms") && j["terms"].is_object(), "polynomial JSON needs a \"terms\" object");
  OraclePolynomial p = ring.zero();
  for (const auto& [key, val] : j["terms"].items())
    p = ring.add(p, ring.term(ring.parse_monomial_key(key), scalar_from_json(ring.field(), val)));
  return p;
}

Json ring_to_json(const ScalarRing& ring) {
  if (ring.field().order() == 1) return {{"type", "rational"}};
  return {{"type", "cyclotomic"}, {"order", ring.field().order()}};
}

Json ring_to_json(const GrassmannAlgebra& ring) {
  return {{"type", "grassmann"}, {"g", ring.generators()}, {"order", ring.field().order()}};
}

Json ring_to_json(const CommutativePolyRing& ring) {
  return {{"type", "poly"}, {"vars", ring.variables()}, {"order", ring.field().order()}};
}

AnyRing ring_from_json(const Json& j) {
  require(j.is_object() && j.contains("type") && j["type"].is_string(), "ring JSON needs a \"type\" string");
  try {
    const std::string type = j["type"].get<std::string>();
    if (type == "rational") return ScalarRing(CyclotomicField::rationals());
    if (type == "cyclotomic") {
      require(j.contains("order"), "cyclotomic ring needs \"order\"");
      return ScalarRing(field_from_json(j));
    }
    if (type == "grassmann") {
      const unsigned g = j.value("g", GrassmannAlgebra::kDefaultGenerators);
      return GrassmannAlgebra(g, field_from_json(j));
    }
    if (type == "poly") {
      require(j.contains("vars") && j["vars"].is_array(), "poly ring needs a \"vars\" array");
      return CommutativePolyRing(j["vars"].get<std::vector<std::string>>(), field_from_json(j));
    }
    throw InvalidArgument("unknown ring type '" + type + "'");
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("bad ring JSON: ") + e.what());
  }
}

namespace {
template <class R>
Endomorphism<R> identity_only(const R& ring, const Json& j) {
  require(j.is_string() && j.get<std::string>() == "identity",
          "only the identity endomorphism is available for this ring, got " + j.dump());
  return identity_endomorphism(ring);
}
}  // namespace

Endomorphism<ScalarRing> endomorphism_from_json(const ScalarRing& ring, const Json& j) {
  return identity_only(ring, j);
}

Endomorphism<CommutativePolyRing> endomorphism_from_json(const CommutativePolyRing& ring, const Json& j) {
  return identity_only(ring, j);
}

Endomorphism<GrassmannAlgebra> endomorphism_from_json(const GrassmannAlgebra& ring, const Json& j) {
  if (j.is_object()) {
    require(j.contains("generator_images") && j["generator_images"].is_array(),
            "endomorphism object needs \"generator_images\"");
    std::vector<GrassmannElement> images;
    for (const auto& x : j["generator_images"]) images.push_back(element_from_json(ring, x));
    return endomorphism_from_generator_images(ring, std::move(images));
  }
  require(j.is_string(), "endomorphism must be a name or an object");
  const std::string name = j.get<std::string>();
  if (name == "identity") return identity_endomorphism(ring);
  if (name == "epsilon") return epsilon_automorphism(ring);
  if (name == "sigma") return sigma_automorphism(ring);
  if (name.rfind("rho_e:", 0) == 0) {
    unsigned n = 0;
    try {
      n = static_cast<unsigned>(std::stoul(name.substr(6)));
    } catch (...) {
      throw InvalidArgument("bad rho_e order in '" + name + "'");
    }
    return rho_automorphism(ring, n);
  }
  throw InvalidArgument("unknown endomorphism '" + name + "'");
}

void Fnv1a::update(std::string_view bytes) {
  for (unsigned char c : bytes) {
    h_ ^= c;
    h_ *= 1099511628211ULL;
  }
}

std::string Fnv1a::hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
  return buf;
}

std::string digest(const Json& j) {
  Fnv1a h;
  h.update(j);
  return h.hex();
}

}  // namespace lienil
