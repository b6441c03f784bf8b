#include "lienil_tools/commands.hpp"

#include <iostream>
#include <sstream>
#include <type_traits>

#include "lienil/dets.hpp"
#include "lienil/examples.hpp"
#include "lienil/integrality.hpp"
#include "lienil/transitive.hpp"
#include "lienil_tools/reproduce.hpp"

namespace lienil::tools {

namespace {

constexpr std::uint64_t kDeltaSampleSeed = 0x5eed0002;

const Json& field_of(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw InvalidArgument(std::string("input needs a \"") + key + "\" field");
  return doc[key];
}

template <class F>
CommandResult on_ring(const CommandOptions& o, F&& f) {
  const AnyRing any = ring_from_json(field_of(o.input, "ring"));
  return std::visit([&](const auto& ring) { return f(ring); }, any);
}

Side parse_side(const std::string& s) {
  if (s == "right") return Side::Right;
  if (s == "left") return Side::Left;
  throw InvalidArgument("--side must be right or left");
}

std::string verdict_line(bool v) { return std::string("verdict: ") + (v ? "true" : "false"); }

CommandResult verdict(Json doc, std::string text, bool ok) {
  doc["verdict"] = ok;
  text += verdict_line(ok) + "\n";
  return {std::move(doc), std::move(text), ok ? kOk : kCheckFailed};
}

template <Ring R>
std::vector<ElementOf<R>> delta_samples(const R& ring, const CommandOptions& o) {
  if constexpr (std::is_same_v<R, GrassmannAlgebra>) {
    return validation_samples(ring, kDeltaSampleSeed, 8);
  } else {
    std::vector<ElementOf<R>> s{ring.one()};
    if (o.input.contains("r")) s.push_back(element_from_json(ring, o.input["r"]));
    return s;
  }
}

/// The spec given by "T" (and "delta") in the input, or P^(e) of size n with
/// e a primitive root of order --root.
template <Ring R>
SuperAlgebraSpec<R> spec_for(const R& ring, const CommandOptions& o) {
  if (o.input.contains("T")) return spec_from_json(ring, o.input);
  const std::size_t n = o.n ? o.n : o.input.value("n", std::size_t{2});
  const unsigned order = o.root ? o.root : static_cast<unsigned>(n);
  auto e = ring.field().primitive_root(order);
  if (!e) throw InvalidArgument("scalar field has no primitive " + std::to_string(order) + "-th root of unity");
  return SuperAlgebraSpec<R>(ring, endomorphism_from_json(ring, o.input.value("delta", Json("identity"))),
                             power_transitive(ring, ring.embed(*e), n));
}

Json conditions_json(const EmbeddingConditionsReport& r) {
  Json nzd = r.non_zero_divisors ? Json(*r.non_zero_divisors) : Json("unverified");
  return {{"n", r.n},
          {"units_central", r.units_central},
          {"inverse_n", r.inverse_n},
          {"roots_of_unity", r.roots_of_unity},
          {"non_zero_divisors", nzd},
          {"positive_power_sums", r.positive_power_sums},
          {"negative_power_sums", r.negative_power_sums},
          {"t_fixed", r.t_fixed},
          {"delta_period", r.delta_period},
          {"negative_sums_redundant", r.negative_sums_redundant},
          {"redundancy_consistent", r.redundancy_consistent},
          {"regime1", r.regime1()},
          {"regime2", r.regime2()},
          {"regime3", r.regime3()}};
}

std::string conditions_text(const Json& j) {
  std::string s;
  for (const auto& [k, v] : j.items()) s += "  " + k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  return s;
}

template <Ring R>
std::string matrix_text(const R& ring, const MatrixOf<R>& a) {
  std::string s;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    s += "  [";
    for (std::size_t j = 0; j < a.cols(); ++j) s += (j ? ", " : "") + ring.to_string(a(i, j));
    s += "]\n";
  }
  return s;
}

template <Ring R>
std::string coeffs_text(const R& ring, const std::vector<ElementOf<R>>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += "  z^" + std::to_string(i) + ": " + ring.to_string(c[i]) + "\n";
  return s;
}

// ---------------------------------------------------------------------------

CommandResult cmd_transitive(const std::string& sub, const CommandOptions& o) {
  return on_ring(o, [&](const auto& ring) -> CommandResult {
    using R = std::decay_t<decltype(ring)>;
    Json doc = {{"command", "transitive " + sub}};
    if (sub == "check") {
      const auto t = matrix_from_json(ring, field_of(o.input, "T"));
      const auto f = transitivity_failure(ring, t);
      std::string text;
      if (f) {
        doc["failure"] = {{"i", f->i + 1}, {"j", f->j + 1}, {"k", f->k + 1}};
        text = "fails at (i,j,k) = (" + std::to_string(f->i + 1) + "," + std::to_string(f->j + 1) + "," +
               std::to_string(f->k + 1) + ")\n";
      }
      return verdict(std::move(doc), text, !f);
    }
    if (sub == "build") {
      std::vector<ElementOf<R>> g;
      for (const auto& x : field_of(o.input, "units")) g.push_back(element_from_json(ring, x));
      const auto t = transitive_from_units(ring, std::move(g));
      doc["T"] = matrix_to_json(ring, t.matrix());
      return verdict(std::move(doc), matrix_text(ring, t.matrix()), true);
    }
    if (sub == "blowup") {
      const auto t = TransitiveMatrix<R>::verify(ring, matrix_from_json(ring, field_of(o.input, "T")));
      const auto b = blow_up(ring, t, field_of(o.input, "cuts").get<std::vector<std::size_t>>());
      doc["T"] = matrix_to_json(ring, b.matrix());
      return verdict(std::move(doc), matrix_text(ring, b.matrix()), is_transitive(ring, b.matrix()));
    }
    if (sub == "factor") {
      const auto t = TransitiveMatrix<R>::verify(ring, matrix_from_json(ring, field_of(o.input, "T")));
      const auto g = factor_transitive(ring, t);
      Json units = Json::array();
      std::string text;
      for (std::size_t i = 0; i < g.size(); ++i) {
        units.push_back(element_to_json(ring, g[i]));
        text += "  g" + std::to_string(i + 1) + " = " + ring.to_string(g[i]) + "\n";
      }
      doc["units"] = std::move(units);
      const bool round_trip = equal(ring, transitive_from_units(ring, g).matrix(), t.matrix());
      doc["round_trip"] = round_trip;
      return verdict(std::move(doc), text, round_trip);
    }
    throw InvalidArgument("unknown transitive subcommand '" + sub + "'");
  });
}

CommandResult cmd_theta(const CommandOptions& o) {
  return on_ring(o, [&](const auto& ring) -> CommandResult {
    Json doc = {{"command", "theta"}};
    const auto tm = matrix_from_json(ring, field_of(o.input, "T"));
    if (auto cx = theta_counterexample(ring, tm)) {
      doc["counterexample"] = {{"i", cx->i + 1},
                               {"j", cx->j + 1},
                               {"k", cx->k + 1},
                               {"unit_failure", cx->unit_failure},
                               {"lhs", matrix_to_json(ring, cx->lhs)},
                               {"rhs", matrix_to_json(ring, cx->rhs)}};
      const std::string text = cx->unit_failure ? "Theta_T(I) != I\n"
                                                : "Theta_T(E_ij E_jk) != Theta_T(E_ij) Theta_T(E_jk) at (i,j,k) = (" +
                                                      std::to_string(cx->i + 1) + "," + std::to_string(cx->j + 1) +
                                                      "," + std::to_string(cx->k + 1) + ")\n";
      return verdict(std::move(doc), text, false);
    }
    using R = std::decay_t<decltype(ring)>;
    const auto t = TransitiveMatrix<R>::verify(ring, tm);
    const auto a = matrix_from_json(ring, field_of(o.input, "A"));
    const auto ta = theta(ring, t, a);
    doc["theta"] = matrix_to_json(ring, ta);
    doc["theta_inverse"] = matrix_to_json(ring, theta_inverse(ring, t, a));
    std::string text = "Theta_T(A):\n" + matrix_text(ring, ta);
    bool ok = equal(ring, theta_inverse(ring, t, ta), a);
    if (o.input.contains("B")) {
      const auto b = matrix_from_json(ring, o.input["B"]);
      const bool mult = equal(ring, theta(ring, t, mul(ring, a, b)), mul(ring, ta, theta(ring, t, b)));
      doc["multiplicative"] = mult;
      ok = ok && mult;
    }
    return verdict(std::move(doc), text, ok);
  });
}

CommandResult cmd_sdet(const CommandOptions& o) {
  return on_ring(o, [&](const auto& ring) -> CommandResult {
    const auto a = matrix_from_json(ring, field_of(o.input, "A"));
    const auto s = sdet(ring, a);
    return {{{"command", "sdet"}, {"sdet", element_to_json(ring, s)}}, "sdet(A) = " + ring.to_string(s) + "\n", kOk};
  });
}

CommandResult cmd_preadjoint(const CommandOptions& o) {
  return on_ring(o, [&](const auto& ring) -> CommandResult {
    const auto a = matrix_from_json(ring, field_of(o.input, "A"));
    const auto p = preadjoint(ring, a);
    return {{{"command", "preadjoint"}, {"preadjoint", matrix_to_json(ring, p)}}, "A*:\n" + matrix_text(ring, p), kOk};
  });
}

CommandResult cmd_side_det(Side side, const CommandOptions& o) {
  return on_ring(o, [&](const auto& ring) -> CommandResult {
    const auto a = matrix_from_json(ring, field_of(o.input, "A"));
    const auto v = side_det(ring, a, o.k, side);
    const std::string name = side == Side::Right ? "rdet" : "ldet";
    return {{{"command", name}, {"k", o.k}, {name, element_to_json(ring, v)}},
            name + "_(" + std::to_string(o.k) + ")(A) = " + ring.to_string(v) + "\n",
            kOk};
  });
}

CommandResult cmd_charpoly(const CommandOptions& o) {
  return on_ring(o, [&](const auto& ring) -> CommandResult {
    const auto a = matrix_from_json(ring, field_of(o.input, "A"));
    const auto p = charpoly(ring, a, o.k, parse_side(o.side));
    const Integer lead = charpoly_leading_coefficient(a.rows(), o.k);
    const bool lead_ok = ring.equal(p.coeffs.back(), ring.embed(ring.field().from_rational(Rational(lead))));
    Json doc = {{"command", "charpoly"}, {"charpoly", charpoly_to_json(ring, p)}, {"closed_form_leading", lead.get_str()}};
    std::string text = o.side + " characteristic polynomial, k = " + std::to_string(o.k) + ", degree " +
                       std::to_string(p.degree()) + ":\n" + coeffs_text(ring, p.coeffs);
    return verdict(std::move(doc), text, lead_ok);
  });
}

CommandResult cmd_ch_check(const CommandOptions& o) {
  return on_ring(o, [&](const auto& ring) -> CommandResult {
    using R = std::decay_t<decltype(ring)>;
    const auto a = matrix_from_json(ring, field_of(o.input, "A"));
    Json lie;
    if constexpr (std::is_same_v<R, GrassmannAlgebra>) {
      lie = ring.generators() <= 6 ? Json(lie_nilpotent_exhaustive(ring, o.k)) : Json("unchecked");
    } else {
      lie = true;  // commutative: index 1, hence every k
    }
    const auto rep = cayley_hamilton_check(ring, a, o.k, parse_side(o.side));
    Json doc = {{"command", "ch-check"},
                {"side", o.side},
                {"k", o.k},
                {"A", matrix_to_json(ring, a)},
                {"lie_nilpotent_index_k", lie},
                {"charpoly", charpoly_to_json(ring, rep.poly)},
                {"residual", matrix_to_json(ring, rep.residual)}};
    std::string text = "degree " + std::to_string(rep.poly.degree()) + " " + o.side + " Cayley-Hamilton residual:\n" +
                       matrix_text(ring, rep.residual) + "Lie nilpotent of index k: " +
                       (lie.is_string() ? lie.get<std::string>() : lie.dump()) + "\n";
    return verdict(std::move(doc), text, rep.holds);
  });
}

CommandResult cmd_embed(const CommandOptions& o) {
  return on_ring(o, [&](const auto& ring) -> CommandResult {
    const auto spec = spec_for(ring, o);
    const auto r = element_from_json(ring, field_of(o.input, "r"));
    const auto samples = delta_samples(ring, o);
    const auto rep = check_embedding_conditions(spec, std::span(samples));
    const auto img = embed(spec, r);
    const bool member = is_supermatrix(spec, img);
    Json doc = {{"command", "embed"},
                {"image", matrix_to_json(ring, img)},
                {"conditions", conditions_json(rep)},
                {"image_member", member}};
    std::string text = "embedding of r:\n" + matrix_text(ring, img) + "image in M_n(R,delta,T): " +
                       (member ? "true" : "false") + (rep.regime3() ? "" : " (not asserted outside regime 3)") + "\n";
    return verdict(std::move(doc), text, !rep.regime3() || member);
  });
}

CommandResult cmd_conditions(const CommandOptions& o) {
  return on_ring(o, [&](const auto& ring) -> CommandResult {
    const auto spec = spec_for(ring, o);
    const auto samples = delta_samples(ring, o);
    const auto rep = check_embedding_conditions(spec, std::span(samples));
    const Json c = conditions_json(rep);
    return verdict({{"command", "conditions"}, {"conditions", c}}, conditions_text(c), rep.all());
  });
}

CommandResult cmd_membership(const CommandOptions& o) {
  return on_ring(o, [&](const auto& ring) -> CommandResult {
    const auto spec = spec_for(ring, o);
    const auto a = matrix_from_json(ring, field_of(o.input, "A"));
    const auto f = membership_failure(spec, a);
    Json doc = {{"command", "membership"}};
    std::string text;
    if (f) {
      doc["failure"] = {{"i", f->first + 1}, {"j", f->second + 1}};
      text = "delta(a_ij) != t_ij a_ij at (" + std::to_string(f->first + 1) + "," + std::to_string(f->second + 1) +
             ")\n";
    }
    return verdict(std::move(doc), text, !f);
  });
}

ExampleParams example_params(const CommandOptions& o) {
  return {o.n ? o.n : 2, o.d, o.g};
}

CommandResult cmd_sample(const CommandOptions& o) {
  if (!o.seed) throw InvalidArgument("sample needs --seed");
  auto draw = [&](const GrassmannSpec& spec) -> CommandResult {
    const auto a = sample_supermatrix(spec, *o.seed);
    Json doc = {{"command", "sample"}, {"seed", *o.seed}, {"A", matrix_to_json(spec.ring(), a)}};
    return verdict(std::move(doc), matrix_text(spec.ring(), a), is_supermatrix(spec, a));
  };
  if (!o.example.empty()) return draw(example_algebra(o.example, example_params(o)).spec);
  return on_ring(o, [&](const auto& ring) -> CommandResult {
    using R = std::decay_t<decltype(ring)>;
    if constexpr (std::is_same_v<R, GrassmannAlgebra>) {
      return draw(spec_for(ring, o));
    } else {
      throw InvalidArgument("sample needs a Grassmann ring");
    }
  });
}

CommandResult cmd_integrality(const CommandOptions& o) {
  return on_ring(o, [&](const auto& ring) -> CommandResult {
    const unsigned n = static_cast<unsigned>(o.n ? o.n : 2);
    const auto delta = endomorphism_from_json(ring, o.input.value("delta", Json("identity")));
    const auto r = element_from_json(ring, field_of(o.input, "r"));
    const auto samples = delta_samples(ring, o);
    const auto cert = integrality_certificate(ring, delta, r, n, o.k, std::span(samples));
    Json doc = {{"command", "integrality"},
                {"n", n},
                {"k", o.k},
                {"right", rpolynomial_to_json(ring, cert.right_monic)},
                {"left", rpolynomial_to_json(ring, cert.left_monic)},
                {"coefficients_fixed", cert.coefficients_fixed},
                {"right_value", element_to_json(ring, cert.right_value)},
                {"left_value", element_to_json(ring, cert.left_value)}};
    std::string text = "monic right certificate c'_i:\n" + coeffs_text(ring, cert.right_monic) +
                       "monic left certificate c''_i:\n" + coeffs_text(ring, cert.left_monic) +
                       "sum r^i c'_i = " + ring.to_string(cert.right_value) + "\nsum c''_i r^i = " +
                       ring.to_string(cert.left_value) + "\n";
    return verdict(std::move(doc), text, cert.holds());
  });
}

CommandResult cmd_example(const CommandOptions& o) {
  const auto ex = example_algebra(o.example, example_params(o));
  const auto& alg = ex.spec.ring();
  const std::size_t n = ex.spec.size();
  Json labels = Json::array(), dims = Json::array();
  std::string text = "M_" + std::to_string(n) + "(E, " + ex.spec.delta().name + ", T), g = " +
                     std::to_string(alg.generators()) + "\nT:\n" + matrix_text(alg, ex.spec.t().matrix()) + "shape:\n";
  for (std::size_t i = 0; i < n; ++i) {
    Json lrow = Json::array(), drow = Json::array();
    text += "  [";
    for (std::size_t j = 0; j < n; ++j) {
      lrow.push_back(ex.labels(i, j));
      drow.push_back(ex.shape(i, j).dimension());
      text += (j ? ", " : "") + ex.labels(i, j) + " (dim " + std::to_string(ex.shape(i, j).dimension()) + ")";
    }
    text += "]\n";
    labels.push_back(std::move(lrow));
    dims.push_back(std::move(drow));
  }
  Json doc = {{"command", "example"},
              {"name", ex.name},
              {"n", n},
              {"g", alg.generators()},
              {"ring", ring_to_json(alg)},
              {"delta", ex.spec.delta().name},
              {"T", matrix_to_json(alg, ex.spec.t().matrix())},
              {"shape", labels},
              {"dimensions", dims}};
  return verdict(std::move(doc), text, ex.shape_matches());
}

CommandResult cmd_reproduce(const CommandOptions& o) {
  ReproduceOptions ro;
  if (o.seed) ro.seed = *o.seed;
  ro.threads = o.threads;
  const auto results = reproduce_all(ro);
  Json doc = report_to_json(ro.seed, results);
  std::string text;
  for (const auto& r : results) {
    text += "[" + std::string(r.pass ? "PASS" : "FAIL") + "] " + std::to_string(r.id) + " " + r.name + " (" +
            std::to_string(r.checks) + " checks, digest " + r.digest + ")\n";
    for (const auto& f : r.failures) text += "       " + f + "\n";
    std::cerr << "criterion " << r.id << " " << r.name << ": " << r.seconds << " s\n";
  }
  if (o.timings) {
    Json t = Json::object();
    for (const auto& r : results) t[std::to_string(r.id)] = r.seconds;
    doc["timings"] = std::move(t);
  }
  const bool pass = doc["pass"].get<bool>();
  text += verdict_line(pass) + "\n";
  return {std::move(doc), std::move(text), pass ? kOk : kCheckFailed};
}

}  // namespace

CommandResult run_command(const std::string& name, const CommandOptions& o) {
  if (o.k == 0) throw InvalidArgument("--k must be positive");
  if (name.rfind("transitive ", 0) == 0) return cmd_transitive(name.substr(11), o);
  if (name == "theta") return cmd_theta(o);
  if (name == "sdet") return cmd_sdet(o);
  if (name == "preadjoint") return cmd_preadjoint(o);
  if (name == "rdet") return cmd_side_det(Side::Right, o);
  if (name == "ldet") return cmd_side_det(Side::Left, o);
  if (name == "charpoly") return cmd_charpoly(o);
  if (name == "ch-check") return cmd_ch_check(o);
  if (name == "embed") return cmd_embed(o);
  if (name == "conditions") return cmd_conditions(o);
  if (name == "membership") return cmd_membership(o);
  if (name == "sample") return cmd_sample(o);
  if (name == "integrality") return cmd_integrality(o);
  if (name == "example") return cmd_example(o);
  if (name == "reproduce") return cmd_reproduce(o);
  throw InvalidArgument("unknown command '" + name + "'");
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const CapExceeded*>(&e)) return kCapExceeded;
  if (dynamic_cast<const InvariantViolation*>(&e)) return kCheckFailed;
  return kInvalidInput;
}

}  // namespace lienil::tools
