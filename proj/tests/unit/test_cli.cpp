#include <doctest.h>

#include "lienil/errors.hpp"
#include "lienil/dets.hpp"
#include "lienil_tools/commands.hpp"
#include "lienil_tools/reproduce.hpp"

using namespace lienil;
using namespace lienil::tools;

namespace {
CommandOptions with_input(const char* text) {
  CommandOptions o;
  o.input = Json::parse(text);
  return o;
}
}  // namespace

TEST_CASE("transitive check") {
  auto good = run_command("transitive check", with_input(R"({"ring": {"type": "rational"},
      "T": {"entries": [[1, -1], [-1, 1]]}})"));
  CHECK(good.doc["verdict"] == true);
  CHECK(good.exit_code == kOk);
  auto bad = run_command("transitive check", with_input(R"({"ring": {"type": "rational"},
      "T": {"entries": [[1, 2], [3, 1]]}})"));
  CHECK(bad.doc["verdict"] == false);
  CHECK(bad.exit_code == kCheckFailed);
}

TEST_CASE("sdet and preadjoint over Grassmann") {
  auto r = run_command("sdet", with_input(R"({"ring": {"type": "grassmann", "g": 4},
      "A": {"entries": [[{"coeffs": {"1": 1}}, 0], [0, {"coeffs": {"2": 1}}]]}})"));
  // v1 v2 + v2 v1 = 0
  CHECK(r.doc["sdet"] == element_to_json(GrassmannAlgebra(4), GrassmannAlgebra(4).zero()));
  auto p = run_command("preadjoint", with_input(R"({"ring": {"type": "rational"},
      "A": {"entries": [[1, 2], [3, 4]]}})"));
  CHECK(p.doc["preadjoint"]["entries"][0][1] == scalar_to_json(CyclotomicField::rationals().from_int(-2)));
}

TEST_CASE("example shapes through the command layer") {
  CommandOptions o;
  o.example = "5.2";
  o.n = 3;
  o.g = 6;
  const auto r = run_command("example", o);
  CHECK(r.exit_code == kOk);
  CHECK(r.doc["shape"][0][1] == "E_{2,3}");
  CHECK(r.doc["shape"][1][0] == "E_{1,3}");
}

TEST_CASE("sample then ch-check") {
  CommandOptions o;
  o.example = "5.1";
  o.seed = 9;
  o.g = 5;
  const auto s = run_command("sample", o);
  REQUIRE(s.exit_code == kOk);
  CommandOptions c;
  c.input = {{"ring", {{"type", "grassmann"}, {"g", 5}}}, {"A", s.doc["A"]}};
  c.k = 2;
  const auto ch = run_command("ch-check", c);
  CHECK(ch.exit_code == kOk);
  CHECK(ch.doc["lie_nilpotent_index_k"] == true);
  // same seed, same sample
  CHECK(run_command("sample", o).doc == s.doc);
}

TEST_CASE("invalid input and exit codes") {
  CHECK_THROWS_AS(run_command("sdet", with_input(R"({"A": {"entries": [[1]]}})")), InvalidArgument);
  CHECK_THROWS_AS(run_command("sdet", with_input(R"({"ring": {"type": "rational"}, "A": {"entries": [[1, 2]]}})")),
                  InvalidArgument);
  CHECK_THROWS_AS(run_command("frobnicate", CommandOptions{}), InvalidArgument);
  CommandOptions no_seed;
  no_seed.example = "5.1";
  CHECK_THROWS_AS(run_command("sample", no_seed), InvalidArgument);
  CHECK(exit_code_for(InvalidArgument("x")) == kInvalidInput);
  CHECK(exit_code_for(CapExceeded("x")) == kCapExceeded);
  CHECK(exit_code_for(InvariantViolation("x")) == kCheckFailed);
  try {
    run_command("sdet", with_input(R"({"ring": {"type": "rational"},
        "A": {"entries": [[1,0,0,0,0,0],[0,1,0,0,0,0],[0,0,1,0,0,0],[0,0,0,1,0,0],[0,0,0,0,1,0],[0,0,0,0,0,1]]}})"));
    FAIL("expected a cap error");
  } catch (const std::exception& e) {
    CHECK(exit_code_for(e) == kCapExceeded);
  }
}

TEST_CASE("JSON round trips") {
  const GrassmannAlgebra e(5, CyclotomicField::get(3));
  Rng rng(4);
  for (int i = 0; i < 10; ++i) {
    const auto x = e.random_element(rng, 6);
    CHECK(e.equal(element_from_json(e, element_to_json(e, x)), x));
  }
  MatrixOf<GrassmannAlgebra> m(2, 2, e.one());
  m(0, 1) = e.word({1, 3}, -2);
  CHECK(equal(e, matrix_from_json(e, matrix_to_json(e, m)), m));
  const auto ring = ring_from_json(ring_to_json(e));
  REQUIRE(std::holds_alternative<GrassmannAlgebra>(ring));
  CHECK(std::get<GrassmannAlgebra>(ring).generators() == 5);
  CHECK(digest(Json{{"a", 1}}) == digest(Json{{"a", 1}}));
  CHECK(digest(Json{{"a", 1}}) != digest(Json{{"a", 2}}));
}

TEST_CASE("the oracle criterion catches a broken sdet") {
  CHECK(criterion_oracle(1).pass);
  const auto broken = criterion_oracle(1, [](const CommutativePolyRing& ring, const MatrixOf<CommutativePolyRing>& a) {
    auto s = sdet(ring, a);
    return ring.add(s, a(0, 0));
  });
  CHECK_FALSE(broken.pass);
  CHECK_FALSE(broken.failures.empty());
}
