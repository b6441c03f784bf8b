#pragma once

// The acceptance suite: eleven criteria, each a fixed-seed property or
// oracle check with exact comparisons.  Reports carry counts and a digest
// of the computed values but no timings, so a report is byte-identical
// across runs and thread counts.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lienil/json_io.hpp"
#include "lienil/oracle.hpp"

namespace lienil::tools {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few only
  std::string digest;
  Json details = Json::object();
  double seconds = 0;  // wall clock; never part of the report

  Json to_json() const;
};

using OracleSdet =
    std::function<OraclePolynomial(const CommutativePolyRing&, const MatrixOf<CommutativePolyRing>&)>;

CriterionResult criterion_transitivity(std::uint64_t seed);
CriterionResult criterion_theta(std::uint64_t seed);
/// sdet_impl defaults to lienil::sdet; the mutation test passes a broken one.
CriterionResult criterion_oracle(std::uint64_t seed, OracleSdet sdet_impl = {});
CriterionResult criterion_minor_identity(std::uint64_t seed);
CriterionResult criterion_closure(std::uint64_t seed);
CriterionResult criterion_fixed_ring(std::uint64_t seed);
CriterionResult criterion_cayley_hamilton(std::uint64_t seed);
CriterionResult criterion_embedding(std::uint64_t seed);
CriterionResult criterion_integrality(std::uint64_t seed);
CriterionResult criterion_shapes(std::uint64_t seed);
CriterionResult criterion_determinism(std::uint64_t seed);

/// n = 3, k = 2 right Cayley-Hamilton on one sampled member of
/// M_3(E, epsilon, P(1,3)).
CriterionResult slow_cayley_hamilton_n3(std::uint64_t seed);

inline constexpr std::uint64_t kDefaultSeed = 20120607;

struct ReproduceOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t threads = 0;  // 0: library default
  /// Restrict to these criterion ids; empty runs all.
  std::vector<int> only;
};

std::vector<CriterionResult> reproduce_all(const ReproduceOptions& options);

/// {"seed": ..., "criteria": [...], "pass": ...}
Json report_to_json(std::uint64_t seed, const std::vector<CriterionResult>& results);

}  // namespace lienil::tools
