#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "bgcolor/structures.hpp"
#include "json.hpp"

namespace bgcolor {

enum class Branch { kTrivial, kPacking, kAlgebraic };

[[nodiscard]] const char* to_string(Branch b);

/// Outcome of one solver or pipeline run. An attached witness always
/// verifies against the graph of the problem it answers.
struct SolveReport {
  std::string problem;
  int n = 0;
  long long k_or_target = 0;
  /// Number of colors / cliques the decision refers to.
  long long target = 0;
  bool decision = false;
  Branch branch = Branch::kTrivial;
  int packing_size = -1;
  int modulator_size = -1;
  std::optional<Witness> witness;
  std::uint64_t seed = 0;
  int repeats = 0;
  int types_tried = 0;
  double elapsed_ms = 0.0;
  /// Pipeline-specific structural quantities (omega, mu_bar, alpha, ...).
  std::map<std::string, long long> params;
};

/// JSON object {problem, n, k_or_target, target, decision, branch,
/// packing_size, modulator_size, witness?, seed, repeats, types_tried,
/// elapsed_ms, params}. Vertex labels in witnesses are 1-indexed.
[[nodiscard]] nlohmann::json to_json(const SolveReport& r);

}  // namespace bgcolor
