#include "bgcolor/report.hpp"

#include <variant>

namespace bgcolor {

const char* to_string(Branch b) {
  switch (b) {
    case Branch::kTrivial:
      return "trivial";
    case Branch::kPacking:
      return "packing";
    case Branch::kAlgebraic:
      return "algebraic";
  }
  return "unknown";
}

namespace {

nlohmann::json witness_json(const Witness& w) {
  if (const auto* cover = std::get_if<CliqueCover>(&w)) {
    nlohmann::json cliques = nlohmann::json::array();
    for (const auto& c : cover->cliques) {
      nlohmann::json members = nlohmann::json::array();
      for (Vertex v : c) members.push_back(v + 1);
      cliques.push_back(std::move(members));
    }
    return {{"kind", "cover"}, {"size", cover->size()}, {"cliques", std::move(cliques)}};
  }
  const auto& col = std::get<Coloring>(w);
  nlohmann::json colors = nlohmann::json::array();
  for (int c : col.color) colors.push_back(c + 1);
  return {{"kind", "coloring"}, {"palette_size", col.palette_size}, {"colors", std::move(colors)}};
}

}  // namespace

nlohmann::json to_json(const SolveReport& r) {
  nlohmann::json j = {
      {"problem", r.problem},
      {"n", r.n},
      {"k_or_target", r.k_or_target},
      {"target", r.target},
      {"decision", r.decision ? "yes" : "no"},
      {"branch", to_string(r.branch)},
      {"packing_size", r.packing_size},
      {"modulator_size", r.modulator_size},
      {"seed", r.seed},
      {"repeats", r.repeats},
      {"types_tried", r.types_tried},
      {"elapsed_ms", r.elapsed_ms},
  };
  if (r.witness) j["witness"] = witness_json(*r.witness);
  if (!r.params.empty()) j["params"] = r.params;
  return j;
}

}  // namespace bgcolor
