#include "u1/json_io.hpp"

namespace u1 {

using nlohmann::json;

json to_json(const Diagnostic& d) {
  json out;
  out["fragment"] = to_string(d.fragment);
  out["verdict"] = d.verdict();
  json violations = json::array();
  for (const auto& v : d.violations) {
    violations.push_back({{"kind", to_string(v.kind)}, {"path", v.path}, {"message", v.message}});
  }
  out["violations"] = std::move(violations);
  return out;
}

json to_json(const SearchReport& r, bool with_timing) {
  json out;
  out["sentence"] = print_formula(r.sentence);
  out["bound"] = r.bound;
  if (r.model) {
    out["outcome"] = "FoundModel";
    out["size"] = r.model->size();
    out["model"] = to_json(*r.model);
  } else {
    out["outcome"] = "NoModelUpTo";
  }
  json stats;
  stats["nodes"] = r.statistics.nodes;
  if (with_timing) stats["elapsed_seconds"] = r.statistics.elapsed_seconds;
  out["statistics"] = std::move(stats);
  return out;
}

json to_json(const ExperimentResult& r) {
  json out;
  out["name"] = r.name;
  out["claim"] = r.claim;
  out["pass"] = r.pass;
  json structures = json::array();
  for (std::size_t i = 0; i < r.structure_names.size(); ++i) {
    structures.push_back({{"name", r.structure_names[i]}, {"size", r.structure_sizes.at(i)}});
  }
  out["structures"] = std::move(structures);
  json probes = json::array();
  for (const auto& p : r.probes) {
    probes.push_back(
        {{"label", p.label}, {"query", p.query}, {"expected", p.expected}, {"observed", p.observed}, {"pass", p.pass}});
  }
  out["probes"] = std::move(probes);
  return out;
}

}  // namespace u1
