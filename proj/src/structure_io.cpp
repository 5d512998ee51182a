#include <json.hpp>

#include "u1/errors.hpp"
#include "u1/json_io.hpp"
#include "u1/structure.hpp"

namespace u1 {

using nlohmann::json;

Structure parse_structure(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw StructureError(StructureErrorKind::kMalformed, std::string("invalid JSON: ") + e.what());
  }
  return structure_from_json(doc);
}

Structure structure_from_json(const json& doc) {
  auto malformed = [](const std::string& msg) { return StructureError(StructureErrorKind::kMalformed, msg); };
  if (!doc.is_object()) throw malformed("structure document must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "domain" && key != "arities" && key != "relations") throw malformed("unexpected key '" + key + "'");
  }
  if (!doc.contains("domain") || !doc["domain"].is_array()) throw malformed("'domain' must be an array of strings");

  std::vector<std::string> domain;
  for (const auto& e : doc["domain"]) {
    if (!e.is_string()) throw malformed("domain elements must be strings");
    domain.push_back(e.get<std::string>());
  }

  Vocabulary vocab;
  if (doc.contains("arities")) {
    if (!doc["arities"].is_object()) throw malformed("'arities' must be an object");
    for (const auto& [name, arity] : doc["arities"].items()) {
      if (!arity.is_number_integer()) throw malformed("arity of '" + name + "' must be an integer");
      const long long a = arity.get<long long>();
      if (a < 1 || a > 64) {
        throw StructureError(StructureErrorKind::kInvalidArity, "arity of '" + name + "' must be in 1..64");
      }
      try {
        vocab.add(name, static_cast<int>(a));
      } catch (const ValidationError& e) {
        throw StructureError(StructureErrorKind::kInvalidArity, e.what());
      }
    }
  }

  std::map<std::string, std::vector<std::vector<std::string>>> relations;
  if (doc.contains("relations")) {
    if (!doc["relations"].is_object()) throw malformed("'relations' must be an object");
    for (const auto& [name, rows] : doc["relations"].items()) {
      if (!rows.is_array()) throw malformed("relation '" + name + "' must be an array of tuples");
      auto& out = relations[name];
      for (const auto& row : rows) {
        if (!row.is_array()) throw malformed("tuples of '" + name + "' must be arrays");
        std::vector<std::string> t;
        for (const auto& e : row) {
          if (!e.is_string()) throw malformed("tuple components of '" + name + "' must be strings");
          t.push_back(e.get<std::string>());
        }
        out.push_back(std::move(t));
      }
    }
  }
  return Structure(std::move(domain), std::move(vocab), relations);
}

json to_json(const Structure& s) {
  json doc;
  doc["domain"] = s.domain();
  json arities = json::object();
  json relations = json::object();
  for (const auto& [name, rel] : s.relations()) {
    arities[name] = rel.arity();
    json rows = json::array();
    for (const auto& t : rel.tuples()) {
      json row = json::array();
      for (ElementId e : t) row.push_back(s.element(e));
      rows.push_back(std::move(row));
    }
    relations[name] = std::move(rows);
  }
  doc["arities"] = std::move(arities);
  doc["relations"] = std::move(relations);
  return doc;
}

std::string print_structure(const Structure& s) { return to_json(s).dump(2); }

}  // namespace u1
