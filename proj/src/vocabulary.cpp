#include "u1/vocabulary.hpp"

#include <algorithm>
#include <cctype>

#include "u1/errors.hpp"

namespace u1 {

Vocabulary::Vocabulary(std::initializer_list<std::pair<const std::string, int>> symbols) {
  for (const auto& [name, arity] : symbols) add(name, arity);
}

void Vocabulary::add(const std::string& name, int arity) {
  if (name == "=") throw ValidationError("'=' is built in and cannot be declared");
  if (!is_identifier(name)) throw ValidationError("invalid relation name '" + name + "'");
  if (arity < 1) {
    throw ValidationError("relation '" + name + "' must have arity >= 1, got " + std::to_string(arity));
  }
  auto [it, inserted] = symbols_.emplace(name, arity);
  if (!inserted && it->second != arity) {
    throw ValidationError("relation '" + name + "' declared with arities " + std::to_string(it->second) +
                          " and " + std::to_string(arity));
  }
}

std::optional<int> Vocabulary::arity(std::string_view name) const {
  auto it = symbols_.find(name);
  if (it == symbols_.end()) return std::nullopt;
  return it->second;
}

int Vocabulary::max_arity() const {
  int result = 0;
  for (const auto& [_, arity] : symbols_) result = std::max(result, arity);
  return result;
}

Vocabulary Vocabulary::merged(const Vocabulary& other) const {
  Vocabulary result = *this;
  for (const auto& [name, arity] : other) result.add(name, arity);
  return result;
}

bool is_identifier(std::string_view text) {
  if (text.empty() || !std::isalpha(static_cast<unsigned char>(text.front()))) return false;
  return std::all_of(text.begin(), text.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace u1
