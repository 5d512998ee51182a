#ifndef U1_VOCABULARY_HPP
#define U1_VOCABULARY_HPP

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace u1 {

// Finite relational vocabulary: relation name -> arity >= 1. Equality is
// built in and never a member.
class Vocabulary {
 public:
  using Map = std::map<std::string, int, std::less<>>;

  Vocabulary() = default;
  Vocabulary(std::initializer_list<std::pair<const std::string, int>> symbols);

  // Throws ValidationError on arity < 1, the reserved name "=", or a
  // conflicting redeclaration.
  void add(const std::string& name, int arity);

  std::optional<int> arity(std::string_view name) const;
  bool contains(std::string_view name) const { return symbols_.find(name) != symbols_.end(); }
  bool empty() const { return symbols_.empty(); }
  std::size_t size() const { return symbols_.size(); }
  int max_arity() const;

  const Map& symbols() const { return symbols_; }
  auto begin() const { return symbols_.begin(); }
  auto end() const { return symbols_.end(); }

  // Union of two vocabularies; throws ValidationError on conflicting arities.
  Vocabulary merged(const Vocabulary& other) const;

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

 private:
  Map symbols_;
};

bool is_identifier(std::string_view text);

}  // namespace u1

#endif  // U1_VOCABULARY_HPP
