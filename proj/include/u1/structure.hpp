// Finite relational structures.
//
// Elements are opaque strings, addressed internally by their position in the
// domain list. Every relation keeps a sorted tuple list and, when the cell
// count n^arity is small enough, a dense membership table.

#ifndef U1_STRUCTURE_HPP
#define U1_STRUCTURE_HPP

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "u1/vocabulary.hpp"

namespace u1 {

using ElementId = int;
using Tuple = std::vector<ElementId>;
using TupleSet = std::set<Tuple>;
// Sorted, duplicate-free element ids.
using ElementSet = std::vector<ElementId>;

// Row-major index of a tuple in {0..n-1}^arity.
std::size_t cell_index(std::span<const ElementId> tuple, int domain_size);
Tuple cell_tuple(std::size_t index, int arity, int domain_size);
// n^arity, or nullopt on overflow past 2^40.
std::optional<std::size_t> cell_count(int domain_size, int arity);

class Relation {
 public:
  Relation(int arity, int domain_size, TupleSet tuples);

  int arity() const { return arity_; }
  const TupleSet& tuples() const { return tuples_; }
  std::size_t size() const { return tuples_.size(); }
  bool contains(std::span<const ElementId> tuple) const;

 private:
  int arity_;
  int domain_size_;
  TupleSet tuples_;
  std::vector<bool> dense_;
};

class Structure {
 public:
  // Element-name form, as read from a structure document. Relations of the
  // vocabulary that are missing from the map are empty. Throws StructureError.
  Structure(std::vector<std::string> domain, Vocabulary vocab,
            const std::map<std::string, std::vector<std::vector<std::string>>>& relations);
  // Element-id form used by generators.
  Structure(std::vector<std::string> domain, Vocabulary vocab, const std::map<std::string, TupleSet>& relations);

  int size() const { return static_cast<int>(domain_.size()); }
  const std::vector<std::string>& domain() const { return domain_; }
  const std::string& element(ElementId id) const { return domain_.at(static_cast<std::size_t>(id)); }
  std::optional<ElementId> find_element(std::string_view name) const;
  const Vocabulary& vocabulary() const { return vocab_; }

  bool has_relation(std::string_view name) const { return relations_.find(name) != relations_.end(); }
  // Throws StructureError(kUnknownRelation).
  const Relation& relation(std::string_view name) const;
  const std::map<std::string, Relation, std::less<>>& relations() const { return relations_; }
  bool holds(std::string_view name, std::span<const ElementId> tuple) const { return relation(name).contains(tuple); }

  // Same domain and vocabulary, extra relations added (or replaced).
  Structure with_relations(const Vocabulary& extra, const std::map<std::string, TupleSet>& relations) const;

  friend bool operator==(const Structure& a, const Structure& b);

 private:
  void init(const std::map<std::string, TupleSet>& relations);

  std::vector<std::string> domain_;
  std::unordered_map<std::string, ElementId> index_;
  Vocabulary vocab_;
  std::map<std::string, Relation, std::less<>> relations_;
};

// Separator between an element name and its copy tag in disjoint unions.
inline constexpr char kCopySeparator = '#';

// Tagged union: elements of s1 become "e#1", of s2 "e#2". Throws
// StructureError(kVocabularyMismatch) when the vocabularies differ.
Structure disjoint_union(const Structure& s1, const Structure& s2);
// n >= 1 tagged copies "e#1" ... "e#n" of s.
Structure disjoint_copies(const Structure& s, int n);
// Element ids of copy `copy` (1-based) of an id set of the original.
ElementSet copy_ids(const ElementSet& ids, int original_size, int copy);

// Structure document:
//   {"domain": [...], "arities": {"R": 2, ...}, "relations": {"R": [["a","b"], ...]}}
Structure parse_structure(std::string_view json_text);
std::string print_structure(const Structure& s);

}  // namespace u1

#endif  // U1_STRUCTURE_HPP
