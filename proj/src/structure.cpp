#include "u1/structure.hpp"

#include <algorithm>

#include "u1/errors.hpp"

namespace u1 {

namespace {

constexpr std::size_t kDenseLimit = std::size_t{1} << 22;

}  // namespace

std::size_t cell_index(std::span<const ElementId> tuple, int domain_size) {
  std::size_t index = 0;
  for (ElementId e : tuple) index = index * static_cast<std::size_t>(domain_size) + static_cast<std::size_t>(e);
  return index;
}

Tuple cell_tuple(std::size_t index, int arity, int domain_size) {
  Tuple t(static_cast<std::size_t>(arity));
  for (int i = arity - 1; i >= 0; --i) {
    t[static_cast<std::size_t>(i)] = static_cast<ElementId>(index % static_cast<std::size_t>(domain_size));
    index /= static_cast<std::size_t>(domain_size);
  }
  return t;
}

std::optional<std::size_t> cell_count(int domain_size, int arity) {
  std::size_t total = 1;
  for (int i = 0; i < arity; ++i) {
    total *= static_cast<std::size_t>(domain_size);
    if (total > (std::size_t{1} << 40)) return std::nullopt;
  }
  return total;
}

Relation::Relation(int arity, int domain_size, TupleSet tuples)
    : arity_(arity), domain_size_(domain_size), tuples_(std::move(tuples)) {
  auto cells = cell_count(domain_size, arity);
  if (cells && *cells <= kDenseLimit) {
    dense_.assign(*cells, false);
    for (const auto& t : tuples_) dense_[cell_index(t, domain_size)] = true;
  }
}

bool Relation::contains(std::span<const ElementId> tuple) const {
  if (!dense_.empty()) return dense_[cell_index(tuple, domain_size_)];
  return tuples_.count(Tuple(tuple.begin(), tuple.end())) > 0;
}

Structure::Structure(std::vector<std::string> domain, Vocabulary vocab,
                     const std::map<std::string, std::vector<std::vector<std::string>>>& relations)
    : domain_(std::move(domain)), vocab_(std::move(vocab)) {
  if (domain_.empty()) throw StructureError(StructureErrorKind::kEmptyDomain, "domain must be nonempty");
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (!index_.emplace(domain_[i], static_cast<ElementId>(i)).second) {
      throw StructureError(StructureErrorKind::kDuplicateElement, "duplicate domain element '" + domain_[i] + "'");
    }
  }
  std::map<std::string, TupleSet> by_id;
  for (const auto& [name, rows] : relations) {
    auto arity = vocab_.arity(name);
    if (!arity) throw StructureError(StructureErrorKind::kUnknownRelation, "relation '" + name + "' has no declared arity");
    TupleSet& out = by_id[name];
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != *arity) {
        throw StructureError(StructureErrorKind::kArityMismatch,
                             "tuple of length " + std::to_string(row.size()) + " in relation '" + name +
                                 "' of arity " + std::to_string(*arity));
      }
      Tuple t;
      for (const auto& e : row) {
        auto it = index_.find(e);
        if (it == index_.end()) {
          throw StructureError(StructureErrorKind::kElementOutsideDomain,
                               "element '" + e + "' in relation '" + name + "' is not in the domain");
        }
        t.push_back(it->second);
      }
      out.insert(std::move(t));
    }
  }
  init(by_id);
}

Structure::Structure(std::vector<std::string> domain, Vocabulary vocab, const std::map<std::string, TupleSet>& relations)
    : domain_(std::move(domain)), vocab_(std::move(vocab)) {
  if (domain_.empty()) throw StructureError(StructureErrorKind::kEmptyDomain, "domain must be nonempty");
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (!index_.emplace(domain_[i], static_cast<ElementId>(i)).second) {
      throw StructureError(StructureErrorKind::kDuplicateElement, "duplicate domain element '" + domain_[i] + "'");
    }
  }
  for (const auto& [name, tuples] : relations) {
    auto arity = vocab_.arity(name);
    if (!arity) throw StructureError(StructureErrorKind::kUnknownRelation, "relation '" + name + "' has no declared arity");
    for (const auto& t : tuples) {
      if (static_cast<int>(t.size()) != *arity) {
        throw StructureError(StructureErrorKind::kArityMismatch, "tuple length differs from arity of '" + name + "'");
      }
      for (ElementId e : t) {
        if (e < 0 || e >= size()) {
          throw StructureError(StructureErrorKind::kElementOutsideDomain, "element id out of range in '" + name + "'");
        }
      }
    }
  }
  init(relations);
}

void Structure::init(const std::map<std::string, TupleSet>& relations) {
  for (const auto& [name, arity] : vocab_) {
    if (arity < 1) throw StructureError(StructureErrorKind::kInvalidArity, "arity of '" + name + "' must be >= 1");
    auto it = relations.find(name);
    relations_.emplace(name, Relation(arity, size(), it == relations.end() ? TupleSet{} : it->second));
  }
}

std::optional<ElementId> Structure::find_element(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Relation& Structure::relation(std::string_view name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) {
    throw StructureError(StructureErrorKind::kUnknownRelation, "structure has no relation '" + std::string(name) + "'");
  }
  return it->second;
}

Structure Structure::with_relations(const Vocabulary& extra, const std::map<std::string, TupleSet>& relations) const {
  Vocabulary vocab = vocab_;
  for (const auto& [name, arity] : extra) {
    if (vocab.contains(name) && *vocab.arity(name) != arity) {
      throw StructureError(StructureErrorKind::kArityMismatch, "conflicting arity for '" + name + "'");
    }
    vocab.add(name, arity);
  }
  std::map<std::string, TupleSet> all;
  for (const auto& [name, rel] : relations_) all[name] = rel.tuples();
  for (const auto& [name, tuples] : relations) all[name] = tuples;
  return Structure(domain_, vocab, all);
}

bool operator==(const Structure& a, const Structure& b) {
  if (a.domain_ != b.domain_ || !(a.vocab_ == b.vocab_)) return false;
  for (const auto& [name, rel] : a.relations_) {
    if (rel.tuples() != b.relation(name).tuples()) return false;
  }
  return true;
}

Structure disjoint_copies(const Structure& s, int n) {
  if (n < 1) throw StructureError(StructureErrorKind::kMalformed, "need at least one copy");
  const int size = s.size();
  std::vector<std::string> domain;
  domain.reserve(static_cast<std::size_t>(size * n));
  for (int c = 1; c <= n; ++c) {
    for (const auto& e : s.domain()) domain.push_back(e + kCopySeparator + std::to_string(c));
  }
  std::map<std::string, TupleSet> relations;
  for (const auto& [name, rel] : s.relations()) {
    TupleSet& out = relations[name];
    for (int c = 0; c < n; ++c) {
      for (Tuple t : rel.tuples()) {
        for (auto& e : t) e += c * size;
        out.insert(std::move(t));
      }
    }
  }
  return Structure(std::move(domain), s.vocabulary(), relations);
}

Structure disjoint_union(const Structure& s1, const Structure& s2) {
  if (!(s1.vocabulary() == s2.vocabulary())) {
    throw StructureError(StructureErrorKind::kVocabularyMismatch, "disjoint union needs identical vocabularies");
  }
  std::vector<std::string> domain;
  for (const auto& e : s1.domain()) domain.push_back(e + kCopySeparator + "1");
  for (const auto& e : s2.domain()) domain.push_back(e + kCopySeparator + "2");
  std::map<std::string, TupleSet> relations;
  for (const auto& [name, rel] : s1.relations()) {
    TupleSet& out = relations[name];
    out = rel.tuples();
    for (Tuple t : s2.relation(name).tuples()) {
      for (auto& e : t) e += s1.size();
      out.insert(std::move(t));
    }
  }
  return Structure(std::move(domain), s1.vocabulary(), relations);
}

ElementSet copy_ids(const ElementSet& ids, int original_size, int copy) {
  ElementSet out;
  out.reserve(ids.size());
  for (ElementId e : ids) out.push_back(e + (copy - 1) * original_size);
  return out;
}

}  // namespace u1
