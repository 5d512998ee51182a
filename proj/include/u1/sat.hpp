// Bounded model finding.
//
// Domain sizes are tried in ascending order, with domain d0..d{n-1}. Within
// a size the cells of the relations the sentence mentions are ordered by
// relation name, then by tuple (lexicographic), and interpretations are
// ordered lexicographically over that cell sequence with false < true. The
// search returns the first model in this order, so reports are
// reproducible. Relations of the vocabulary that the sentence does not
// mention are left empty.
//
// The search is a depth-first walk over partial interpretations evaluated
// in three-valued logic: a definite false cuts the subtree, a definite true
// ends it (remaining cells false). With pruning on, a partial
// interpretation A is also cut when some transposition π of two elements
// makes πA lexicographically smaller than every completion of A; the first
// model in the order is never cut, so pruning does not change the result.
//
// The first cells are split into 2^p prefixes searched by OpenMP threads;
// the lowest successful prefix wins.

#ifndef U1_SAT_HPP
#define U1_SAT_HPP

#include <cstdint>
#include <optional>

#include "u1/formula.hpp"
#include "u1/structure.hpp"
#include "u1/vocabulary.hpp"

namespace u1 {

struct SearchOptions {
  bool prune = false;
  // Refuse when n^arity summed over the sentence's relations at n =
  // max_size exceeds this.
  std::size_t cell_limit = 256;
};

struct SearchStatistics {
  // Partial interpretations evaluated.
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

struct SearchReport {
  Formula sentence;
  int bound = 0;
  // Set for FoundModel; empty means NoModelUpTo(bound).
  std::optional<Structure> model;
  SearchStatistics statistics;

  bool found() const { return model.has_value(); }
};

// Throws SearchError on free variables, max_size < 1 or an exceeded cell
// limit, ValidationError when f does not fit vocab.
SearchReport find_model(const Formula& f, const Vocabulary& vocab, int max_size, const SearchOptions& options = {});
// Same search and same report, one thread.
SearchReport find_model_serial(const Formula& f, const Vocabulary& vocab, int max_size,
                               const SearchOptions& options = {});
// Reference: every interpretation in order, evaluated with the naive
// evaluator. At most 20 cells per size; nodes counts structures.
SearchReport find_model_exhaustive(const Formula& f, const Vocabulary& vocab, int max_size);

}  // namespace u1

#endif  // U1_SAT_HPP
