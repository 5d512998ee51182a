// Syntactic membership in U1(wo=), FU1, U1, UC1 and FO2.
//
// A quantifier block E x1..xk. phi is legal when phi is a Boolean combination
// of (i) fragment members whose free variables lie in Y = {x1..xk} plus at
// most one outer variable, and (ii) X-atoms, all over one shared variable
// set X ⊆ Y. Leaves are found by descending through ~, &, |, -> only; a
// universal block is the dual of an existential one. Violations are
// reported with the path of the offending subformula.

#ifndef U1_FRAGMENTS_HPP
#define U1_FRAGMENTS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "u1/formula.hpp"

namespace u1 {

enum class FragmentId { kU1WithoutEquality, kFU1, kU1, kUC1, kFO2 };

enum class ViolationKind {
  kUniformity,
  kOneDimensionality,
  kEqualityPlacement,
  kCountingQuantifier,
  kVariableCount,
  kArity,
};

const char* to_string(FragmentId id);
const char* to_string(ViolationKind kind);
// Accepts the CLI spellings u1woeq, fu1, u1, uc1, fo2 (case-insensitive).
std::optional<FragmentId> parse_fragment_id(std::string_view name);

struct Violation {
  ViolationKind kind;
  Path path;
  std::string message;
};

struct Diagnostic {
  FragmentId fragment;
  std::vector<Violation> violations;

  bool verdict() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

Diagnostic check_fragment(const Formula& f, FragmentId fragment);
// At most two variable names, single-variable blocks, no counting.
Diagnostic check_fo2(const Formula& f);

}  // namespace u1

#endif  // U1_FRAGMENTS_HPP
