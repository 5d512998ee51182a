// First-order formulae with quantifier blocks and counting quantifiers.
//
// Formulas are immutable trees with shared subterms; copying a Formula is a
// reference-count bump. Quantifier blocks carry a nonempty, duplicate-free
// variable list. Arity agreement with a vocabulary is checked by validate(),
// not at construction.

#ifndef U1_FORMULA_HPP
#define U1_FORMULA_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "u1/vocabulary.hpp"

namespace u1 {

enum class FormulaKind : std::uint8_t {
  kTop,
  kBottom,
  kAtom,
  kEquals,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kExists,
  kForall,
  kCount,
};

// Comparator of a counting quantifier E[>=k], E[<=k], E[=k].
enum class Comparator : std::uint8_t { kAtLeast, kAtMost, kExactly };

const char* to_string(Comparator cmp);
bool compare_count(Comparator cmp, std::size_t count, unsigned bound);

// Child indices from the root; the body of a quantifier is child 0.
using Path = std::vector<int>;

class Formula {
 public:
  static Formula top();
  static Formula bottom();
  static Formula atom(std::string relation, std::vector<std::string> args);
  static Formula equals(std::string lhs, std::string rhs);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  // Throw ValidationError on an empty or duplicated variable list.
  static Formula exists(std::vector<std::string> vars, Formula body);
  static Formula forall(std::vector<std::string> vars, Formula body);
  static Formula count(Comparator cmp, unsigned bound, std::string var, Formula body);

  FormulaKind kind() const;
  bool is(FormulaKind k) const { return kind() == k; }
  bool is_block() const { return is(FormulaKind::kExists) || is(FormulaKind::kForall); }
  bool is_quantifier() const { return is_block() || is(FormulaKind::kCount); }
  bool is_connective() const;

  // Atom relation name.
  const std::string& relation() const;
  // Atom arguments, the two sides of an equality, the block variables, or the
  // single counted variable.
  const std::vector<std::string>& variables() const;
  Comparator comparator() const;
  unsigned bound() const;

  std::size_t num_children() const;
  const Formula& child(std::size_t i) const;
  const Formula& body() const { return child(0); }

  // Structural equality (same tree shape, names, bounds).
  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

  // Identity of the shared node; used for memoization.
  const void* id() const { return node_.get(); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Left-nested conjunction/disjunction; the empty list yields top/bottom.
Formula conjunction_of(std::span<const Formula> parts);
Formula disjunction_of(std::span<const Formula> parts);

std::set<std::string> free_variables(const Formula& f);
bool is_sentence(const Formula& f);
// Every variable name occurring anywhere (free, bound, quantified).
std::set<std::string> all_variables(const Formula& f);
std::size_t formula_size(const Formula& f);
std::size_t formula_depth(const Formula& f);
bool has_counting(const Formula& f);

// Subformula lookup and replacement by path; throw std::out_of_range.
const Formula& subformula_at(const Formula& f, std::span<const int> path);
Formula replace_at(const Formula& f, std::span<const int> path, const Formula& replacement);

// Checks atom arities (and relation membership) against vocab.
void validate(const Formula& f, const Vocabulary& vocab);
// Vocabulary read off the atoms; throws ValidationError on inconsistent use.
Vocabulary infer_vocabulary(const Formula& f);

// Grammar:
//   f ::= true | false | NAME '(' var (',' var)* ')' | var '=' var | '~' f
//       | '(' f ('&'|'|'|'->') f ')' | ('E'|'A') var+ '.' f
//       | 'E[' ('>='|'<='|'=') INT ']' var '.' f
// A parenthesized group may chain one of '&' or '|' (left-nested) and may
// also wrap a single formula. Throws ParseError with line/column.
Formula parse_formula(std::string_view text);
// As above, then validate() against vocab.
Formula parse_formula(std::string_view text, const Vocabulary& vocab);

// Canonical text: binary connectives fully parenthesized, single spaces.
// parse_formula(print_formula(f)) == f.
std::string print_formula(const Formula& f);

}  // namespace u1

#endif  // U1_FORMULA_HPP
