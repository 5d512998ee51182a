// DLR_reg: n-ary roles with ⊤n, selection ($i/n:C), negation relative to ⊤n
// and intersection; binary relations built from ε, projections R|$i,$j,
// composition, union and reflexive-transitive closure; concepts with
// ∃E.C, ∃[$i]R and number restrictions (<=k [$i] R).
//
// ⊤n is realized in one of two ways. TopMode::kFull takes (⊤n)^I = Δ^n.
// TopMode::kExplicit reads ⊤n from relations named top<n> ("top2", ...)
// in the structure, which must cover every relation of arity n.
//
// (<=k [$i] R) counts tuples: u is in it iff at most k tuples of R^I have u
// at position i.

#ifndef U1_DLR_HPP
#define U1_DLR_HPP

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "u1/structure.hpp"
#include "u1/vocabulary.hpp"

namespace u1 {

enum class TopMode { kFull, kExplicit };

// "top<n>": the relation holding ⊤n in explicit mode.
std::string top_relation_name(int n);
bool is_top_relation_name(std::string_view name);

class DlrConcept;
class DlrRole;
class DlrBinRel;

enum class DlrRoleKind { kTop, kAtomic, kSelect, kNot, kAnd };
enum class DlrBinRelKind { kEpsilon, kProject, kCompose, kUnion, kStar };
enum class DlrConceptKind { kTop, kAtomic, kNot, kAnd, kExists, kExistsProject, kAtMost };

class DlrRole {
 public:
  static DlrRole top(int n);
  static DlrRole atomic(std::string name);
  // ($i/n : C), 1 <= i <= n.
  static DlrRole select(int i, int n, DlrConcept c);
  static DlrRole negation(DlrRole r);
  static DlrRole intersection(DlrRole a, DlrRole b);

  DlrRoleKind kind() const;
  bool is(DlrRoleKind k) const { return kind() == k; }
  const std::string& name() const;
  // ⊤n and selection: n. Selection: the position i.
  int width() const;
  int position() const;
  const DlrConcept& filler() const;
  std::size_t num_children() const;
  const DlrRole& child(std::size_t i) const;

  friend bool operator==(const DlrRole& a, const DlrRole& b);

 private:
  struct Node;
  explicit DlrRole(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class DlrBinRel {
 public:
  static DlrBinRel epsilon();
  // R|$i,$j.
  static DlrBinRel project(DlrRole r, int i, int j);
  static DlrBinRel compose(DlrBinRel a, DlrBinRel b);
  static DlrBinRel union_of(DlrBinRel a, DlrBinRel b);
  static DlrBinRel star(DlrBinRel e);

  DlrBinRelKind kind() const;
  bool is(DlrBinRelKind k) const { return kind() == k; }
  const DlrRole& role() const;
  int first() const;
  int second() const;
  std::size_t num_children() const;
  const DlrBinRel& child(std::size_t i) const;

  friend bool operator==(const DlrBinRel& a, const DlrBinRel& b);

 private:
  struct Node;
  explicit DlrBinRel(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class DlrConcept {
 public:
  static DlrConcept top();
  static DlrConcept atomic(std::string name);
  static DlrConcept negation(DlrConcept c);
  static DlrConcept conjunction(DlrConcept a, DlrConcept b);
  static DlrConcept exists(DlrBinRel e, DlrConcept c);
  // ∃[$i]R.
  static DlrConcept exists_project(int i, DlrRole r);
  // (<=k [$i] R).
  static DlrConcept at_most(unsigned k, int i, DlrRole r);
  // a ⊔ b = ¬(¬a ⊓ ¬b).
  static DlrConcept disjunction(DlrConcept a, DlrConcept b);

  DlrConceptKind kind() const;
  bool is(DlrConceptKind k) const { return kind() == k; }
  const std::string& name() const;
  int position() const;
  unsigned bound() const;
  const DlrRole& role() const;
  const DlrBinRel& relation() const;
  // Operands of ¬ and ⊓, or the filler of ∃E.C.
  std::size_t num_children() const;
  const DlrConcept& child(std::size_t i) const;

  friend bool operator==(const DlrConcept& a, const DlrConcept& b);

 private:
  struct Node;
  explicit DlrConcept(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// max(2, largest declared arity), ignoring top<n> relations.
int dlr_n_max(const Vocabulary& vocab);

// Throws ValidationError on unknown atomic roles, unary roles, mismatched
// intersection arities, or positions out of range.
int dlr_role_arity(const DlrRole& r, const Vocabulary& vocab);
void validate(const DlrConcept& c, const Vocabulary& vocab);
void validate(const DlrBinRel& e, const Vocabulary& vocab);
Vocabulary infer_vocabulary(const DlrConcept& c);

// Explicit mode only: each top<n> relation has arity n and contains every
// other relation of arity n. Throws StructureError.
void check_top_coverage(const Structure& s);

TupleSet dlr_role_extension(const Structure& s, const DlrRole& r, TopMode mode = TopMode::kFull);
// Pairs (u, v) as 2-tuples.
TupleSet dlr_binrel_extension(const Structure& s, const DlrBinRel& e, TopMode mode = TopMode::kFull);
ElementSet dlr_concept_extension(const Structure& s, const DlrConcept& c, TopMode mode = TopMode::kFull);

// s with Δ^n materialized as top<n> for n = 2..n_max, so that explicit-mode
// evaluation of the result agrees with full-mode evaluation of s.
Structure with_full_tops(const Structure& s, int n_max);

bool has_star(const DlrConcept& c);
bool has_at_most(const DlrConcept& c);
bool has_compose_or_union(const DlrConcept& c);
// Largest n of any ⊤n or selection ($i/n:C) occurring in c (0 if none).
int max_top_width(const DlrConcept& c);
std::size_t concept_size(const DlrConcept& c);

// Grammar:
//   role    ::= top<n> | NAME | '($' i '/' n ':' concept ')' | '~' role
//             | '(' role '&' role ')'
//   binrel  ::= 'eps' | role '|$' i ',$' j | '(' binrel 'o' binrel ')'
//             | '(' binrel 'u' binrel ')' | binrel '*'
//             | role                        (short for role|$1,$2)
//   concept ::= top1 | NAME | '~' concept | '(' concept '&' concept ')'
//             | 'exists' binrel '.' concept | 'exists[$' i ']' role
//             | '(<=' k '[$' i ']' role ')' | '(' concept ')'
// Throws ParseError.
DlrConcept parse_dlr_concept(std::string_view text);
DlrRole parse_dlr_role(std::string_view text);
DlrBinRel parse_dlr_binrel(std::string_view text);
std::string print_dlr_concept(const DlrConcept& c);
std::string print_dlr_role(const DlrRole& r);
std::string print_dlr_binrel(const DlrBinRel& e);

}  // namespace u1

#endif  // U1_DLR_HPP
