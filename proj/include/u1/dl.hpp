// DL_FU1: n-ary roles with ε, role negation/intersection and surjection
// application, and concepts with n-ary existential restriction.
//
// Semantics over a Structure: atomic concepts are its unary relations,
// atomic roles its relations of arity >= 2.
//   (σR)^I = {(u1..um) | (u_σ(1)..u_σ(k)) ∈ R^I}   for σ:[k]→[m], arity(R)=k
//   (¬R)^I = Δ^arity(R) \ R^I
//   (∃R.(C1..Cn))^I = {u | some (u,v1..vn) ∈ R^I with vi ∈ Ci^I}
// Intersections of different arities and applications of σ to a role of
// the wrong arity denote the empty relation, of arity 2.

#ifndef U1_DL_HPP
#define U1_DL_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "u1/structure.hpp"
#include "u1/vocabulary.hpp"

namespace u1 {

// σ:[k]→[m] onto, 2 <= m <= k, written perm[σ(1),...,σ(k)] (1-based).
class Surjection {
 public:
  // Throws ValidationError unless the values hit exactly 1..m with m >= 2.
  explicit Surjection(std::vector<int> values);

  int source_arity() const { return static_cast<int>(values_.size()); }
  int target_arity() const { return target_; }
  const std::vector<int>& values() const { return values_; }
  // σ(j) for 1-based j.
  int operator()(int j) const { return values_.at(static_cast<std::size_t>(j - 1)); }
  bool is_permutation() const { return target_ == source_arity(); }
  // Only for permutations; throws ValidationError otherwise.
  Surjection inverse() const;

  friend bool operator==(const Surjection&, const Surjection&) = default;

 private:
  std::vector<int> values_;
  int target_ = 0;
};

enum class RoleKind { kAtomic, kEpsilon, kNot, kAnd, kApply };

class Role {
 public:
  static Role atomic(std::string name);
  static Role epsilon();
  static Role negation(Role r);
  static Role intersection(Role a, Role b);
  static Role apply(Surjection sigma, Role r);
  // Derived: U = ¬(ε ∩ ¬ε) and r1 ∪ r2 = ¬(¬r1 ∩ ¬r2).
  static Role universal();
  static Role union_of(Role a, Role b);

  RoleKind kind() const;
  bool is(RoleKind k) const { return kind() == k; }
  const std::string& name() const;
  const Surjection& surjection() const;
  std::size_t num_children() const;
  const Role& child(std::size_t i) const;

  friend bool operator==(const Role& a, const Role& b);

 private:
  struct Node;
  explicit Role(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

enum class ConceptKind { kTop, kAtomic, kNot, kAnd, kExists };

class Concept {
 public:
  static Concept top();
  static Concept atomic(std::string name);
  static Concept negation(Concept c);
  static Concept conjunction(Concept a, Concept b);
  static Concept exists(Role r, std::vector<Concept> args);
  // Derived: ⊥ = ¬⊤, a ⊔ b = ¬(¬a ⊓ ¬b).
  static Concept bottom();
  static Concept disjunction(Concept a, Concept b);

  ConceptKind kind() const;
  bool is(ConceptKind k) const { return kind() == k; }
  const std::string& name() const;
  // The role of an existential restriction.
  const Role& role() const;
  // Operands of ¬ and ⊓, or the argument concepts of ∃R.(...).
  std::size_t num_children() const;
  const Concept& child(std::size_t i) const;

  friend bool operator==(const Concept& a, const Concept& b);

 private:
  struct Node;
  explicit Concept(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Throws ValidationError on unknown atomic roles or ones of arity < 2.
int role_arity(const Role& r, const Vocabulary& vocab);
// Role arities, unary atomic concepts, ∃R.(C1..Cn) with n = arity(R) - 1.
void validate(const Concept& c, const Vocabulary& vocab);
// Arities read off ∃R.(...) argument counts and surjection sources.
Vocabulary infer_vocabulary(const Concept& c);

TupleSet role_extension(const Structure& s, const Role& r);
ElementSet concept_extension(const Structure& s, const Concept& c);

// Grammar:
//   concept ::= top | NAME | '~' concept | '(' concept '&' concept ')'
//             | 'exists' role '.' '(' concept (',' concept)* ')'
//   role    ::= NAME | 'eps' | '~' role | '(' role '&' role ')'
//             | 'perm[' INT (',' INT)* ']' role
// Throws ParseError.
Concept parse_concept(std::string_view text);
Role parse_role(std::string_view text);
std::string print_concept(const Concept& c);
std::string print_role(const Role& r);

std::size_t concept_size(const Concept& c);

}  // namespace u1

#endif  // U1_DL_HPP
