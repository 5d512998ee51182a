// Translations between FU1, DL_FU1 and star-free DLR_reg.
//
// All translations are checked against the semantics by the test suite
// (exhaustively over small interpretations); outputs are not minimized.

#ifndef U1_TRANSLATE_HPP
#define U1_TRANSLATE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "u1/dl.hpp"
#include "u1/dlr.hpp"
#include "u1/formula.hpp"

namespace u1 {

// One disjunct of ∃ȳ(φ1 ∨ ... ∨ φm) after the quantifier prefix is
// distributed: higher-arity literals over a shared variable set, unary
// subformulas per variable, and closed subformulas.
struct DnfDisjunct {
  // Sorted shared variable set X of the higher literals (empty if none).
  std::vector<std::string> shared;
  // Literals (atoms or negated atoms, equalities in FU1) over exactly X.
  std::vector<Formula> higher;
  // U1 equality literals whose variables differ from X.
  std::vector<Formula> equalities;
  // χ_u(u): conjunction of the literals whose only free variable is u. Every
  // member of X has an entry (⊤ if it had no literal).
  std::vector<std::pair<std::string, Formula>> unary;
  std::vector<Formula> closed;
};

struct DnfBlock {
  std::vector<std::string> variables;
  std::optional<std::string> outer;
  std::vector<DnfDisjunct> disjuncts;
};

// f must be an existential block whose body's leaves respect uniformity
// within each disjunct and one-dimensionality. Throws FragmentGateError.
DnfBlock to_dnf_block(const Formula& f);
// ∃ȳ D1 ∨ ... ∨ ∃ȳ Dm.
Formula to_formula(const DnfBlock& b);

// f must be FU1 with at most one free variable; the concept denotes
// {d | f[x ↦ d]} (Δ or ∅ for sentences). Throws FragmentGateError.
Concept fu1_to_dl(const Formula& f);

// Standard translation with free variable var; quantified variables are
// fresh (y1, y2, ...). The result is in FU1. Throws ValidationError when c
// does not fit vocab.
Formula dl_to_fu1(const Concept& c, const Vocabulary& vocab, const std::string& var = "x");

// Distributes composition over union and expands ∃(E1 ∪ E2).C and
// ∃(E1 ∘ E2).C. Throws FragmentGateError on Kleene star or number
// restrictions.
DlrConcept eliminate_comp_union(const DlrConcept& c);

// Star-free, restriction-free DLR_reg to FU1 (composition and union are
// eliminated first). Under TopMode::kExplicit ⊤n becomes the atom
// top<n>(...); under kFull it is ⊤. Throws FragmentGateError or
// ValidationError.
Formula dlr0_to_fu1(const DlrConcept& c, const Vocabulary& vocab, TopMode mode = TopMode::kFull,
                    const std::string& var = "x");

}  // namespace u1

#endif  // U1_TRANSLATE_HPP
