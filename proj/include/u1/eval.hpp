// Model checking over finite structures.
//
// eval() and satisfaction_set() use the compiled short-circuit evaluator;
// the *_reference variants are the naive enumeration semantics it is tested
// against. satisfaction_set() splits the domain across OpenMP threads,
// satisfaction_set_serial() is the same kernel on one thread.

#ifndef U1_EVAL_HPP
#define U1_EVAL_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "u1/formula.hpp"
#include "u1/structure.hpp"

namespace u1 {

// Partial map from variable names to domain elements.
using Assignment = std::map<std::string, ElementId>;

// "x=a,y=b" with element names of s. Throws EvalError on unknown elements or
// malformed text.
Assignment parse_assignment(const Structure& s, std::string_view text);

// Throws EvalError when a free variable of f is unassigned, an assigned
// element is outside the domain, or an atom disagrees with s's vocabulary.
bool eval(const Structure& s, const Assignment& a, const Formula& f);
bool eval_reference(const Structure& s, const Assignment& a, const Formula& f);

struct SatisfactionSet {
  Formula formula;
  // The free variable; empty for sentences (then elements is Δ or ∅).
  std::optional<std::string> variable;
  ElementSet elements;
};

// Throws EvalError when f has more than one free variable.
SatisfactionSet satisfaction_set(const Structure& s, const Formula& f);
SatisfactionSet satisfaction_set_serial(const Structure& s, const Formula& f);
SatisfactionSet satisfaction_set_reference(const Structure& s, const Formula& f);

// Throws EvalError unless every atom names a relation of s with its arity.
void check_vocabulary(const Structure& s, const Formula& f);

}  // namespace u1

#endif  // U1_EVAL_HPP
