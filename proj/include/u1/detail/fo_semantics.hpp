// Reference first-order semantics, generic in the truth algebra.
//
// An interpretation type I supplies
//   using Value = ...;
//   int size() const;                                   // |Δ|
//   Value truth(bool b) const;
//   Value neg(const Value&) const;
//   Value conj(const Value&, const Value&) const;
//   Value disj(const Value&, const Value&) const;
//   Value atom(std::string_view rel, std::span<const ElementId> t) const;
//   Value at_least(const std::vector<Value>& vals, unsigned k) const;
//   bool same(const Value&, const Value&) const;        // semantic identity
// With Value = bool this is plain Tarskian truth over a Structure. Tests
// instantiate it over BDDs, one variable per cell, to cover every
// interpretation of a vocabulary at once.
//
// Evaluation is naive enumeration: every quantifier visits all of Δ^k and
// nothing short-circuits.

#ifndef U1_DETAIL_FO_SEMANTICS_HPP
#define U1_DETAIL_FO_SEMANTICS_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "u1/errors.hpp"
#include "u1/formula.hpp"
#include "u1/structure.hpp"

namespace u1::detail {

template <class I>
typename I::Value count_value(const I& in, Comparator cmp, unsigned k, const std::vector<typename I::Value>& vals) {
  switch (cmp) {
    case Comparator::kAtLeast: return in.at_least(vals, k);
    case Comparator::kAtMost: return in.neg(in.at_least(vals, k + 1));
    case Comparator::kExactly: return in.conj(in.at_least(vals, k), in.neg(in.at_least(vals, k + 1)));
  }
  return in.truth(false);
}

// Calls fn for every tuple of {0..n-1}^k in lexicographic order.
template <class Fn>
void for_each_tuple(int n, std::size_t k, Fn&& fn) {
  Tuple t(k, 0);
  while (true) {
    fn(static_cast<const Tuple&>(t));
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++t[i] < n) break;
      t[i] = 0;
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

template <class I>
class FoReference {
 public:
  using Value = typename I::Value;
  using Env = std::map<std::string, ElementId>;

  explicit FoReference(const I& in) : in_(in) {}

  Value eval(const Formula& f, Env& env) const {
    switch (f.kind()) {
      case FormulaKind::kTop: return in_.truth(true);
      case FormulaKind::kBottom: return in_.truth(false);
      case FormulaKind::kAtom: {
        Tuple t;
        t.reserve(f.variables().size());
        for (const auto& v : f.variables()) t.push_back(lookup(env, v));
        return in_.atom(f.relation(), t);
      }
      case FormulaKind::kEquals:
        return in_.truth(lookup(env, f.variables()[0]) == lookup(env, f.variables()[1]));
      case FormulaKind::kNot: return in_.neg(eval(f.child(0), env));
      case FormulaKind::kAnd: return in_.conj(eval(f.child(0), env), eval(f.child(1), env));
      case FormulaKind::kOr: return in_.disj(eval(f.child(0), env), eval(f.child(1), env));
      case FormulaKind::kImplies: return in_.disj(in_.neg(eval(f.child(0), env)), eval(f.child(1), env));
      case FormulaKind::kExists:
      case FormulaKind::kForall: {
        const bool exists = f.is(FormulaKind::kExists);
        Value acc = in_.truth(!exists);
        with_bound(f.variables(), env, [&] {
          Value v = eval(f.body(), env);
          acc = exists ? in_.disj(acc, v) : in_.conj(acc, v);
        });
        return acc;
      }
      case FormulaKind::kCount: {
        std::vector<Value> vals;
        with_bound(f.variables(), env, [&] { vals.push_back(eval(f.body(), env)); });
        return count_value(in_, f.comparator(), f.bound(), vals);
      }
    }
    return in_.truth(false);
  }

 private:
  static ElementId lookup(const Env& env, const std::string& v) {
    auto it = env.find(v);
    if (it == env.end()) throw EvalError("variable '" + v + "' is free and unassigned");
    return it->second;
  }

  // Runs fn once per assignment of the block variables, restoring env after.
  template <class Fn>
  void with_bound(const std::vector<std::string>& vars, Env& env, Fn&& fn) const {
    std::vector<std::optional<ElementId>> saved;
    for (const auto& v : vars) {
      auto it = env.find(v);
      saved.push_back(it == env.end() ? std::nullopt : std::optional<ElementId>(it->second));
    }
    for_each_tuple(in_.size(), vars.size(), [&](const Tuple& t) {
      for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = t[i];
      fn();
    });
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (saved[i]) {
        env[vars[i]] = *saved[i];
      } else {
        env.erase(vars[i]);
      }
    }
  }

  const I& in_;
};

// Bool algebra over a concrete structure.
class StructureInterp {
 public:
  using Value = bool;
  explicit StructureInterp(const Structure& s) : s_(s) {}

  int size() const { return s_.size(); }
  bool truth(bool b) const { return b; }
  bool neg(bool a) const { return !a; }
  bool conj(bool a, bool b) const { return a && b; }
  bool disj(bool a, bool b) const { return a || b; }
  bool atom(std::string_view rel, std::span<const ElementId> t) const { return s_.holds(rel, t); }
  bool at_least(const std::vector<bool>& vals, unsigned k) const {
    std::size_t n = 0;
    for (bool v : vals) n += v ? 1 : 0;
    return n >= k;
  }
  bool same(bool a, bool b) const { return a == b; }

 private:
  const Structure& s_;
};

}  // namespace u1::detail

#endif  // U1_DETAIL_FO_SEMANTICS_HPP
