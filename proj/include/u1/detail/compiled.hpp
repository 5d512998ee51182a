// Slot-compiled formulas with a short-circuiting three-valued evaluator.
//
// Variables become integer slots, relations integer ids. Atom truth comes
// from a lookup callback and may be unknown (partial interpretations during
// model search); connectives and quantifiers follow Kleene's strong logic,
// so a definite answer on a partial interpretation holds for every
// completion. On total interpretations this is ordinary two-valued truth.

#ifndef U1_DETAIL_COMPILED_HPP
#define U1_DETAIL_COMPILED_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "u1/formula.hpp"

namespace u1::detail {

enum class Tri : std::uint8_t { kFalse = 0, kTrue = 1, kUnknown = 2 };

inline Tri tri(bool b) { return b ? Tri::kTrue : Tri::kFalse; }

struct Program {
  struct Node {
    FormulaKind kind;
    Comparator cmp = Comparator::kAtLeast;
    unsigned bound = 0;
    int rel = -1;
    std::vector<int> slots{};
    std::vector<int> children{};
  };
  std::vector<Node> nodes;
  int root = 0;
  // Slot i holds variable slot_names[i].
  std::vector<std::string> slot_names;
  // Relation id i is relation_names[i] (sorted).
  std::vector<std::string> relation_names;
  std::vector<int> relation_arities;

  int slot_of(const std::string& var) const;
};

Program compile(const Formula& f);

// Lookup: Tri operator()(int rel, const int* args, int arity).
template <class Lookup>
class Machine {
 public:
  Machine(const Program& p, Lookup& lookup, int domain_size) : p_(p), lookup_(lookup), domain_size_(domain_size) {}

  Tri run(std::vector<int>& env) { return eval(p_.root, env.data()); }

 private:
  Tri eval(int id, int* env) {
    const Program::Node& n = p_.nodes[static_cast<std::size_t>(id)];
    switch (n.kind) {
      case FormulaKind::kTop: return Tri::kTrue;
      case FormulaKind::kBottom: return Tri::kFalse;
      case FormulaKind::kAtom: {
        int args[64];
        const int k = static_cast<int>(n.slots.size());
        for (int i = 0; i < k; ++i) args[i] = env[n.slots[static_cast<std::size_t>(i)]];
        return lookup_(n.rel, args, k);
      }
      case FormulaKind::kEquals: return tri(env[n.slots[0]] == env[n.slots[1]]);
      case FormulaKind::kNot: return negate(eval(n.children[0], env));
      case FormulaKind::kAnd: {
        Tri a = eval(n.children[0], env);
        if (a == Tri::kFalse) return a;
        Tri b = eval(n.children[1], env);
        if (b == Tri::kFalse) return b;
        return (a == Tri::kTrue && b == Tri::kTrue) ? Tri::kTrue : Tri::kUnknown;
      }
      case FormulaKind::kOr:
      case FormulaKind::kImplies: {
        Tri a = eval(n.children[0], env);
        if (n.kind == FormulaKind::kImplies) a = negate(a);
        if (a == Tri::kTrue) return a;
        Tri b = eval(n.children[1], env);
        if (b == Tri::kTrue) return b;
        return (a == Tri::kFalse && b == Tri::kFalse) ? Tri::kFalse : Tri::kUnknown;
      }
      case FormulaKind::kExists:
      case FormulaKind::kForall: return block(n, env);
      case FormulaKind::kCount: return count(n, env);
    }
    return Tri::kUnknown;
  }

  static Tri negate(Tri t) {
    if (t == Tri::kTrue) return Tri::kFalse;
    if (t == Tri::kFalse) return Tri::kTrue;
    return t;
  }

  // Exists returns true on the first true instance; forall false on the first
  // false one.
  Tri block(const Program::Node& n, int* env) {
    const Tri stop = n.kind == FormulaKind::kExists ? Tri::kTrue : Tri::kFalse;
    const Tri otherwise = negate(stop);
    bool unknown = false;
    Tri out = otherwise;
    enumerate(n, env, [&] {
      Tri v = eval(n.children[0], env);
      if (v == stop) {
        out = stop;
        return false;
      }
      if (v == Tri::kUnknown) unknown = true;
      return true;
    });
    if (out == stop) return out;
    return unknown ? Tri::kUnknown : otherwise;
  }

  Tri count(const Program::Node& n, int* env) {
    std::size_t definite = 0;
    std::size_t possible = 0;
    const std::size_t k = n.bound;
    enumerate(n, env, [&] {
      Tri v = eval(n.children[0], env);
      if (v == Tri::kTrue) ++definite;
      if (v != Tri::kFalse) ++possible;
      // Once more than k definite witnesses exist, ">= k" is true and "<= k",
      // "= k" are false; nothing further changes the answer.
      return definite <= k;
    });
    // possible only counts visited elements; after an early stop it is never
    // consulted.
    switch (n.cmp) {
      case Comparator::kAtLeast:
        if (definite >= k) return Tri::kTrue;
        return possible < k ? Tri::kFalse : Tri::kUnknown;
      case Comparator::kAtMost:
        if (definite > k) return Tri::kFalse;
        return possible <= k ? Tri::kTrue : Tri::kUnknown;
      case Comparator::kExactly:
        if (definite > k || possible < k) return Tri::kFalse;
        return (definite == k && possible == k) ? Tri::kTrue : Tri::kUnknown;
    }
    return Tri::kUnknown;
  }

  // fn returns false to stop early. Restores the bound slots.
  template <class Fn>
  void enumerate(const Program::Node& n, int* env, Fn&& fn) {
    const std::size_t k = n.slots.size();
    int saved[64];
    for (std::size_t i = 0; i < k; ++i) {
      saved[i] = env[n.slots[i]];
      env[n.slots[i]] = 0;
    }
    const int size = domain_size_;
    while (true) {
      if (!fn()) break;
      std::size_t i = k;
      bool done = true;
      while (i > 0) {
        --i;
        if (++env[n.slots[i]] < size) {
          done = false;
          break;
        }
        env[n.slots[i]] = 0;
      }
      if (done) break;
    }
    for (std::size_t i = 0; i < k; ++i) env[n.slots[i]] = saved[i];
  }

  const Program& p_;
  Lookup& lookup_;
  int domain_size_;
};

}  // namespace u1::detail

#endif  // U1_DETAIL_COMPILED_HPP
