#include "u1/fragments.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace u1 {

const char* to_string(FragmentId id) {
  switch (id) {
    case FragmentId::kU1WithoutEquality: return "U1_WO_EQ";
    case FragmentId::kFU1: return "FU1";
    case FragmentId::kU1: return "U1";
    case FragmentId::kUC1: return "UC1";
    case FragmentId::kFO2: return "FO2";
  }
  return "?";
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kUniformity: return "UNIFORMITY";
    case ViolationKind::kOneDimensionality: return "ONE_DIMENSIONALITY";
    case ViolationKind::kEqualityPlacement: return "EQUALITY_PLACEMENT";
    case ViolationKind::kCountingQuantifier: return "COUNTING_QUANTIFIER";
    case ViolationKind::kVariableCount: return "VARIABLE_COUNT";
    case ViolationKind::kArity: return "ARITY";
  }
  return "?";
}

std::optional<FragmentId> parse_fragment_id(std::string_view name) {
  std::string lower;
  for (char c : name) {
    if (c != '_' && c != '-' && c != '(' && c != ')') lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (lower == "u1woeq" || lower == "u1wo=") return FragmentId::kU1WithoutEquality;
  if (lower == "fu1") return FragmentId::kFU1;
  if (lower == "u1") return FragmentId::kU1;
  if (lower == "uc1") return FragmentId::kUC1;
  if (lower == "fo2") return FragmentId::kFO2;
  return std::nullopt;
}

bool Diagnostic::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

namespace {

using VarSet = std::set<std::string>;

std::string show(const VarSet& vars) {
  std::string out = "{";
  for (const auto& v : vars) {
    if (out.size() > 1) out += ",";
    out += v;
  }
  return out + "}";
}

struct Leaf {
  const Formula* formula;
  Path path;
};

void collect_leaves(const Formula& f, Path& path, std::vector<Leaf>& out) {
  if (f.is_connective()) {
    for (std::size_t i = 0; i < f.num_children(); ++i) {
      path.push_back(static_cast<int>(i));
      collect_leaves(f.child(i), path, out);
      path.pop_back();
    }
    return;
  }
  out.push_back({&f, path});
}

class FragmentChecker {
 public:
  explicit FragmentChecker(FragmentId fragment) : fragment_(fragment) {}

  std::vector<Violation> run(const Formula& f) {
    Path path;
    std::vector<Leaf> leaves;
    collect_leaves(f, path, leaves);
    for (const auto& leaf : leaves) check_top_leaf(*leaf.formula, leaf.path);
    return std::move(violations_);
  }

 private:
  bool equality_free() const { return fragment_ == FragmentId::kU1WithoutEquality; }
  bool equality_is_atom() const { return fragment_ == FragmentId::kFU1; }

  void report(ViolationKind kind, const Path& path, std::string message) {
    violations_.push_back({kind, path, std::move(message)});
  }

  // A leaf of the top-level Boolean combination, i.e. a member of F on its own.
  void check_top_leaf(const Formula& f, const Path& path) {
    switch (f.kind()) {
      case FormulaKind::kTop:
      case FormulaKind::kBottom: return;
      case FormulaKind::kAtom: {
        VarSet vars(f.variables().begin(), f.variables().end());
        if (vars.size() > 1) {
          report(ViolationKind::kArity, path,
                 "atom " + print_formula(f) + " over " + show(vars) +
                     " is not unary and is not a leaf of any quantifier block");
        }
        return;
      }
      case FormulaKind::kEquals: {
        const bool same = f.variables()[0] == f.variables()[1];
        if (equality_free()) {
          report(ViolationKind::kEqualityPlacement, path, "equality is not available in " + std::string(to_string(fragment_)));
        } else if (equality_is_atom() && !same) {
          report(ViolationKind::kEqualityPlacement, path,
                 "in FU1 an equality between distinct variables stands for a binary atom and must be a leaf of a "
                 "quantifier block");
        }
        return;
      }
      default: check_block(f, path);
    }
  }

  void check_block(const Formula& f, const Path& path) {
    // Gather the block: a single node, or for UC1 a chain of directly nested
    // existential/counting quantifiers containing at least one counting
    // quantifier (counting quantifiers substitute for E inside a block).
    std::vector<const Formula*> chain{&f};
    if (fragment_ == FragmentId::kUC1 && (f.is(FormulaKind::kExists) || f.is(FormulaKind::kCount))) {
      VarSet seen(f.variables().begin(), f.variables().end());
      const Formula* cur = &f;
      while (cur->body().is(FormulaKind::kExists) || cur->body().is(FormulaKind::kCount)) {
        const Formula& next = cur->body();
        bool clash = std::any_of(next.variables().begin(), next.variables().end(),
                                 [&](const std::string& v) { return seen.count(v) > 0; });
        if (clash) break;
        seen.insert(next.variables().begin(), next.variables().end());
        chain.push_back(&next);
        cur = &next;
      }
      bool any_count = std::any_of(chain.begin(), chain.end(), [](const Formula* q) { return q->is(FormulaKind::kCount); });
      if (!any_count) chain.resize(1);
    }

    VarSet bound;
    Path body_path = path;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const Formula& q = *chain[i];
      if (q.is(FormulaKind::kCount) && fragment_ != FragmentId::kUC1) {
        report(ViolationKind::kCountingQuantifier, body_path,
               "counting quantifier E[" + std::string(to_string(q.comparator())) + std::to_string(q.bound()) +
                   "] is only allowed in UC1");
      }
      bound.insert(q.variables().begin(), q.variables().end());
      body_path.push_back(0);
    }
    const Formula& body = chain.back()->body();

    VarSet outer;
    for (const auto& v : free_variables(body)) {
      if (!bound.count(v)) outer.insert(v);
    }
    if (outer.size() > 1) {
      report(ViolationKind::kOneDimensionality, path,
             "quantifier block over " + show(bound) + " leaves " + std::to_string(outer.size()) +
                 " variables free " + show(outer) + "; at most one may remain");
    }

    std::vector<Leaf> leaves;
    Path walk = body_path;
    collect_leaves(body, walk, leaves);

    struct Candidate {
      const Leaf* leaf;
      VarSet vars;
      bool equality;
    };
    std::vector<Candidate> candidates;

    for (const auto& leaf : leaves) {
      const Formula& g = *leaf.formula;
      switch (g.kind()) {
        case FormulaKind::kTop:
        case FormulaKind::kBottom: break;
        case FormulaKind::kAtom: {
          VarSet vars(g.variables().begin(), g.variables().end());
          // R(x,...,x) is a unary atom: a member of F, never an X-atom.
          if (vars.size() > 1) candidates.push_back({&leaf, std::move(vars), false});
          break;
        }
        case FormulaKind::kEquals: {
          VarSet vars(g.variables().begin(), g.variables().end());
          if (equality_free()) {
            report(ViolationKind::kEqualityPlacement, leaf.path,
                   "equality is not available in " + std::string(to_string(fragment_)));
          } else if (equality_is_atom() && vars.size() > 1) {
            candidates.push_back({&leaf, std::move(vars), true});
          }
          break;
        }
        default: check_block(g, leaf.path);
      }
    }

    std::set<VarSet> distinct;
    for (const auto& c : candidates) distinct.insert(c.vars);
    if (distinct.size() <= 1) return;

    // Reference X: the unique largest group of relational atoms, or of
    // equalities when the block has no relational X-atoms.
    auto largest = [&](bool equality) -> std::optional<VarSet> {
      std::map<VarSet, int> groups;
      for (const auto& c : candidates) {
        if (c.equality == equality) ++groups[c.vars];
      }
      std::optional<VarSet> best;
      int best_count = 0;
      bool tie = false;
      for (const auto& [vars, n] : groups) {
        if (n > best_count) {
          best = vars;
          best_count = n;
          tie = false;
        } else if (n == best_count) {
          tie = true;
        }
      }
      if (tie) return std::nullopt;
      return best;
    };
    const bool has_relational =
        std::any_of(candidates.begin(), candidates.end(), [](const Candidate& c) { return !c.equality; });
    const std::optional<VarSet> reference = largest(!has_relational);

    std::string sets;
    for (const auto& vars : distinct) sets += (sets.empty() ? "" : " vs ") + show(vars);
    for (const auto& c : candidates) {
      if (reference && c.vars == *reference) continue;
      if (c.equality) {
        report(ViolationKind::kEqualityPlacement, c.leaf->path,
               "equality " + print_formula(*c.leaf->formula) + " acts as a binary atom over " + show(c.vars) +
                   " but the block's atoms use " + (reference ? show(*reference) : sets));
      } else {
        report(ViolationKind::kUniformity, c.leaf->path,
               "atom " + print_formula(*c.leaf->formula) + " uses variable set " + show(c.vars) +
                   "; atoms of one block must share a single set (" + sets + ")");
      }
    }
  }

  FragmentId fragment_;
  std::vector<Violation> violations_;
};

void check_fo2_rec(const Formula& f, Path& path, std::vector<Violation>& out) {
  if (f.is(FormulaKind::kCount)) {
    out.push_back({ViolationKind::kCountingQuantifier, path, "FO2 has no counting quantifiers"});
  } else if (f.is_block() && f.variables().size() > 1) {
    out.push_back({ViolationKind::kVariableCount, path,
                   "FO2 quantifies one variable at a time; block has " + std::to_string(f.variables().size())});
  }
  for (std::size_t i = 0; i < f.num_children(); ++i) {
    path.push_back(static_cast<int>(i));
    check_fo2_rec(f.child(i), path, out);
    path.pop_back();
  }
}

}  // namespace

Diagnostic check_fo2(const Formula& f) {
  Diagnostic d{FragmentId::kFO2, {}};
  const auto vars = all_variables(f);
  if (vars.size() > 2) {
    d.violations.push_back({ViolationKind::kVariableCount, {},
                            "formula uses " + std::to_string(vars.size()) + " variables " + show(vars) + "; FO2 allows two"});
  }
  Path path;
  check_fo2_rec(f, path, d.violations);
  return d;
}

Diagnostic check_fragment(const Formula& f, FragmentId fragment) {
  if (fragment == FragmentId::kFO2) return check_fo2(f);
  FragmentChecker checker(fragment);
  return Diagnostic{fragment, checker.run(f)};
}

}  // namespace u1
