#include "u1/translate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "u1/errors.hpp"
#include "u1/fragments.hpp"

namespace u1 {

namespace {

constexpr std::size_t kMaxDisjuncts = std::size_t{1} << 16;

// ---------------------------------------------------------------------------
// DNF over the Boolean leaves of a block body.

struct Literal {
  Formula leaf;
  bool positive;
  Formula formula() const { return positive ? leaf : Formula::negation(leaf); }
};

using Conj = std::vector<Literal>;
using Dnf = std::vector<Conj>;

Dnf cross(const Dnf& a, const Dnf& b) {
  if (a.size() * b.size() > kMaxDisjuncts) throw FragmentGateError("disjunctive normal form exceeds 65536 disjuncts");
  Dnf out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      Conj c = x;
      c.insert(c.end(), y.begin(), y.end());
      out.push_back(std::move(c));
    }
  }
  return out;
}

Dnf join(Dnf a, const Dnf& b) {
  a.insert(a.end(), b.begin(), b.end());
  if (a.size() > kMaxDisjuncts) throw FragmentGateError("disjunctive normal form exceeds 65536 disjuncts");
  return a;
}

Dnf dnf(const Formula& f, bool positive) {
  switch (f.kind()) {
    case FormulaKind::kTop: return positive ? Dnf{Conj{}} : Dnf{};
    case FormulaKind::kBottom: return positive ? Dnf{} : Dnf{Conj{}};
    case FormulaKind::kNot: return dnf(f.child(0), !positive);
    case FormulaKind::kAnd:
      return positive ? cross(dnf(f.child(0), true), dnf(f.child(1), true))
                      : join(dnf(f.child(0), false), dnf(f.child(1), false));
    case FormulaKind::kOr:
      return positive ? join(dnf(f.child(0), true), dnf(f.child(1), true))
                      : cross(dnf(f.child(0), false), dnf(f.child(1), false));
    case FormulaKind::kImplies:
      return positive ? join(dnf(f.child(0), false), dnf(f.child(1), true))
                      : cross(dnf(f.child(0), true), dnf(f.child(1), false));
    default: return Dnf{Conj{Literal{f, positive}}};
  }
}

std::set<std::string> var_set(const Formula& f) { return {f.variables().begin(), f.variables().end()}; }

bool is_relational(const Formula& leaf) { return leaf.is(FormulaKind::kAtom) && var_set(leaf).size() > 1; }
bool is_proper_equality(const Formula& leaf) { return leaf.is(FormulaKind::kEquals) && var_set(leaf).size() > 1; }

DnfDisjunct classify(const Conj& conj, const std::vector<std::string>& order) {
  DnfDisjunct d;
  std::set<std::set<std::string>> rel_sets;
  std::set<std::set<std::string>> eq_sets;
  for (const auto& lit : conj) {
    if (is_relational(lit.leaf)) rel_sets.insert(var_set(lit.leaf));
    if (is_proper_equality(lit.leaf)) eq_sets.insert(var_set(lit.leaf));
  }
  if (rel_sets.size() > 1) throw FragmentGateError("atoms of one disjunct use different variable sets (uniformity)");
  std::optional<std::set<std::string>> shared;
  if (!rel_sets.empty()) {
    shared = *rel_sets.begin();
  } else if (eq_sets.size() == 1) {
    shared = *eq_sets.begin();
  }
  if (shared) d.shared.assign(shared->begin(), shared->end());

  std::map<std::string, std::vector<Formula>> unary;
  for (const auto& lit : conj) {
    if (is_relational(lit.leaf)) {
      d.higher.push_back(lit.formula());
    } else if (is_proper_equality(lit.leaf)) {
      if (shared && var_set(lit.leaf) == *shared) {
        d.higher.push_back(lit.formula());
      } else {
        d.equalities.push_back(lit.formula());
      }
    } else {
      auto free = free_variables(lit.leaf);
      if (free.size() > 1) {
        throw FragmentGateError("subformula " + print_formula(lit.leaf) + " has " + std::to_string(free.size()) +
                                " free variables (one-dimensionality)");
      }
      if (free.empty()) {
        d.closed.push_back(lit.formula());
      } else {
        unary[*free.begin()].push_back(lit.formula());
      }
    }
  }
  if (shared) {
    for (const auto& v : *shared) unary[v];
  }
  // Entries follow the block's variable order, then anything else (the
  // outer variable).
  std::vector<std::string> keys = order;
  for (const auto& [v, _] : unary) {
    if (std::find(keys.begin(), keys.end(), v) == keys.end()) keys.push_back(v);
  }
  for (const auto& v : keys) {
    auto it = unary.find(v);
    if (it != unary.end()) d.unary.emplace_back(v, conjunction_of(it->second));
  }
  return d;
}

DnfBlock block_dnf(const std::vector<std::string>& vars, const Formula& body, const std::optional<std::string>& outer) {
  DnfBlock b{vars, outer, {}};
  for (const auto& conj : dnf(body, true)) b.disjuncts.push_back(classify(conj, vars));
  return b;
}

std::optional<std::string> single_free(const Formula& f) {
  auto free = free_variables(f);
  if (free.size() > 1) throw FragmentGateError("formula " + print_formula(f) + " has more than one free variable");
  if (free.empty()) return std::nullopt;
  return *free.begin();
}

// ---------------------------------------------------------------------------
// FU1 -> DL_FU1

Concept exists_somewhere(const Concept& c) { return Concept::exists(Role::universal(), {c}); }

Concept conjunction_of(const std::vector<Concept>& parts) {
  if (parts.empty()) return Concept::top();
  Concept acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Concept::conjunction(acc, parts[i]);
  return acc;
}

Concept translate_fu1(const Formula& f);

// Role over the ordering `order` (anchor first) that holds exactly when the
// higher literal does.
Role literal_role(const Formula& lit, const std::vector<std::string>& order) {
  if (lit.is(FormulaKind::kNot)) return Role::negation(literal_role(lit.child(0), order));
  if (lit.is(FormulaKind::kEquals)) return Role::epsilon();
  std::vector<int> sigma;
  for (const auto& v : lit.variables()) {
    sigma.push_back(static_cast<int>(std::find(order.begin(), order.end(), v) - order.begin()) + 1);
  }
  bool identity = sigma.size() == order.size();
  for (std::size_t j = 0; identity && j < sigma.size(); ++j) identity = sigma[j] == static_cast<int>(j + 1);
  Role atom = Role::atomic(lit.relation());
  return identity ? atom : Role::apply(Surjection(sigma), atom);
}

Concept translate_disjunct(const DnfDisjunct& d, const std::vector<std::string>& block_vars,
                           const std::optional<std::string>& outer) {
  if (!d.equalities.empty()) {
    throw FragmentGateError("equality " + print_formula(d.equalities.front()) +
                            " is not over the block's atom variables; only FU1 translates to DL_FU1");
  }
  std::vector<Concept> parts;
  for (const auto& c : d.closed) parts.push_back(translate_fu1(c));
  std::map<std::string, Concept> chi;
  for (const auto& [v, f] : d.unary) chi.emplace(v, translate_fu1(f));

  auto is_bound = [&](const std::string& v) {
    return std::find(block_vars.begin(), block_vars.end(), v) != block_vars.end();
  };
  if (outer && chi.count(*outer) && !is_bound(*outer)) parts.push_back(chi.at(*outer));

  const std::set<std::string> shared(d.shared.begin(), d.shared.end());
  for (const auto& v : block_vars) {
    if (shared.count(v) || !chi.count(v)) continue;
    parts.push_back(exists_somewhere(chi.at(v)));
  }

  if (!d.higher.empty()) {
    std::vector<std::string> order;
    const bool anchored = outer && shared.count(*outer) && !is_bound(*outer);
    if (anchored) {
      order.push_back(*outer);
    } else {
      for (const auto& v : block_vars) {
        if (shared.count(v)) {
          order.push_back(v);
          break;
        }
      }
    }
    for (const auto& v : block_vars) {
      if (shared.count(v) && v != order.front()) order.push_back(v);
    }
    if (order.size() != shared.size()) throw FragmentGateError("atom variables escape the block");

    Role rho = literal_role(d.higher.front(), order);
    for (std::size_t i = 1; i < d.higher.size(); ++i) rho = Role::intersection(rho, literal_role(d.higher[i], order));
    std::vector<Concept> args;
    for (std::size_t i = 1; i < order.size(); ++i) {
      auto it = chi.find(order[i]);
      args.push_back(it == chi.end() ? Concept::top() : it->second);
    }
    Concept core = Concept::exists(rho, std::move(args));
    if (anchored) {
      parts.push_back(core);
    } else {
      auto it = chi.find(order.front());
      if (it != chi.end()) core = Concept::conjunction(core, it->second);
      parts.push_back(exists_somewhere(core));
    }
  }
  return conjunction_of(parts);
}

Concept translate_fu1(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::kTop: return Concept::top();
    case FormulaKind::kBottom: return Concept::bottom();
    case FormulaKind::kAtom: {
      if (var_set(f).size() > 1) {
        throw FragmentGateError("atom " + print_formula(f) + " is not inside a quantifier block");
      }
      const std::size_t k = f.variables().size();
      if (k == 1) return Concept::atomic(f.relation());
      // R(x,...,x) = ∃(ε ∩ σR).⊤ with σ = [1,2,...,2].
      std::vector<int> sigma(k, 2);
      sigma[0] = 1;
      return Concept::exists(Role::intersection(Role::epsilon(), Role::apply(Surjection(sigma), Role::atomic(f.relation()))),
                             {Concept::top()});
    }
    case FormulaKind::kEquals:
      if (f.variables()[0] == f.variables()[1]) return Concept::top();
      throw FragmentGateError("equality " + print_formula(f) + " is not inside a quantifier block");
    case FormulaKind::kNot: return Concept::negation(translate_fu1(f.child(0)));
    case FormulaKind::kAnd: return Concept::conjunction(translate_fu1(f.child(0)), translate_fu1(f.child(1)));
    case FormulaKind::kOr: return Concept::disjunction(translate_fu1(f.child(0)), translate_fu1(f.child(1)));
    case FormulaKind::kImplies:
      return Concept::disjunction(Concept::negation(translate_fu1(f.child(0))), translate_fu1(f.child(1)));
    case FormulaKind::kExists:
    case FormulaKind::kForall: {
      const bool universal = f.is(FormulaKind::kForall);
      const Formula body = universal ? Formula::negation(f.body()) : f.body();
      const DnfBlock b = block_dnf(f.variables(), body, single_free(f));
      std::vector<Concept> disjuncts;
      for (const auto& d : b.disjuncts) disjuncts.push_back(translate_disjunct(d, b.variables, b.outer));
      Concept out = Concept::bottom();
      if (!disjuncts.empty()) {
        out = disjuncts.front();
        for (std::size_t i = 1; i < disjuncts.size(); ++i) out = Concept::disjunction(out, disjuncts[i]);
      }
      return universal ? Concept::negation(out) : out;
    }
    case FormulaKind::kCount: throw FragmentGateError("counting quantifiers have no DL_FU1 counterpart");
  }
  throw FragmentGateError("unsupported formula");
}

}  // namespace

DnfBlock to_dnf_block(const Formula& f) {
  if (!f.is(FormulaKind::kExists)) throw FragmentGateError("expected an existential quantifier block");
  return block_dnf(f.variables(), f.body(), single_free(f));
}

Formula to_formula(const DnfBlock& b) {
  std::vector<Formula> disjuncts;
  for (const auto& d : b.disjuncts) {
    std::vector<Formula> parts = d.higher;
    parts.insert(parts.end(), d.equalities.begin(), d.equalities.end());
    for (const auto& [v, chi] : d.unary) parts.push_back(chi);
    parts.insert(parts.end(), d.closed.begin(), d.closed.end());
    disjuncts.push_back(Formula::exists(b.variables, conjunction_of(parts)));
  }
  return disjunction_of(disjuncts);
}

Concept fu1_to_dl(const Formula& f) {
  const Diagnostic d = check_fragment(f, FragmentId::kFU1);
  if (!d.verdict()) {
    throw FragmentGateError(std::string("input is not in FU1: ") + to_string(d.violations.front().kind) + ": " +
                            d.violations.front().message);
  }
  single_free(f);
  return translate_fu1(f);
}

namespace {

class FreshNames {
 public:
  explicit FreshNames(std::string avoid) : avoid_(std::move(avoid)) {}
  std::string next() {
    std::string name;
    do {
      name = "y" + std::to_string(++counter_);
    } while (name == avoid_);
    return name;
  }

 private:
  std::string avoid_;
  int counter_ = 0;
};

Formula conj2(const Formula& a, const Formula& b) {
  if (a.is(FormulaKind::kTop)) return b;
  if (b.is(FormulaKind::kTop)) return a;
  return Formula::conjunction(a, b);
}

Formula exists_over(const std::vector<std::string>& vars, const Formula& body) {
  return vars.empty() ? body : Formula::exists(vars, body);
}

// ---------------------------------------------------------------------------
// DL_FU1 -> FU1 (standard translation)

class DlToFu1 {
 public:
  DlToFu1(const Vocabulary& vocab, const std::string& var) : vocab_(vocab), fresh_(var) {}

  Formula concept_at(const Concept& c, const std::string& v) {
    switch (c.kind()) {
      case ConceptKind::kTop: return Formula::top();
      case ConceptKind::kAtomic: return Formula::atom(c.name(), {v});
      case ConceptKind::kNot: return Formula::negation(concept_at(c.child(0), v));
      case ConceptKind::kAnd: return Formula::conjunction(concept_at(c.child(0), v), concept_at(c.child(1), v));
      case ConceptKind::kExists: {
        std::vector<std::string> ys;
        for (std::size_t i = 0; i < c.num_children(); ++i) ys.push_back(fresh_.next());
        std::vector<std::string> terms{v};
        terms.insert(terms.end(), ys.begin(), ys.end());
        Formula body = role_at(c.role(), terms);
        for (std::size_t i = 0; i < c.num_children(); ++i) body = conj2(body, concept_at(c.child(i), ys[i]));
        return exists_over(ys, body);
      }
    }
    return Formula::bottom();
  }

 private:
  Formula role_at(const Role& r, const std::vector<std::string>& t) {
    switch (r.kind()) {
      case RoleKind::kAtomic: return Formula::atom(r.name(), t);
      case RoleKind::kEpsilon: return Formula::equals(t[0], t[1]);
      case RoleKind::kNot: return Formula::negation(role_at(r.child(0), t));
      case RoleKind::kAnd:
        if (role_arity(r.child(0), vocab_) != role_arity(r.child(1), vocab_)) return Formula::bottom();
        return Formula::conjunction(role_at(r.child(0), t), role_at(r.child(1), t));
      case RoleKind::kApply: {
        const Surjection& sigma = r.surjection();
        if (role_arity(r.child(0), vocab_) != sigma.source_arity()) return Formula::bottom();
        std::vector<std::string> sub;
        for (int j = 1; j <= sigma.source_arity(); ++j) sub.push_back(t[static_cast<std::size_t>(sigma(j) - 1)]);
        return role_at(r.child(0), sub);
      }
    }
    return Formula::bottom();
  }

  const Vocabulary& vocab_;
  FreshNames fresh_;
};

// ---------------------------------------------------------------------------
// Composition/union elimination

using BinPath = std::vector<DlrBinRel>;

DlrConcept eliminate(const DlrConcept& c);

DlrRole eliminate_role(const DlrRole& r) {
  switch (r.kind()) {
    case DlrRoleKind::kSelect: return DlrRole::select(r.position(), r.width(), eliminate(r.filler()));
    case DlrRoleKind::kNot: return DlrRole::negation(eliminate_role(r.child(0)));
    case DlrRoleKind::kAnd: return DlrRole::intersection(eliminate_role(r.child(0)), eliminate_role(r.child(1)));
    default: return r;
  }
}

std::vector<BinPath> paths(const DlrBinRel& e) {
  switch (e.kind()) {
    case DlrBinRelKind::kEpsilon: return {BinPath{e}};
    case DlrBinRelKind::kProject: return {BinPath{DlrBinRel::project(eliminate_role(e.role()), e.first(), e.second())}};
    case DlrBinRelKind::kUnion: {
      auto out = paths(e.child(0));
      auto more = paths(e.child(1));
      out.insert(out.end(), more.begin(), more.end());
      if (out.size() > kMaxDisjuncts) throw FragmentGateError("union expansion exceeds 65536 paths");
      return out;
    }
    case DlrBinRelKind::kCompose: {
      const auto a = paths(e.child(0));
      const auto b = paths(e.child(1));
      if (a.size() * b.size() > kMaxDisjuncts) throw FragmentGateError("composition expansion exceeds 65536 paths");
      std::vector<BinPath> out;
      for (const auto& p : a) {
        for (const auto& q : b) {
          BinPath r = p;
          r.insert(r.end(), q.begin(), q.end());
          out.push_back(std::move(r));
        }
      }
      return out;
    }
    case DlrBinRelKind::kStar: throw FragmentGateError("Kleene star has no first-order counterpart");
  }
  return {};
}

DlrConcept eliminate(const DlrConcept& c) {
  switch (c.kind()) {
    case DlrConceptKind::kTop:
    case DlrConceptKind::kAtomic: return c;
    case DlrConceptKind::kNot: return DlrConcept::negation(eliminate(c.child(0)));
    case DlrConceptKind::kAnd: return DlrConcept::conjunction(eliminate(c.child(0)), eliminate(c.child(1)));
    case DlrConceptKind::kExistsProject: return DlrConcept::exists_project(c.position(), eliminate_role(c.role()));
    case DlrConceptKind::kAtMost: throw FragmentGateError("number restrictions are outside FU1");
    case DlrConceptKind::kExists: {
      const DlrConcept filler = eliminate(c.child(0));
      std::optional<DlrConcept> out;
      for (const auto& p : paths(c.relation())) {
        DlrConcept d = filler;
        for (auto it = p.rbegin(); it != p.rend(); ++it) d = DlrConcept::exists(*it, d);
        out = out ? DlrConcept::disjunction(*out, d) : d;
      }
      return *out;
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// DLR_0 -> FU1

class DlrToFu1 {
 public:
  DlrToFu1(const Vocabulary& vocab, TopMode mode, const std::string& var) : vocab_(vocab), mode_(mode), fresh_(var) {}

  Formula concept_at(const DlrConcept& c, const std::string& v) {
    switch (c.kind()) {
      case DlrConceptKind::kTop: return Formula::top();
      case DlrConceptKind::kAtomic: return Formula::atom(c.name(), {v});
      case DlrConceptKind::kNot: return Formula::negation(concept_at(c.child(0), v));
      case DlrConceptKind::kAnd: return Formula::conjunction(concept_at(c.child(0), v), concept_at(c.child(1), v));
      case DlrConceptKind::kExistsProject: {
        const int n = dlr_role_arity(c.role(), vocab_);
        std::vector<std::string> u(static_cast<std::size_t>(n));
        std::vector<std::string> bound;
        for (int k = 1; k <= n; ++k) {
          if (k == c.position()) {
            u[k - 1] = v;
          } else {
            u[k - 1] = fresh_.next();
            bound.push_back(u[k - 1]);
          }
        }
        return exists_over(bound, role_at(c.role(), u));
      }
      case DlrConceptKind::kExists: return exists_at(c.relation(), c.child(0), v);
      case DlrConceptKind::kAtMost: throw FragmentGateError("number restrictions are outside FU1");
    }
    return Formula::bottom();
  }

 private:
  Formula exists_at(const DlrBinRel& e, const DlrConcept& filler, const std::string& v) {
    const std::string y = fresh_.next();
    if (e.is(DlrBinRelKind::kEpsilon)) {
      return Formula::exists({y}, conj2(Formula::equals(v, y), concept_at(filler, y)));
    }
    if (!e.is(DlrBinRelKind::kProject)) throw FragmentGateError("composition, union and star must be eliminated first");
    const int n = dlr_role_arity(e.role(), vocab_);
    const int i = e.first();
    const int j = e.second();
    std::vector<std::string> u(static_cast<std::size_t>(n));
    std::vector<std::string> zs;
    u[i - 1] = v;
    if (i != j) u[j - 1] = y;
    for (int k = 1; k <= n; ++k) {
      if (u[k - 1].empty()) {
        u[k - 1] = fresh_.next();
        zs.push_back(u[k - 1]);
      }
    }
    if (i != j) {
      std::vector<std::string> bound{y};
      bound.insert(bound.end(), zs.begin(), zs.end());
      return Formula::exists(bound, conj2(role_at(e.role(), u), concept_at(filler, y)));
    }
    Formula inner = exists_over(zs, role_at(e.role(), u));
    return Formula::exists({y}, conj2(conj2(Formula::equals(v, y), inner), concept_at(filler, y)));
  }

  Formula top_at(int n, const std::vector<std::string>& u) {
    if (mode_ == TopMode::kFull) return Formula::top();
    return Formula::atom(top_relation_name(n), u);
  }

  Formula role_at(const DlrRole& r, const std::vector<std::string>& u) {
    const int n = static_cast<int>(u.size());
    switch (r.kind()) {
      case DlrRoleKind::kTop: return top_at(n, u);
      case DlrRoleKind::kAtomic: return Formula::atom(r.name(), u);
      case DlrRoleKind::kSelect: return conj2(concept_at(r.filler(), u[r.position() - 1]), top_at(n, u));
      case DlrRoleKind::kNot: return conj2(top_at(n, u), Formula::negation(role_at(r.child(0), u)));
      case DlrRoleKind::kAnd: return conj2(role_at(r.child(0), u), role_at(r.child(1), u));
    }
    return Formula::bottom();
  }

  const Vocabulary& vocab_;
  TopMode mode_;
  FreshNames fresh_;
};

}  // namespace

Formula dl_to_fu1(const Concept& c, const Vocabulary& vocab, const std::string& var) {
  validate(c, vocab);
  DlToFu1 t(vocab, var);
  return t.concept_at(c, var);
}

DlrConcept eliminate_comp_union(const DlrConcept& c) { return eliminate(c); }

Formula dlr0_to_fu1(const DlrConcept& c, const Vocabulary& vocab, TopMode mode, const std::string& var) {
  validate(c, vocab);
  if (has_star(c)) throw FragmentGateError("Kleene star has no first-order counterpart");
  if (has_at_most(c)) throw FragmentGateError("number restrictions are outside FU1");
  DlrToFu1 t(vocab, mode, var);
  return t.concept_at(eliminate(c), var);
}

}  // namespace u1
