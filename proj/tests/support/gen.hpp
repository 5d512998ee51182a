// Random inputs for property tests. Every generator takes the RNG
// explicitly so failures reproduce from the seed.

#ifndef U1_TESTS_GEN_HPP
#define U1_TESTS_GEN_HPP

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "u1/dl.hpp"
#include "u1/dlr.hpp"
#include "u1/formula.hpp"
#include "u1/structure.hpp"

namespace u1test {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }
template <class T>
const T& pick_of(Rng& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(v.size()) - 1))];
}

inline std::vector<std::string> names_of_arity(const u1::Vocabulary& v, int lo, int hi) {
  std::vector<std::string> out;
  for (const auto& [name, a] : v) {
    if (a >= lo && a <= hi) out.push_back(name);
  }
  return out;
}

inline u1::Structure random_structure(Rng& rng, const u1::Vocabulary& vocab, int n, double density = 0.4) {
  std::vector<std::string> domain;
  for (int i = 0; i < n; ++i) domain.push_back("e" + std::to_string(i));
  std::map<std::string, u1::TupleSet> rels;
  for (const auto& [name, arity] : vocab) {
    const std::size_t cells = *u1::cell_count(n, arity);
    auto& ts = rels[name];
    for (std::size_t c = 0; c < cells; ++c) {
      if (coin(rng, density)) ts.insert(u1::cell_tuple(c, arity, n));
    }
  }
  return u1::Structure(domain, vocab, rels);
}

// The same structure with its elements renamed and reordered by perm.
inline u1::Structure permuted(const u1::Structure& s, const std::vector<int>& perm) {
  std::vector<std::string> domain(static_cast<std::size_t>(s.size()));
  for (int i = 0; i < s.size(); ++i) domain[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = "p" + s.element(i);
  std::map<std::string, u1::TupleSet> rels;
  for (const auto& [name, rel] : s.relations()) {
    auto& ts = rels[name];
    for (auto t : rel.tuples()) {
      for (auto& e : t) e = perm[static_cast<std::size_t>(e)];
      ts.insert(t);
    }
  }
  return u1::Structure(domain, s.vocabulary(), rels);
}

// ---------------------------------------------------------------------------
// Unrestricted formulas over vocab and the variables x, y, z, w.

inline u1::Formula random_formula(Rng& rng, const u1::Vocabulary& vocab, int depth) {
  using u1::Formula;
  static const std::vector<std::string> kVars{"x", "y", "z", "w"};
  const std::vector<std::string> rels = names_of_arity(vocab, 1, 64);
  auto var = [&] { return pick_of(rng, kVars); };
  if (depth <= 0 || coin(rng, 0.25)) {
    switch (pick(rng, 0, 5)) {
      case 0: return coin(rng) ? Formula::top() : Formula::bottom();
      case 1: return Formula::equals(var(), var());
      default: {
        const std::string r = pick_of(rng, rels);
        std::vector<std::string> args;
        for (int i = 0; i < *vocab.arity(r); ++i) args.push_back(var());
        return Formula::atom(r, args);
      }
    }
  }
  switch (pick(rng, 0, 7)) {
    case 0: return Formula::negation(random_formula(rng, vocab, depth - 1));
    case 1: return Formula::conjunction(random_formula(rng, vocab, depth - 1), random_formula(rng, vocab, depth - 1));
    case 2: return Formula::disjunction(random_formula(rng, vocab, depth - 1), random_formula(rng, vocab, depth - 1));
    case 3: return Formula::implication(random_formula(rng, vocab, depth - 1), random_formula(rng, vocab, depth - 1));
    case 4: {
      const auto cmp = static_cast<u1::Comparator>(pick(rng, 0, 2));
      return Formula::count(cmp, static_cast<unsigned>(pick(rng, 0, 3)), var(), random_formula(rng, vocab, depth - 1));
    }
    default: {
      std::vector<std::string> vars = kVars;
      std::shuffle(vars.begin(), vars.end(), rng);
      vars.resize(static_cast<std::size_t>(pick(rng, 1, 2)));
      Formula body = random_formula(rng, vocab, depth - 1);
      return coin(rng) ? Formula::exists(vars, body) : Formula::forall(vars, body);
    }
  }
}

// ---------------------------------------------------------------------------
// Grammar-directed generator for U1(wo=), FU1, U1 and UC1 formulas with at
// most one free variable. depth bounds formula_depth.

enum class Flavor { kNoEquality, kFU1, kU1, kUC1 };

class FragmentGen {
 public:
  FragmentGen(Rng& rng, u1::Vocabulary vocab, Flavor flavor) : rng_(rng), vocab_(std::move(vocab)), flavor_(flavor) {}

  // Free variable v, or a sentence when v is empty.
  u1::Formula formula(const std::string& v, int depth) {
    using u1::Formula;
    if (depth <= 0 || coin(rng_, 0.2)) return leaf(v, depth);
    switch (pick(rng_, 0, 5)) {
      case 0: return Formula::negation(formula(v, depth - 1));
      case 1: return Formula::conjunction(formula(v, depth - 1), formula(v, depth - 1));
      case 2: return Formula::disjunction(formula(v, depth - 1), formula(v, depth - 1));
      case 3: return Formula::implication(formula(v, depth - 1), formula(v, depth - 1));
      default: return block(v, depth);
    }
  }

  u1::Formula block(const std::string& outer, int depth) {
    using u1::Formula;
    if (depth < 2) return leaf(outer, depth);
    std::vector<std::string> pool{"x", "y", "z", "w", "u"};
    pool.erase(std::remove(pool.begin(), pool.end(), outer), pool.end());
    std::shuffle(pool.begin(), pool.end(), rng_);
    const int k = flavor_ == Flavor::kUC1 && coin(rng_, 0.3) ? 1 : pick(rng_, 1, 2);
    std::vector<std::string> bound(pool.begin(), pool.begin() + k);
    std::vector<std::string> y = bound;
    if (!outer.empty()) y.push_back(outer);

    // Shared set X ⊆ Y for the higher atoms, possibly absent.
    std::vector<std::string> x;
    const std::vector<std::string> higher = names_of_arity(vocab_, 2, 64);
    if (y.size() >= 2 && !higher.empty() && coin(rng_, 0.8)) {
      std::vector<std::string> shuffled = y;
      std::shuffle(shuffled.begin(), shuffled.end(), rng_);
      const int max_x = std::min<int>(static_cast<int>(y.size()), max_higher_arity());
      x.assign(shuffled.begin(), shuffled.begin() + pick(rng_, 2, std::max(2, max_x)));
    }
    Formula body = body_formula(bound, y, x, depth - 1);
    if (flavor_ == Flavor::kUC1 && k == 1 && coin(rng_, 0.5)) {
      const auto cmp = static_cast<u1::Comparator>(pick(rng_, 0, 2));
      return Formula::count(cmp, static_cast<unsigned>(pick(rng_, 0, 2)), bound[0], body);
    }
    return coin(rng_) ? Formula::exists(bound, body) : Formula::forall(bound, body);
  }

 private:
  int max_higher_arity() const {
    int m = 0;
    for (const auto& [n, a] : vocab_) m = std::max(m, a);
    return m;
  }

  // Boolean combination of X-atoms and members of F over Y.
  u1::Formula body_formula(const std::vector<std::string>& bound, const std::vector<std::string>& y,
                           const std::vector<std::string>& x, int depth) {
    using u1::Formula;
    if (depth <= 0 || coin(rng_, 0.3)) {
      const int choice = pick(rng_, 0, 9);
      if (!x.empty() && choice < 5) return x_atom(x);
      if (flavor_ == Flavor::kU1 || flavor_ == Flavor::kUC1) {
        if (choice == 5) return Formula::equals(pick_of(rng_, y), pick_of(rng_, y));
      }
      // Members of F: one free variable from Y (usually a bound one), or none.
      const std::string u = coin(rng_, 0.85) ? pick_of(rng_, coin(rng_, 0.7) ? bound : y) : "";
      return formula(u, std::max(0, depth));
    }
    switch (pick(rng_, 0, 3)) {
      case 0: return Formula::negation(body_formula(bound, y, x, depth - 1));
      case 1: return Formula::conjunction(body_formula(bound, y, x, depth - 1), body_formula(bound, y, x, depth - 1));
      case 2: return Formula::disjunction(body_formula(bound, y, x, depth - 1), body_formula(bound, y, x, depth - 1));
      default: return Formula::implication(body_formula(bound, y, x, depth - 1), body_formula(bound, y, x, depth - 1));
    }
  }

  // An atom whose variable set is exactly x (or x = y in FU1 when |x| = 2).
  u1::Formula x_atom(const std::vector<std::string>& x) {
    using u1::Formula;
    const int need = static_cast<int>(x.size());
    if (flavor_ == Flavor::kFU1 && need == 2 && coin(rng_, 0.2)) return Formula::equals(x[0], x[1]);
    const std::vector<std::string> fits = names_of_arity(vocab_, need, 64);
    const std::string r = pick_of(rng_, fits);
    const int arity = *vocab_.arity(r);
    std::vector<std::string> args = x;
    while (static_cast<int>(args.size()) < arity) args.push_back(pick_of(rng_, x));
    std::shuffle(args.begin(), args.end(), rng_);
    return Formula::atom(r, args);
  }

  u1::Formula leaf(const std::string& v, int depth) {
    using u1::Formula;
    const std::vector<std::string> unary = names_of_arity(vocab_, 1, 1);
    const std::vector<std::string> higher = names_of_arity(vocab_, 2, 64);
    if (v.empty()) {
      if (depth >= 2 && coin(rng_, 0.7)) return block("", depth);
      return coin(rng_) ? Formula::top() : Formula::bottom();
    }
    const int choice = pick(rng_, 0, 9);
    if (choice < 6 && !unary.empty()) return Formula::atom(pick_of(rng_, unary), {v});
    if (choice < 8 && !higher.empty()) {
      const std::string r = pick_of(rng_, higher);
      return Formula::atom(r, std::vector<std::string>(static_cast<std::size_t>(*vocab_.arity(r)), v));
    }
    if (choice == 8 && flavor_ != Flavor::kNoEquality) return Formula::equals(v, v);
    return coin(rng_) ? Formula::top() : Formula::bottom();
  }

  Rng& rng_;
  u1::Vocabulary vocab_;
  Flavor flavor_;
};

// ---------------------------------------------------------------------------
// DL_FU1 concepts.

class DlGen {
 public:
  DlGen(Rng& rng, u1::Vocabulary vocab) : rng_(rng), vocab_(std::move(vocab)) {}

  u1::Concept concept_of(int depth) {
    using u1::Concept;
    const std::vector<std::string> unary = names_of_arity(vocab_, 1, 1);
    if (depth <= 0 || coin(rng_, 0.2)) {
      if (!unary.empty() && coin(rng_, 0.8)) return Concept::atomic(pick_of(rng_, unary));
      return Concept::top();
    }
    switch (pick(rng_, 0, 4)) {
      case 0: return Concept::negation(concept_of(depth - 1));
      case 1: return Concept::conjunction(concept_of(depth - 1), concept_of(depth - 1));
      default: {
        const u1::Role r = role(depth - 1);
        const int a = u1::role_arity(r, vocab_);
        std::vector<Concept> args;
        for (int i = 1; i < a; ++i) args.push_back(concept_of(depth - 1));
        return Concept::exists(r, args);
      }
    }
  }

  u1::Role role(int depth) {
    using u1::Role;
    const std::vector<std::string> higher = names_of_arity(vocab_, 2, 64);
    if (depth <= 0 || coin(rng_, 0.35)) {
      if (!higher.empty() && coin(rng_, 0.8)) return Role::atomic(pick_of(rng_, higher));
      return Role::epsilon();
    }
    switch (pick(rng_, 0, 3)) {
      case 0: return Role::negation(role(depth - 1));
      case 1: return Role::intersection(role(depth - 1), role(depth - 1));
      default: {
        Role inner = role(depth - 1);
        int k = u1::role_arity(inner, vocab_);
        if (coin(rng_, 0.1)) k = pick(rng_, 2, 3);  // sometimes pathological
        return Role::apply(random_surjection(k), inner);
      }
    }
  }

  u1::Surjection random_surjection(int k) {
    const int m = pick(rng_, 2, k);
    std::vector<int> values;
    for (int i = 1; i <= m; ++i) values.push_back(i);
    while (static_cast<int>(values.size()) < k) values.push_back(pick(rng_, 1, m));
    std::shuffle(values.begin(), values.end(), rng_);
    return u1::Surjection(values);
  }

 private:
  Rng& rng_;
  u1::Vocabulary vocab_;
};

// ---------------------------------------------------------------------------
// DLR_reg concepts. Star and number restrictions only when asked for.

class DlrGen {
 public:
  DlrGen(Rng& rng, u1::Vocabulary vocab, bool star = false, bool at_most = false)
      : rng_(rng), vocab_(std::move(vocab)), star_(star), at_most_(at_most) {}

  u1::DlrConcept concept_of(int depth) {
    using u1::DlrConcept;
    const std::vector<std::string> unary = names_of_arity(vocab_, 1, 1);
    if (depth <= 0 || coin(rng_, 0.2)) {
      if (!unary.empty() && coin(rng_, 0.8)) return DlrConcept::atomic(pick_of(rng_, unary));
      return DlrConcept::top();
    }
    switch (pick(rng_, 0, 6)) {
      case 0: return DlrConcept::negation(concept_of(depth - 1));
      case 1: return DlrConcept::conjunction(concept_of(depth - 1), concept_of(depth - 1));
      case 2: return DlrConcept::disjunction(concept_of(depth - 1), concept_of(depth - 1));
      case 3: {
        const int n = role_width();
        return DlrConcept::exists_project(pick(rng_, 1, n), role(n, depth - 1));
      }
      case 4:
        if (at_most_) {
          const int n = role_width();
          return DlrConcept::at_most(static_cast<unsigned>(pick(rng_, 0, 2)), pick(rng_, 1, n), role(n, depth - 1));
        }
        [[fallthrough]];
      default: return DlrConcept::exists(binrel(depth - 1), concept_of(depth - 1));
    }
  }

  u1::DlrBinRel binrel(int depth) {
    using u1::DlrBinRel;
    if (depth <= 0 || coin(rng_, 0.4)) {
      if (coin(rng_, 0.2)) return DlrBinRel::epsilon();
      const int n = role_width();
      const int i = pick(rng_, 1, n);
      int j = pick(rng_, 1, n);
      if (j == i && coin(rng_, 0.7)) j = i % n + 1;
      return DlrBinRel::project(role(n, std::max(0, depth - 1)), i, j);
    }
    switch (pick(rng_, 0, star_ ? 2 : 1)) {
      case 0: return DlrBinRel::compose(binrel(depth - 1), binrel(depth - 1));
      case 1: return DlrBinRel::union_of(binrel(depth - 1), binrel(depth - 1));
      default: return DlrBinRel::star(binrel(depth - 1));
    }
  }

  u1::DlrRole role(int n, int depth) {
    using u1::DlrRole;
    const std::vector<std::string> fits = names_of_arity(vocab_, n, n);
    if (depth <= 0 || coin(rng_, 0.4)) {
      if (!fits.empty() && coin(rng_, 0.8)) return DlrRole::atomic(pick_of(rng_, fits));
      return DlrRole::top(n);
    }
    switch (pick(rng_, 0, 2)) {
      case 0: return DlrRole::negation(role(n, depth - 1));
      case 1: return DlrRole::intersection(role(n, depth - 1), role(n, depth - 1));
      default: return DlrRole::select(pick(rng_, 1, n), n, concept_of(depth - 1));
    }
  }

 private:
  int role_width() {
    const std::vector<std::string> higher = names_of_arity(vocab_, 2, 64);
    if (higher.empty() || coin(rng_, 0.1)) return pick(rng_, 2, 3);
    return *vocab_.arity(pick_of(rng_, higher));
  }

  Rng& rng_;
  u1::Vocabulary vocab_;
  bool star_;
  bool at_most_;
};

// Capture-avoiding rename of every bound variable to a fresh name.
inline u1::Formula rename_bound(const u1::Formula& f, std::map<std::string, std::string>& env, int& counter) {
  auto lookup = [&](const std::string& v) {
    auto it = env.find(v);
    return it == env.end() ? v : it->second;
  };
  switch (f.kind()) {
    case u1::FormulaKind::kTop:
    case u1::FormulaKind::kBottom: return f;
    case u1::FormulaKind::kAtom: {
      std::vector<std::string> args;
      for (const auto& v : f.variables()) args.push_back(lookup(v));
      return u1::Formula::atom(f.relation(), args);
    }
    case u1::FormulaKind::kEquals: return u1::Formula::equals(lookup(f.variables()[0]), lookup(f.variables()[1]));
    case u1::FormulaKind::kNot: return u1::Formula::negation(rename_bound(f.child(0), env, counter));
    case u1::FormulaKind::kAnd: return u1::Formula::conjunction(rename_bound(f.child(0), env, counter), rename_bound(f.child(1), env, counter));
    case u1::FormulaKind::kOr: return u1::Formula::disjunction(rename_bound(f.child(0), env, counter), rename_bound(f.child(1), env, counter));
    case u1::FormulaKind::kImplies:
      return u1::Formula::implication(rename_bound(f.child(0), env, counter), rename_bound(f.child(1), env, counter));
    default: {
      auto saved = env;
      std::vector<std::string> fresh;
      for (const auto& v : f.variables()) {
        fresh.push_back("v" + std::to_string(++counter));
        env[v] = fresh.back();
      }
      u1::Formula body = rename_bound(f.body(), env, counter);
      env = saved;
      if (f.is(u1::FormulaKind::kExists)) return u1::Formula::exists(fresh, body);
      if (f.is(u1::FormulaKind::kForall)) return u1::Formula::forall(fresh, body);
      return u1::Formula::count(f.comparator(), f.bound(), fresh[0], body);
    }
  }
}


}  // namespace u1test

#endif  // U1_TESTS_GEN_HPP
