#include "u1/formula.hpp"

#include <algorithm>
#include <stdexcept>

#include "u1/errors.hpp"

namespace u1 {

struct Formula::Node {
  FormulaKind kind;
  Comparator cmp = Comparator::kAtLeast;
  unsigned bound = 0;
  std::string relation{};
  std::vector<std::string> vars{};
  std::vector<Formula> children{};
};

namespace {

const std::string kEmptyName;

void check_block_vars(const std::vector<std::string>& vars) {
  if (vars.empty()) throw ValidationError("quantifier block needs at least one variable");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!is_identifier(vars[i])) throw ValidationError("invalid variable name '" + vars[i] + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (vars[i] == vars[j]) throw ValidationError("duplicate variable '" + vars[i] + "' in quantifier block");
    }
  }
}

}  // namespace

const char* to_string(Comparator cmp) {
  switch (cmp) {
    case Comparator::kAtLeast: return ">=";
    case Comparator::kAtMost: return "<=";
    case Comparator::kExactly: return "=";
  }
  return "?";
}

bool compare_count(Comparator cmp, std::size_t count, unsigned bound) {
  switch (cmp) {
    case Comparator::kAtLeast: return count >= bound;
    case Comparator::kAtMost: return count <= bound;
    case Comparator::kExactly: return count == bound;
  }
  return false;
}

Formula Formula::top() {
  static const Formula instance(std::make_shared<const Node>(Node{FormulaKind::kTop}));
  return instance;
}

Formula Formula::bottom() {
  static const Formula instance(std::make_shared<const Node>(Node{FormulaKind::kBottom}));
  return instance;
}

Formula Formula::atom(std::string relation, std::vector<std::string> args) {
  if (!is_identifier(relation)) throw ValidationError("invalid relation name '" + relation + "'");
  if (args.empty()) throw ValidationError("atom '" + relation + "' needs at least one argument");
  for (const auto& a : args) {
    if (!is_identifier(a)) throw ValidationError("invalid variable name '" + a + "'");
  }
  Node n{FormulaKind::kAtom};
  n.relation = std::move(relation);
  n.vars = std::move(args);
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::equals(std::string lhs, std::string rhs) {
  if (!is_identifier(lhs) || !is_identifier(rhs)) throw ValidationError("invalid variable in equality");
  Node n{FormulaKind::kEquals};
  n.vars = {std::move(lhs), std::move(rhs)};
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::negation(Formula f) {
  Node n{FormulaKind::kNot};
  n.children.push_back(std::move(f));
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  Node n{FormulaKind::kAnd};
  n.children = {std::move(lhs), std::move(rhs)};
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  Node n{FormulaKind::kOr};
  n.children = {std::move(lhs), std::move(rhs)};
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  Node n{FormulaKind::kImplies};
  n.children = {std::move(lhs), std::move(rhs)};
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::exists(std::vector<std::string> vars, Formula body) {
  check_block_vars(vars);
  Node n{FormulaKind::kExists};
  n.vars = std::move(vars);
  n.children.push_back(std::move(body));
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::forall(std::vector<std::string> vars, Formula body) {
  check_block_vars(vars);
  Node n{FormulaKind::kForall};
  n.vars = std::move(vars);
  n.children.push_back(std::move(body));
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::count(Comparator cmp, unsigned bound, std::string var, Formula body) {
  if (!is_identifier(var)) throw ValidationError("invalid variable name '" + var + "'");
  Node n{FormulaKind::kCount};
  n.cmp = cmp;
  n.bound = bound;
  n.vars = {std::move(var)};
  n.children.push_back(std::move(body));
  return Formula(std::make_shared<const Node>(std::move(n)));
}

FormulaKind Formula::kind() const { return node_->kind; }

bool Formula::is_connective() const {
  switch (kind()) {
    case FormulaKind::kNot:
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
    case FormulaKind::kImplies: return true;
    default: return false;
  }
}

const std::string& Formula::relation() const { return node_->kind == FormulaKind::kAtom ? node_->relation : kEmptyName; }
const std::vector<std::string>& Formula::variables() const { return node_->vars; }
Comparator Formula::comparator() const { return node_->cmp; }
unsigned Formula::bound() const { return node_->bound; }
std::size_t Formula::num_children() const { return node_->children.size(); }
const Formula& Formula::child(std::size_t i) const { return node_->children.at(i); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.relation != y.relation || x.vars != y.vars) return false;
  if (x.kind == FormulaKind::kCount && (x.cmp != y.cmp || x.bound != y.bound)) return false;
  return x.children == y.children;
}

Formula conjunction_of(std::span<const Formula> parts) {
  if (parts.empty()) return Formula::top();
  Formula result = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) result = Formula::conjunction(result, parts[i]);
  return result;
}

Formula disjunction_of(std::span<const Formula> parts) {
  if (parts.empty()) return Formula::bottom();
  Formula result = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) result = Formula::disjunction(result, parts[i]);
  return result;
}

namespace {

void collect_free(const Formula& f, std::vector<std::string>& bound, std::set<std::string>& out) {
  auto is_bound = [&](const std::string& v) { return std::find(bound.begin(), bound.end(), v) != bound.end(); };
  switch (f.kind()) {
    case FormulaKind::kTop:
    case FormulaKind::kBottom: return;
    case FormulaKind::kAtom:
    case FormulaKind::kEquals:
      for (const auto& v : f.variables()) {
        if (!is_bound(v)) out.insert(v);
      }
      return;
    case FormulaKind::kExists:
    case FormulaKind::kForall:
    case FormulaKind::kCount: {
      const auto mark = bound.size();
      bound.insert(bound.end(), f.variables().begin(), f.variables().end());
      collect_free(f.body(), bound, out);
      bound.resize(mark);
      return;
    }
    default:
      for (std::size_t i = 0; i < f.num_children(); ++i) collect_free(f.child(i), bound, out);
  }
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(f, bound, out);
  return out;
}

bool is_sentence(const Formula& f) { return free_variables(f).empty(); }

std::set<std::string> all_variables(const Formula& f) {
  std::set<std::string> out(f.variables().begin(), f.variables().end());
  for (std::size_t i = 0; i < f.num_children(); ++i) {
    auto sub = all_variables(f.child(i));
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

std::size_t formula_size(const Formula& f) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < f.num_children(); ++i) n += formula_size(f.child(i));
  return n;
}

std::size_t formula_depth(const Formula& f) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < f.num_children(); ++i) d = std::max(d, formula_depth(f.child(i)));
  return f.num_children() == 0 ? 0 : d + 1;
}

bool has_counting(const Formula& f) {
  if (f.is(FormulaKind::kCount)) return true;
  for (std::size_t i = 0; i < f.num_children(); ++i) {
    if (has_counting(f.child(i))) return true;
  }
  return false;
}

const Formula& subformula_at(const Formula& f, std::span<const int> path) {
  const Formula* cur = &f;
  for (int step : path) {
    if (step < 0 || static_cast<std::size_t>(step) >= cur->num_children()) {
      throw std::out_of_range("formula path out of range");
    }
    cur = &cur->child(static_cast<std::size_t>(step));
  }
  return *cur;
}

Formula replace_at(const Formula& f, std::span<const int> path, const Formula& replacement) {
  if (path.empty()) return replacement;
  const int step = path.front();
  if (step < 0 || static_cast<std::size_t>(step) >= f.num_children()) {
    throw std::out_of_range("formula path out of range");
  }
  std::vector<Formula> kids;
  for (std::size_t i = 0; i < f.num_children(); ++i) {
    kids.push_back(static_cast<int>(i) == step ? replace_at(f.child(i), path.subspan(1), replacement) : f.child(i));
  }
  switch (f.kind()) {
    case FormulaKind::kNot: return Formula::negation(kids[0]);
    case FormulaKind::kAnd: return Formula::conjunction(kids[0], kids[1]);
    case FormulaKind::kOr: return Formula::disjunction(kids[0], kids[1]);
    case FormulaKind::kImplies: return Formula::implication(kids[0], kids[1]);
    case FormulaKind::kExists: return Formula::exists(f.variables(), kids[0]);
    case FormulaKind::kForall: return Formula::forall(f.variables(), kids[0]);
    case FormulaKind::kCount: return Formula::count(f.comparator(), f.bound(), f.variables()[0], kids[0]);
    default: throw std::out_of_range("formula path out of range");
  }
}

namespace {

void check_arities(const Formula& f, const Vocabulary* vocab, Vocabulary* inferred) {
  if (f.is(FormulaKind::kAtom)) {
    const int n = static_cast<int>(f.variables().size());
    if (vocab != nullptr) {
      auto arity = vocab->arity(f.relation());
      if (!arity) throw ValidationError("unknown relation '" + f.relation() + "'");
      if (*arity != n) {
        throw ValidationError("arity mismatch: '" + f.relation() + "' has arity " + std::to_string(*arity) +
                              " but is applied to " + std::to_string(n) + " variable(s)");
      }
    }
    if (inferred != nullptr) inferred->add(f.relation(), n);
  }
  for (std::size_t i = 0; i < f.num_children(); ++i) check_arities(f.child(i), vocab, inferred);
}

}  // namespace

void validate(const Formula& f, const Vocabulary& vocab) { check_arities(f, &vocab, nullptr); }

Vocabulary infer_vocabulary(const Formula& f) {
  Vocabulary v;
  check_arities(f, nullptr, &v);
  return v;
}

}  // namespace u1
