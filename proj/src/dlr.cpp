#include "u1/dlr.hpp"

#include <algorithm>
#include <functional>

#include "u1/detail/dlr_semantics.hpp"
#include "u1/detail/fo_semantics.hpp"
#include "u1/errors.hpp"

namespace u1 {

std::string top_relation_name(int n) { return "top" + std::to_string(n); }

bool is_top_relation_name(std::string_view name) {
  if (name.size() < 4 || name.substr(0, 3) != "top") return false;
  return std::all_of(name.begin() + 3, name.end(), [](char c) { return c >= '0' && c <= '9'; });
}

struct DlrRole::Node {
  DlrRoleKind kind;
  std::string name{};
  int width = 0;
  int position = 0;
  std::vector<DlrConcept> filler{};
  std::vector<DlrRole> children{};
};

struct DlrBinRel::Node {
  DlrBinRelKind kind;
  std::vector<DlrRole> role{};
  int first = 0;
  int second = 0;
  std::vector<DlrBinRel> children{};
};

struct DlrConcept::Node {
  DlrConceptKind kind;
  std::string name{};
  int position = 0;
  unsigned bound = 0;
  std::vector<DlrRole> role{};
  std::vector<DlrBinRel> relation{};
  std::vector<DlrConcept> children{};
};

DlrRole DlrRole::top(int n) {
  if (n < 2) throw ValidationError("top<n> roles need n >= 2 (top1 is the concept)");
  Node node{DlrRoleKind::kTop};
  node.width = n;
  return DlrRole(std::make_shared<const Node>(std::move(node)));
}

DlrRole DlrRole::atomic(std::string name) {
  if (!is_identifier(name)) throw ValidationError("invalid role name '" + name + "'");
  return DlrRole(std::make_shared<const Node>(Node{DlrRoleKind::kAtomic, std::move(name)}));
}

DlrRole DlrRole::select(int i, int n, DlrConcept c) {
  if (n < 2 || i < 1 || i > n) throw ValidationError("selection ($i/n:C) needs 1 <= i <= n and n >= 2");
  Node node{DlrRoleKind::kSelect};
  node.width = n;
  node.position = i;
  node.filler.push_back(std::move(c));
  return DlrRole(std::make_shared<const Node>(std::move(node)));
}

DlrRole DlrRole::negation(DlrRole r) {
  Node node{DlrRoleKind::kNot};
  node.children.push_back(std::move(r));
  return DlrRole(std::make_shared<const Node>(std::move(node)));
}

DlrRole DlrRole::intersection(DlrRole a, DlrRole b) {
  Node node{DlrRoleKind::kAnd};
  node.children = {std::move(a), std::move(b)};
  return DlrRole(std::make_shared<const Node>(std::move(node)));
}

DlrRoleKind DlrRole::kind() const { return node_->kind; }
const std::string& DlrRole::name() const { return node_->name; }
int DlrRole::width() const { return node_->width; }
int DlrRole::position() const { return node_->position; }
const DlrConcept& DlrRole::filler() const { return node_->filler.at(0); }
std::size_t DlrRole::num_children() const { return node_->children.size(); }
const DlrRole& DlrRole::child(std::size_t i) const { return node_->children.at(i); }

bool operator==(const DlrRole& a, const DlrRole& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.name == y.name && x.width == y.width && x.position == y.position &&
         x.filler == y.filler && x.children == y.children;
}

DlrBinRel DlrBinRel::epsilon() {
  static const DlrBinRel eps(std::make_shared<const Node>(Node{DlrBinRelKind::kEpsilon}));
  return eps;
}

DlrBinRel DlrBinRel::project(DlrRole r, int i, int j) {
  if (i < 1 || j < 1) throw ValidationError("projection positions are 1-based");
  Node node{DlrBinRelKind::kProject};
  node.role.push_back(std::move(r));
  node.first = i;
  node.second = j;
  return DlrBinRel(std::make_shared<const Node>(std::move(node)));
}

DlrBinRel DlrBinRel::compose(DlrBinRel a, DlrBinRel b) {
  Node node{DlrBinRelKind::kCompose};
  node.children = {std::move(a), std::move(b)};
  return DlrBinRel(std::make_shared<const Node>(std::move(node)));
}

DlrBinRel DlrBinRel::union_of(DlrBinRel a, DlrBinRel b) {
  Node node{DlrBinRelKind::kUnion};
  node.children = {std::move(a), std::move(b)};
  return DlrBinRel(std::make_shared<const Node>(std::move(node)));
}

DlrBinRel DlrBinRel::star(DlrBinRel e) {
  Node node{DlrBinRelKind::kStar};
  node.children.push_back(std::move(e));
  return DlrBinRel(std::make_shared<const Node>(std::move(node)));
}

DlrBinRelKind DlrBinRel::kind() const { return node_->kind; }
const DlrRole& DlrBinRel::role() const { return node_->role.at(0); }
int DlrBinRel::first() const { return node_->first; }
int DlrBinRel::second() const { return node_->second; }
std::size_t DlrBinRel::num_children() const { return node_->children.size(); }
const DlrBinRel& DlrBinRel::child(std::size_t i) const { return node_->children.at(i); }

bool operator==(const DlrBinRel& a, const DlrBinRel& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.role == y.role && x.first == y.first && x.second == y.second && x.children == y.children;
}

DlrConcept DlrConcept::top() {
  static const DlrConcept t(std::make_shared<const Node>(Node{DlrConceptKind::kTop}));
  return t;
}

DlrConcept DlrConcept::atomic(std::string name) {
  if (!is_identifier(name)) throw ValidationError("invalid concept name '" + name + "'");
  return DlrConcept(std::make_shared<const Node>(Node{DlrConceptKind::kAtomic, std::move(name)}));
}

DlrConcept DlrConcept::negation(DlrConcept c) {
  Node node{DlrConceptKind::kNot};
  node.children.push_back(std::move(c));
  return DlrConcept(std::make_shared<const Node>(std::move(node)));
}

DlrConcept DlrConcept::conjunction(DlrConcept a, DlrConcept b) {
  Node node{DlrConceptKind::kAnd};
  node.children = {std::move(a), std::move(b)};
  return DlrConcept(std::make_shared<const Node>(std::move(node)));
}

DlrConcept DlrConcept::exists(DlrBinRel e, DlrConcept c) {
  Node node{DlrConceptKind::kExists};
  node.relation.push_back(std::move(e));
  node.children.push_back(std::move(c));
  return DlrConcept(std::make_shared<const Node>(std::move(node)));
}

DlrConcept DlrConcept::exists_project(int i, DlrRole r) {
  if (i < 1) throw ValidationError("positions are 1-based");
  Node node{DlrConceptKind::kExistsProject};
  node.position = i;
  node.role.push_back(std::move(r));
  return DlrConcept(std::make_shared<const Node>(std::move(node)));
}

DlrConcept DlrConcept::at_most(unsigned k, int i, DlrRole r) {
  if (i < 1) throw ValidationError("positions are 1-based");
  Node node{DlrConceptKind::kAtMost};
  node.position = i;
  node.bound = k;
  node.role.push_back(std::move(r));
  return DlrConcept(std::make_shared<const Node>(std::move(node)));
}

DlrConcept DlrConcept::disjunction(DlrConcept a, DlrConcept b) {
  return negation(conjunction(negation(std::move(a)), negation(std::move(b))));
}

DlrConceptKind DlrConcept::kind() const { return node_->kind; }
const std::string& DlrConcept::name() const { return node_->name; }
int DlrConcept::position() const { return node_->position; }
unsigned DlrConcept::bound() const { return node_->bound; }
const DlrRole& DlrConcept::role() const { return node_->role.at(0); }
const DlrBinRel& DlrConcept::relation() const { return node_->relation.at(0); }
std::size_t DlrConcept::num_children() const { return node_->children.size(); }
const DlrConcept& DlrConcept::child(std::size_t i) const { return node_->children.at(i); }

bool operator==(const DlrConcept& a, const DlrConcept& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.name == y.name && x.position == y.position && x.bound == y.bound && x.role == y.role &&
         x.relation == y.relation && x.children == y.children;
}

int dlr_n_max(const Vocabulary& vocab) {
  int n = 2;
  for (const auto& [name, arity] : vocab) {
    if (!is_top_relation_name(name)) n = std::max(n, arity);
  }
  return n;
}

int dlr_role_arity(const DlrRole& r, const Vocabulary& vocab) {
  switch (r.kind()) {
    case DlrRoleKind::kTop:
    case DlrRoleKind::kSelect: return r.width();
    case DlrRoleKind::kAtomic: {
      auto a = vocab.arity(r.name());
      if (!a) throw ValidationError("unknown role '" + r.name() + "'");
      if (*a < 2) throw ValidationError("'" + r.name() + "' is unary and cannot be used as a role");
      return *a;
    }
    case DlrRoleKind::kNot: return dlr_role_arity(r.child(0), vocab);
    case DlrRoleKind::kAnd: {
      const int a = dlr_role_arity(r.child(0), vocab);
      const int b = dlr_role_arity(r.child(1), vocab);
      if (a != b) {
        throw ValidationError("intersection of roles of arity " + std::to_string(a) + " and " + std::to_string(b));
      }
      return a;
    }
  }
  return 2;
}

namespace {

void validate_role(const DlrRole& r, const Vocabulary& vocab) {
  dlr_role_arity(r, vocab);
  if (r.is(DlrRoleKind::kSelect)) validate(r.filler(), vocab);
  for (std::size_t i = 0; i < r.num_children(); ++i) validate_role(r.child(i), vocab);
}

}  // namespace

void validate(const DlrBinRel& e, const Vocabulary& vocab) {
  if (e.is(DlrBinRelKind::kProject)) {
    validate_role(e.role(), vocab);
    const int arity = dlr_role_arity(e.role(), vocab);
    if (e.first() > arity || e.second() > arity) {
      throw ValidationError("projection |$" + std::to_string(e.first()) + ",$" + std::to_string(e.second()) +
                            " out of range for a role of arity " + std::to_string(arity));
    }
  }
  for (std::size_t i = 0; i < e.num_children(); ++i) validate(e.child(i), vocab);
}

void validate(const DlrConcept& c, const Vocabulary& vocab) {
  switch (c.kind()) {
    case DlrConceptKind::kAtomic: {
      auto a = vocab.arity(c.name());
      if (!a) throw ValidationError("unknown concept '" + c.name() + "'");
      if (*a != 1) throw ValidationError("'" + c.name() + "' has arity " + std::to_string(*a) + " and is not a concept");
      break;
    }
    case DlrConceptKind::kExists: validate(c.relation(), vocab); break;
    case DlrConceptKind::kExistsProject:
    case DlrConceptKind::kAtMost: {
      validate_role(c.role(), vocab);
      const int arity = dlr_role_arity(c.role(), vocab);
      if (c.position() > arity) {
        throw ValidationError("position $" + std::to_string(c.position()) + " out of range for a role of arity " +
                              std::to_string(arity));
      }
      break;
    }
    default: break;
  }
  for (std::size_t i = 0; i < c.num_children(); ++i) validate(c.child(i), vocab);
}

namespace {

// Atomic roles get the arity their context demands when it is known (a
// projection's indices only bound it from below, so default to 2 or the
// largest index).
void infer_role(const DlrRole& r, int arity, Vocabulary& out);
void infer_concept(const DlrConcept& c, Vocabulary& out);

int role_width_hint(const DlrRole& r) {
  switch (r.kind()) {
    case DlrRoleKind::kTop:
    case DlrRoleKind::kSelect: return r.width();
    case DlrRoleKind::kAtomic: return 0;
    case DlrRoleKind::kNot: return role_width_hint(r.child(0));
    case DlrRoleKind::kAnd: return std::max(role_width_hint(r.child(0)), role_width_hint(r.child(1)));
  }
  return 0;
}

void infer_role(const DlrRole& r, int arity, Vocabulary& out) {
  switch (r.kind()) {
    case DlrRoleKind::kAtomic:
      if (!out.contains(r.name())) out.add(r.name(), arity);
      return;
    case DlrRoleKind::kSelect: infer_concept(r.filler(), out); return;
    case DlrRoleKind::kTop: return;
    default:
      for (std::size_t i = 0; i < r.num_children(); ++i) infer_role(r.child(i), arity, out);
  }
}

void infer_binrel(const DlrBinRel& e, Vocabulary& out) {
  if (e.is(DlrBinRelKind::kProject)) {
    const int hint = role_width_hint(e.role());
    infer_role(e.role(), hint ? hint : std::max({2, e.first(), e.second()}), out);
  }
  for (std::size_t i = 0; i < e.num_children(); ++i) infer_binrel(e.child(i), out);
}

void infer_concept(const DlrConcept& c, Vocabulary& out) {
  switch (c.kind()) {
    case DlrConceptKind::kAtomic: out.add(c.name(), 1); break;
    case DlrConceptKind::kExists: infer_binrel(c.relation(), out); break;
    case DlrConceptKind::kExistsProject:
    case DlrConceptKind::kAtMost: {
      const int hint = role_width_hint(c.role());
      infer_role(c.role(), hint ? hint : std::max(2, c.position()), out);
      break;
    }
    default: break;
  }
  for (std::size_t i = 0; i < c.num_children(); ++i) infer_concept(c.child(i), out);
}

}  // namespace

Vocabulary infer_vocabulary(const DlrConcept& c) {
  Vocabulary out;
  infer_concept(c, out);
  return out;
}

void check_top_coverage(const Structure& s) {
  for (const auto& [name, rel] : s.relations()) {
    if (is_top_relation_name(name)) {
      if (top_relation_name(rel.arity()) != name) {
        throw StructureError(StructureErrorKind::kArityMismatch,
                             "relation '" + name + "' must have arity " + name.substr(3) + " to serve as a top relation");
      }
      continue;
    }
    if (rel.arity() < 2) continue;
    const std::string top = top_relation_name(rel.arity());
    if (!s.has_relation(top)) {
      throw StructureError(StructureErrorKind::kUnknownRelation,
                           "explicit top mode needs a relation '" + top + "' covering '" + name + "'");
    }
    const Relation& cover = s.relation(top);
    for (const auto& t : rel.tuples()) {
      if (!cover.contains(t)) {
        throw StructureError(StructureErrorKind::kMalformed, "'" + top + "' does not cover a tuple of '" + name + "'");
      }
    }
  }
}

namespace {

using Sem = detail::DlrSemantics<detail::StructureInterp>;

void prepare(const Structure& s, TopMode mode) {
  if (mode == TopMode::kExplicit) check_top_coverage(s);
}

}  // namespace

TupleSet dlr_role_extension(const Structure& s, const DlrRole& r, TopMode mode) {
  prepare(s, mode);
  validate_role(r, s.vocabulary());
  detail::StructureInterp in(s);
  Sem sem(in, s.vocabulary(), mode);
  return detail::dense_tuples(sem.role(r), s.size());
}

TupleSet dlr_binrel_extension(const Structure& s, const DlrBinRel& e, TopMode mode) {
  prepare(s, mode);
  validate(e, s.vocabulary());
  detail::StructureInterp in(s);
  Sem sem(in, s.vocabulary(), mode);
  const auto m = sem.binrel(e);
  TupleSet out;
  const std::size_t n = static_cast<std::size_t>(s.size());
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k]) out.insert({static_cast<ElementId>(k / n), static_cast<ElementId>(k % n)});
  }
  return out;
}

ElementSet dlr_concept_extension(const Structure& s, const DlrConcept& c, TopMode mode) {
  prepare(s, mode);
  validate(c, s.vocabulary());
  detail::StructureInterp in(s);
  Sem sem(in, s.vocabulary(), mode);
  return detail::dense_elements(sem.concept_values(c));
}

Structure with_full_tops(const Structure& s, int n_max) {
  Vocabulary extra;
  std::map<std::string, TupleSet> tops;
  for (int n = 2; n <= n_max; ++n) {
    const std::string name = top_relation_name(n);
    extra.add(name, n);
    TupleSet& all = tops[name];
    detail::for_each_tuple(s.size(), static_cast<std::size_t>(n), [&](const Tuple& t) { all.insert(t); });
  }
  return s.with_relations(extra, tops);
}

namespace {

template <class Pred>
bool any_concept(const DlrConcept& c, Pred&& pred);

template <class Pred>
bool any_role(const DlrRole& r, Pred&& pred) {
  if (r.is(DlrRoleKind::kSelect) && any_concept(r.filler(), pred)) return true;
  for (std::size_t i = 0; i < r.num_children(); ++i) {
    if (any_role(r.child(i), pred)) return true;
  }
  return false;
}

template <class Pred>
bool any_binrel(const DlrBinRel& e, Pred&& pred) {
  if (pred(e)) return true;
  if (e.is(DlrBinRelKind::kProject) && any_role(e.role(), pred)) return true;
  for (std::size_t i = 0; i < e.num_children(); ++i) {
    if (any_binrel(e.child(i), pred)) return true;
  }
  return false;
}

// pred is called on concepts and binary relations.
template <class Pred>
bool any_concept(const DlrConcept& c, Pred&& pred) {
  if (pred(c)) return true;
  if (c.is(DlrConceptKind::kExists) && any_binrel(c.relation(), pred)) return true;
  if ((c.is(DlrConceptKind::kExistsProject) || c.is(DlrConceptKind::kAtMost)) && any_role(c.role(), pred)) return true;
  for (std::size_t i = 0; i < c.num_children(); ++i) {
    if (any_concept(c.child(i), pred)) return true;
  }
  return false;
}

struct Overloaded {
  std::function<bool(const DlrConcept&)> concept_pred;
  std::function<bool(const DlrBinRel&)> binrel_pred;
  bool operator()(const DlrConcept& c) const { return concept_pred(c); }
  bool operator()(const DlrBinRel& e) const { return binrel_pred(e); }
};

}  // namespace

bool has_star(const DlrConcept& c) {
  Overloaded p{[](const DlrConcept&) { return false; }, [](const DlrBinRel& e) { return e.is(DlrBinRelKind::kStar); }};
  return any_concept(c, p);
}

bool has_at_most(const DlrConcept& c) {
  Overloaded p{[](const DlrConcept& x) { return x.is(DlrConceptKind::kAtMost); }, [](const DlrBinRel&) { return false; }};
  return any_concept(c, p);
}

bool has_compose_or_union(const DlrConcept& c) {
  Overloaded p{[](const DlrConcept&) { return false; },
               [](const DlrBinRel& e) { return e.is(DlrBinRelKind::kCompose) || e.is(DlrBinRelKind::kUnion); }};
  return any_concept(c, p);
}

namespace {

int width_in_role(const DlrRole& r);
int width_in_concept(const DlrConcept& c);

int width_in_binrel(const DlrBinRel& e) {
  int w = e.is(DlrBinRelKind::kProject) ? width_in_role(e.role()) : 0;
  for (std::size_t i = 0; i < e.num_children(); ++i) w = std::max(w, width_in_binrel(e.child(i)));
  return w;
}

int width_in_role(const DlrRole& r) {
  int w = (r.is(DlrRoleKind::kTop) || r.is(DlrRoleKind::kSelect)) ? r.width() : 0;
  if (r.is(DlrRoleKind::kSelect)) w = std::max(w, width_in_concept(r.filler()));
  for (std::size_t i = 0; i < r.num_children(); ++i) w = std::max(w, width_in_role(r.child(i)));
  return w;
}

int width_in_concept(const DlrConcept& c) {
  int w = 0;
  if (c.is(DlrConceptKind::kExists)) w = width_in_binrel(c.relation());
  if (c.is(DlrConceptKind::kExistsProject) || c.is(DlrConceptKind::kAtMost)) w = width_in_role(c.role());
  for (std::size_t i = 0; i < c.num_children(); ++i) w = std::max(w, width_in_concept(c.child(i)));
  return w;
}

std::size_t role_size(const DlrRole& r);
std::size_t binrel_size(const DlrBinRel& e) {
  std::size_t n = 1 + (e.is(DlrBinRelKind::kProject) ? role_size(e.role()) : 0);
  for (std::size_t i = 0; i < e.num_children(); ++i) n += binrel_size(e.child(i));
  return n;
}
std::size_t role_size(const DlrRole& r) {
  std::size_t n = 1 + (r.is(DlrRoleKind::kSelect) ? concept_size(r.filler()) : 0);
  for (std::size_t i = 0; i < r.num_children(); ++i) n += role_size(r.child(i));
  return n;
}

}  // namespace

int max_top_width(const DlrConcept& c) { return width_in_concept(c); }

std::size_t concept_size(const DlrConcept& c) {
  std::size_t n = 1;
  if (c.is(DlrConceptKind::kExists)) n += binrel_size(c.relation());
  if (c.is(DlrConceptKind::kExistsProject) || c.is(DlrConceptKind::kAtMost)) n += role_size(c.role());
  for (std::size_t i = 0; i < c.num_children(); ++i) n += concept_size(c.child(i));
  return n;
}

}  // namespace u1
