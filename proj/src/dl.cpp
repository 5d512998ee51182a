#include "u1/dl.hpp"

#include <algorithm>

#include "u1/detail/dl_semantics.hpp"
#include "u1/detail/fo_semantics.hpp"
#include "u1/errors.hpp"

namespace u1 {

Surjection::Surjection(std::vector<int> values) : values_(std::move(values)) {
  const int k = source_arity();
  if (k < 2) throw ValidationError("a surjection needs source arity >= 2");
  target_ = *std::max_element(values_.begin(), values_.end());
  if (target_ < 2) throw ValidationError("a surjection needs target arity >= 2");
  std::vector<bool> hit(static_cast<std::size_t>(target_) + 1, false);
  for (int v : values_) {
    if (v < 1) throw ValidationError("surjection values are 1-based");
    hit[static_cast<std::size_t>(v)] = true;
  }
  for (int m = 1; m <= target_; ++m) {
    if (!hit[static_cast<std::size_t>(m)]) {
      throw ValidationError("perm[...] misses target position " + std::to_string(m) + " and is not onto");
    }
  }
}

Surjection Surjection::inverse() const {
  if (!is_permutation()) throw ValidationError("only permutations have inverses");
  std::vector<int> inv(values_.size());
  for (std::size_t j = 0; j < values_.size(); ++j) inv[static_cast<std::size_t>(values_[j] - 1)] = static_cast<int>(j + 1);
  return Surjection(std::move(inv));
}

struct Role::Node {
  RoleKind kind;
  std::string name{};
  std::vector<Surjection> sigma{};
  std::vector<Role> children{};
};

Role Role::atomic(std::string name) {
  if (!is_identifier(name)) throw ValidationError("invalid role name '" + name + "'");
  return Role(std::make_shared<const Node>(Node{RoleKind::kAtomic, std::move(name)}));
}

Role Role::epsilon() {
  static const Role eps(std::make_shared<const Node>(Node{RoleKind::kEpsilon}));
  return eps;
}

Role Role::negation(Role r) { return Role(std::make_shared<const Node>(Node{RoleKind::kNot, {}, {}, {std::move(r)}})); }

Role Role::intersection(Role a, Role b) {
  return Role(std::make_shared<const Node>(Node{RoleKind::kAnd, {}, {}, {std::move(a), std::move(b)}}));
}

Role Role::apply(Surjection sigma, Role r) {
  return Role(std::make_shared<const Node>(Node{RoleKind::kApply, {}, {std::move(sigma)}, {std::move(r)}}));
}

Role Role::universal() { return negation(intersection(epsilon(), negation(epsilon()))); }

Role Role::union_of(Role a, Role b) { return negation(intersection(negation(std::move(a)), negation(std::move(b)))); }

RoleKind Role::kind() const { return node_->kind; }
const std::string& Role::name() const { return node_->name; }
const Surjection& Role::surjection() const {
  if (node_->sigma.empty()) throw std::logic_error("role is not a surjection application");
  return node_->sigma.front();
}
std::size_t Role::num_children() const { return node_->children.size(); }
const Role& Role::child(std::size_t i) const { return node_->children.at(i); }

bool operator==(const Role& a, const Role& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->name == b.node_->name && a.node_->sigma == b.node_->sigma &&
         a.node_->children == b.node_->children;
}

struct Concept::Node {
  ConceptKind kind;
  std::string name{};
  std::vector<Role> role{};
  std::vector<Concept> children{};
};

Concept Concept::top() {
  static const Concept t(std::make_shared<const Node>(Node{ConceptKind::kTop}));
  return t;
}

Concept Concept::atomic(std::string name) {
  if (!is_identifier(name)) throw ValidationError("invalid concept name '" + name + "'");
  return Concept(std::make_shared<const Node>(Node{ConceptKind::kAtomic, std::move(name)}));
}

Concept Concept::negation(Concept c) {
  return Concept(std::make_shared<const Node>(Node{ConceptKind::kNot, {}, {}, {std::move(c)}}));
}

Concept Concept::conjunction(Concept a, Concept b) {
  return Concept(std::make_shared<const Node>(Node{ConceptKind::kAnd, {}, {}, {std::move(a), std::move(b)}}));
}

Concept Concept::exists(Role r, std::vector<Concept> args) {
  if (args.empty()) throw ValidationError("an existential restriction needs at least one argument concept");
  return Concept(std::make_shared<const Node>(Node{ConceptKind::kExists, {}, {std::move(r)}, std::move(args)}));
}

Concept Concept::bottom() { return negation(top()); }

Concept Concept::disjunction(Concept a, Concept b) {
  return negation(conjunction(negation(std::move(a)), negation(std::move(b))));
}

ConceptKind Concept::kind() const { return node_->kind; }
const std::string& Concept::name() const { return node_->name; }
const Role& Concept::role() const {
  if (node_->role.empty()) throw std::logic_error("concept is not an existential restriction");
  return node_->role.front();
}
std::size_t Concept::num_children() const { return node_->children.size(); }
const Concept& Concept::child(std::size_t i) const { return node_->children.at(i); }

bool operator==(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->name == b.node_->name && a.node_->role == b.node_->role &&
         a.node_->children == b.node_->children;
}

int role_arity(const Role& r, const Vocabulary& vocab) {
  switch (r.kind()) {
    case RoleKind::kAtomic: {
      auto a = vocab.arity(r.name());
      if (!a) throw ValidationError("unknown role '" + r.name() + "'");
      if (*a < 2) throw ValidationError("'" + r.name() + "' is unary and cannot be used as a role");
      return *a;
    }
    case RoleKind::kEpsilon: return 2;
    case RoleKind::kNot: return role_arity(r.child(0), vocab);
    case RoleKind::kAnd: {
      const int a = role_arity(r.child(0), vocab);
      const int b = role_arity(r.child(1), vocab);
      return a == b ? a : 2;
    }
    case RoleKind::kApply:
      return role_arity(r.child(0), vocab) == r.surjection().source_arity() ? r.surjection().target_arity() : 2;
  }
  return 2;
}

void validate(const Concept& c, const Vocabulary& vocab) {
  switch (c.kind()) {
    case ConceptKind::kTop: return;
    case ConceptKind::kAtomic: {
      auto a = vocab.arity(c.name());
      if (!a) throw ValidationError("unknown concept '" + c.name() + "'");
      if (*a != 1) throw ValidationError("'" + c.name() + "' has arity " + std::to_string(*a) + " and is not a concept");
      return;
    }
    case ConceptKind::kExists: {
      const int arity = role_arity(c.role(), vocab);
      if (static_cast<int>(c.num_children()) != arity - 1) {
        throw ValidationError("role " + print_role(c.role()) + " has arity " + std::to_string(arity) + " so needs " +
                              std::to_string(arity - 1) + " argument concepts, got " + std::to_string(c.num_children()));
      }
      break;
    }
    default: break;
  }
  for (std::size_t i = 0; i < c.num_children(); ++i) validate(c.child(i), vocab);
}

namespace {

// Propagates the arity a role position must have down to atomic roles.
void infer_role(const Role& r, int arity, Vocabulary& out) {
  switch (r.kind()) {
    case RoleKind::kAtomic: out.add(r.name(), arity); return;
    case RoleKind::kEpsilon: return;
    case RoleKind::kNot: infer_role(r.child(0), arity, out); return;
    case RoleKind::kAnd:
      infer_role(r.child(0), arity, out);
      infer_role(r.child(1), arity, out);
      return;
    case RoleKind::kApply: infer_role(r.child(0), r.surjection().source_arity(), out); return;
  }
}

void infer_concept(const Concept& c, Vocabulary& out) {
  if (c.is(ConceptKind::kAtomic)) out.add(c.name(), 1);
  if (c.is(ConceptKind::kExists)) infer_role(c.role(), static_cast<int>(c.num_children()) + 1, out);
  for (std::size_t i = 0; i < c.num_children(); ++i) infer_concept(c.child(i), out);
}

}  // namespace

Vocabulary infer_vocabulary(const Concept& c) {
  Vocabulary out;
  infer_concept(c, out);
  return out;
}

TupleSet role_extension(const Structure& s, const Role& r) {
  detail::StructureInterp in(s);
  detail::DlSemantics<detail::StructureInterp> sem(in, s.vocabulary());
  return detail::dense_tuples(sem.role(r), s.size());
}

ElementSet concept_extension(const Structure& s, const Concept& c) {
  validate(c, s.vocabulary());
  detail::StructureInterp in(s);
  detail::DlSemantics<detail::StructureInterp> sem(in, s.vocabulary());
  return detail::dense_elements(sem.concept_values(c));
}

std::size_t concept_size(const Concept& c) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < c.num_children(); ++i) n += concept_size(c.child(i));
  return n;
}

}  // namespace u1
