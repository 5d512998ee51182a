#include <optional>

#include "text_cursor.hpp"
#include "u1/dl.hpp"
#include "u1/errors.hpp"

namespace u1 {

namespace {

bool is_keyword(const std::string& w) { return w == "exists" || w == "top" || w == "eps" || w == "perm"; }

class DlParser {
 public:
  explicit DlParser(std::string_view text) : in_(text) {}

  Concept concept_all() {
    Concept c = parse_concept_term();
    in_.expect_end();
    return c;
  }

  Role role_all() {
    Role r = role();
    in_.expect_end();
    return r;
  }

 private:
  Concept parse_concept_term() {
    if (in_.accept("~")) return Concept::negation(parse_concept_term());
    if (in_.accept("(")) {
      Concept acc = parse_concept_term();
      if (!in_.looking_at("&")) in_.fail("expected '&'" + in_.found());
      while (in_.accept("&")) acc = Concept::conjunction(acc, parse_concept_term());
      in_.expect(")");
      return acc;
    }
    if (in_.accept_keyword("top")) return Concept::top();
    if (in_.accept_keyword("exists")) {
      Role r = role();
      in_.expect(".");
      in_.expect("(");
      std::vector<Concept> args{parse_concept_term()};
      while (in_.accept(",")) args.push_back(parse_concept_term());
      in_.expect(")");
      return Concept::exists(std::move(r), std::move(args));
    }
    const auto at = in_.mark();
    std::string name = in_.identifier("a concept");
    if (is_keyword(name)) {
      in_.reset(at);
      in_.fail("'" + name + "' is reserved and cannot name a concept");
    }
    return Concept::atomic(std::move(name));
  }

  Role role() {
    if (in_.accept("~")) return Role::negation(role());
    if (in_.accept("(")) {
      Role acc = role();
      if (!in_.looking_at("&")) in_.fail("expected '&'" + in_.found());
      while (in_.accept("&")) acc = Role::intersection(acc, role());
      in_.expect(")");
      return acc;
    }
    if (in_.accept_keyword("eps")) return Role::epsilon();
    if (in_.looking_at("perm") && in_.accept("perm[")) {
      const auto at = in_.mark();
      std::vector<int> values{static_cast<int>(in_.integer("a surjection value"))};
      while (in_.accept(",")) values.push_back(static_cast<int>(in_.integer("a surjection value")));
      in_.expect("]");
      std::optional<Surjection> sigma;
      try {
        sigma.emplace(std::move(values));
      } catch (const ValidationError& e) {
        in_.reset(at);
        in_.fail(e.what());
      }
      return Role::apply(*sigma, role());
    }
    const auto at = in_.mark();
    std::string name = in_.identifier("a role");
    if (is_keyword(name)) {
      in_.reset(at);
      in_.fail("'" + name + "' is reserved and cannot name a role");
    }
    return Role::atomic(std::move(name));
  }

  detail::TextCursor in_;
};

}  // namespace

Concept parse_concept(std::string_view text) { return DlParser(text).concept_all(); }
Role parse_role(std::string_view text) { return DlParser(text).role_all(); }

std::string print_role(const Role& r) {
  switch (r.kind()) {
    case RoleKind::kAtomic: return r.name();
    case RoleKind::kEpsilon: return "eps";
    case RoleKind::kNot: return "~" + print_role(r.child(0));
    case RoleKind::kAnd: return "(" + print_role(r.child(0)) + " & " + print_role(r.child(1)) + ")";
    case RoleKind::kApply: {
      std::string out = "perm[";
      const auto& v = r.surjection().values();
      for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
      return out + "] " + print_role(r.child(0));
    }
  }
  return "?";
}

std::string print_concept(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::kTop: return "top";
    case ConceptKind::kAtomic: return c.name();
    case ConceptKind::kNot: return "~" + print_concept(c.child(0));
    case ConceptKind::kAnd: return "(" + print_concept(c.child(0)) + " & " + print_concept(c.child(1)) + ")";
    case ConceptKind::kExists: {
      std::string out = "exists " + print_role(c.role()) + ".(";
      for (std::size_t i = 0; i < c.num_children(); ++i) out += (i ? ", " : "") + print_concept(c.child(i));
      return out + ")";
    }
  }
  return "?";
}

}  // namespace u1
