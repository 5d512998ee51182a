#include <optional>

#include "text_cursor.hpp"
#include "u1/dlr.hpp"
#include "u1/errors.hpp"

namespace u1 {

namespace {

bool is_reserved(const std::string& w) {
  return w == "exists" || w == "eps" || w == "o" || w == "u" || is_top_relation_name(w);
}

// A parsed operand that is a role until it is used as a binary relation.
struct Term {
  std::optional<DlrRole> role;
  std::optional<DlrBinRel> rel;
};

class DlrParser {
 public:
  explicit DlrParser(std::string_view text) : in_(text) {}

  DlrConcept concept_all() {
    DlrConcept c = concept_expr();
    in_.expect_end();
    return c;
  }
  DlrRole role_all() {
    DlrRole r = role_expr();
    in_.expect_end();
    return r;
  }
  DlrBinRel binrel_all() {
    DlrBinRel e = binrel_expr();
    in_.expect_end();
    return e;
  }

 private:
  int position(const char* what) {
    const auto at = in_.mark();
    const unsigned v = in_.integer(what);
    if (v < 1) {
      in_.reset(at);
      in_.fail("positions are 1-based");
    }
    return static_cast<int>(v);
  }

  DlrConcept concept_expr() {
    if (in_.accept("~")) return DlrConcept::negation(concept_expr());
    if (in_.accept("exists[$")) {
      const int i = position("a position");
      in_.expect("]");
      return DlrConcept::exists_project(i, role_expr());
    }
    if (in_.accept_keyword("exists")) {
      DlrBinRel e = binrel_expr();
      in_.expect(".");
      return DlrConcept::exists(std::move(e), concept_expr());
    }
    if (in_.accept("(<=")) {
      const unsigned k = in_.integer("a bound");
      in_.expect("[$");
      const int i = position("a position");
      in_.expect("]");
      DlrRole r = role_expr();
      in_.expect(")");
      return DlrConcept::at_most(k, i, std::move(r));
    }
    if (in_.accept("(")) {
      DlrConcept acc = concept_expr();
      while (in_.accept("&")) acc = DlrConcept::conjunction(acc, concept_expr());
      in_.expect(")");
      return acc;
    }
    if (in_.accept_keyword("top1")) return DlrConcept::top();
    const auto at = in_.mark();
    std::string name = in_.identifier("a concept");
    if (is_reserved(name)) {
      in_.reset(at);
      in_.fail("'" + name + "' is reserved and cannot name a concept");
    }
    return DlrConcept::atomic(std::move(name));
  }

  DlrRole select() {
    const int i = position("a position");
    in_.expect("/");
    const auto at = in_.mark();
    const int n = static_cast<int>(in_.integer("a width"));
    if (n < 2 || i > n) {
      in_.reset(at);
      in_.fail("selection ($i/n:C) needs 1 <= i <= n and n >= 2");
    }
    in_.expect(":");
    DlrConcept c = concept_expr();
    in_.expect(")");
    return DlrRole::select(i, n, std::move(c));
  }

  // NAME or top<n>.
  DlrRole named_role() {
    const auto at = in_.mark();
    std::string name = in_.identifier("a role");
    if (is_top_relation_name(name)) {
      const int n = std::stoi(name.substr(3));
      if (n < 2) {
        in_.reset(at);
        in_.fail("top roles need width >= 2; top1 is a concept");
      }
      return DlrRole::top(n);
    }
    if (is_reserved(name)) {
      in_.reset(at);
      in_.fail("'" + name + "' is reserved and cannot name a role");
    }
    return DlrRole::atomic(std::move(name));
  }

  DlrRole role_expr() {
    if (in_.accept("~")) return DlrRole::negation(role_expr());
    if (in_.accept("($")) return select();
    if (in_.accept("(")) {
      DlrRole acc = role_expr();
      if (!in_.looking_at("&")) in_.fail("expected '&'" + in_.found());
      while (in_.accept("&")) acc = DlrRole::intersection(acc, role_expr());
      in_.expect(")");
      return acc;
    }
    return named_role();
  }

  DlrBinRel as_binrel(const Term& t) {
    if (t.rel) return *t.rel;
    return DlrBinRel::project(*t.role, 1, 2);
  }

  DlrRole as_role(const Term& t) {
    if (!t.role) in_.fail("expected a role, found a binary relation");
    return *t.role;
  }

  Term primary() {
    if (in_.accept_keyword("eps")) return {std::nullopt, DlrBinRel::epsilon()};
    if (in_.accept("~")) return {DlrRole::negation(role_expr()), std::nullopt};
    if (in_.accept("($")) return {select(), std::nullopt};
    if (in_.accept("(")) {
      Term first = term();
      if (in_.looking_at("&")) {
        DlrRole acc = as_role(first);
        while (in_.accept("&")) acc = DlrRole::intersection(acc, as_role(term()));
        in_.expect(")");
        return {acc, std::nullopt};
      }
      if (in_.accept_keyword("o")) {
        DlrBinRel acc = DlrBinRel::compose(as_binrel(first), as_binrel(term()));
        while (in_.accept_keyword("o")) acc = DlrBinRel::compose(acc, as_binrel(term()));
        in_.expect(")");
        return {std::nullopt, acc};
      }
      if (in_.accept_keyword("u")) {
        DlrBinRel acc = DlrBinRel::union_of(as_binrel(first), as_binrel(term()));
        while (in_.accept_keyword("u")) acc = DlrBinRel::union_of(acc, as_binrel(term()));
        in_.expect(")");
        return {std::nullopt, acc};
      }
      in_.expect(")");
      return first;
    }
    return {named_role(), std::nullopt};
  }

  Term term() {
    Term t = primary();
    while (true) {
      if (in_.accept("|$")) {
        DlrRole r = as_role(t);
        const int i = position("a position");
        in_.expect(",$");
        const int j = position("a position");
        t = {std::nullopt, DlrBinRel::project(std::move(r), i, j)};
      } else if (in_.accept("*")) {
        t = {std::nullopt, DlrBinRel::star(as_binrel(t))};
      } else {
        return t;
      }
    }
  }

  DlrBinRel binrel_expr() { return as_binrel(term()); }

  detail::TextCursor in_;
};

}  // namespace

DlrConcept parse_dlr_concept(std::string_view text) { return DlrParser(text).concept_all(); }
DlrRole parse_dlr_role(std::string_view text) { return DlrParser(text).role_all(); }
DlrBinRel parse_dlr_binrel(std::string_view text) { return DlrParser(text).binrel_all(); }

std::string print_dlr_role(const DlrRole& r) {
  switch (r.kind()) {
    case DlrRoleKind::kTop: return top_relation_name(r.width());
    case DlrRoleKind::kAtomic: return r.name();
    case DlrRoleKind::kSelect:
      return "($" + std::to_string(r.position()) + "/" + std::to_string(r.width()) + ":" + print_dlr_concept(r.filler()) +
             ")";
    case DlrRoleKind::kNot: return "~" + print_dlr_role(r.child(0));
    case DlrRoleKind::kAnd: return "(" + print_dlr_role(r.child(0)) + " & " + print_dlr_role(r.child(1)) + ")";
  }
  return "?";
}

std::string print_dlr_binrel(const DlrBinRel& e) {
  switch (e.kind()) {
    case DlrBinRelKind::kEpsilon: return "eps";
    case DlrBinRelKind::kProject: {
      return print_dlr_role(e.role()) + "|$" + std::to_string(e.first()) + ",$" + std::to_string(e.second());
    }
    case DlrBinRelKind::kCompose: return "(" + print_dlr_binrel(e.child(0)) + " o " + print_dlr_binrel(e.child(1)) + ")";
    case DlrBinRelKind::kUnion: return "(" + print_dlr_binrel(e.child(0)) + " u " + print_dlr_binrel(e.child(1)) + ")";
    case DlrBinRelKind::kStar: return print_dlr_binrel(e.child(0)) + "*";
  }
  return "?";
}

std::string print_dlr_concept(const DlrConcept& c) {
  switch (c.kind()) {
    case DlrConceptKind::kTop: return "top1";
    case DlrConceptKind::kAtomic: return c.name();
    case DlrConceptKind::kNot: return "~" + print_dlr_concept(c.child(0));
    case DlrConceptKind::kAnd: return "(" + print_dlr_concept(c.child(0)) + " & " + print_dlr_concept(c.child(1)) + ")";
    case DlrConceptKind::kExists: return "exists " + print_dlr_binrel(c.relation()) + " . " + print_dlr_concept(c.child(0));
    case DlrConceptKind::kExistsProject:
      return "exists[$" + std::to_string(c.position()) + "] " + print_dlr_role(c.role());
    case DlrConceptKind::kAtMost:
      return "(<=" + std::to_string(c.bound()) + "[$" + std::to_string(c.position()) + "] " + print_dlr_role(c.role()) +
             ")";
  }
  return "?";
}

}  // namespace u1
