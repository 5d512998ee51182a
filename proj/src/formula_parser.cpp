#include <sstream>

#include "text_cursor.hpp"
#include "u1/errors.hpp"
#include "u1/formula.hpp"

namespace u1 {

namespace {

bool is_reserved_variable(const std::string& name) {
  return name == "true" || name == "false" || name == "E" || name == "A";
}

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : in_(text) {}

  Formula parse_all() {
    Formula f = parse();
    in_.expect_end();
    return f;
  }

 private:
  Formula parse() {
    const char c = in_.peek();
    if (c == '\0') in_.fail("expected a formula" + in_.found());
    if (in_.accept("~")) return Formula::negation(parse());
    if (c == '(') return parse_group();
    if (in_.looking_at("E[")) return parse_count();

    const auto start = in_.mark();
    std::string name = in_.identifier("a formula");
    if (name == "true") return Formula::top();
    if (name == "false") return Formula::bottom();
    if (in_.peek_raw() == '(') return parse_atom(std::move(name));
    if (name == "E" || name == "A") return parse_block(name == "E");

    if (!in_.accept("=")) {
      in_.reset(start);
      in_.identifier("a formula");
      in_.fail("expected '(' or '=' after '" + name + "'" + in_.found());
    }
    check_variable(name, start);
    const auto rhs_mark = in_.mark();
    std::string rhs = in_.identifier("a variable");
    check_variable(rhs, rhs_mark);
    return Formula::equals(std::move(name), std::move(rhs));
  }

  Formula parse_group() {
    in_.expect("(");
    Formula acc = parse();
    if (in_.accept(")")) return acc;
    if (in_.accept("->")) {
      Formula rhs = parse();
      if (in_.looking_at("->")) in_.fail("chained '->' needs parentheses");
      in_.expect(")");
      return Formula::implication(std::move(acc), std::move(rhs));
    }
    char op = in_.peek();
    if (op != '&' && op != '|') in_.fail("expected '&', '|', '->' or ')'" + in_.found());
    while (in_.accept(std::string_view(&op, 1))) {
      Formula rhs = parse();
      acc = op == '&' ? Formula::conjunction(std::move(acc), std::move(rhs))
                      : Formula::disjunction(std::move(acc), std::move(rhs));
    }
    const char next = in_.peek();
    if (next == '&' || next == '|' || in_.looking_at("->")) {
      in_.fail("mixed connectives need parentheses");
    }
    in_.expect(")");
    return acc;
  }

  Formula parse_atom(std::string relation) {
    in_.expect("(");
    std::vector<std::string> args;
    do {
      const auto m = in_.mark();
      std::string v = in_.identifier("a variable");
      check_variable(v, m);
      args.push_back(std::move(v));
    } while (in_.accept(","));
    in_.expect(")");
    return Formula::atom(std::move(relation), std::move(args));
  }

  Formula parse_block(bool existential) {
    std::vector<std::string> vars;
    while (in_.at_identifier()) {
      const auto m = in_.mark();
      std::string v = in_.identifier("a variable");
      check_variable(v, m);
      for (const auto& seen : vars) {
        if (seen == v) {
          in_.reset(m);
          in_.fail("duplicate variable '" + v + "' in quantifier block");
        }
      }
      vars.push_back(std::move(v));
    }
    if (vars.empty()) in_.fail("expected a variable after quantifier" + in_.found());
    in_.expect(".");
    Formula body = parse();
    return existential ? Formula::exists(std::move(vars), std::move(body))
                       : Formula::forall(std::move(vars), std::move(body));
  }

  Formula parse_count() {
    in_.expect("E[");
    Comparator cmp;
    if (in_.accept(">=")) {
      cmp = Comparator::kAtLeast;
    } else if (in_.accept("<=")) {
      cmp = Comparator::kAtMost;
    } else if (in_.accept("=")) {
      cmp = Comparator::kExactly;
    } else {
      in_.fail("expected '>=', '<=' or '='" + in_.found());
    }
    unsigned k = in_.integer("a counting bound");
    in_.expect("]");
    const auto m = in_.mark();
    std::string v = in_.identifier("a variable");
    check_variable(v, m);
    in_.expect(".");
    return Formula::count(cmp, k, std::move(v), parse());
  }

  void check_variable(const std::string& name, detail::TextCursor::Mark m) {
    if (is_reserved_variable(name)) {
      in_.reset(m);
      in_.skip_ws();
      in_.fail("'" + name + "' is reserved and cannot be a variable");
    }
  }

  detail::TextCursor in_;
};

void print(const Formula& f, std::ostringstream& out) {
  auto list = [&](const std::vector<std::string>& vars, const char* sep) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (i > 0) out << sep;
      out << vars[i];
    }
  };
  auto binary = [&](const char* op) {
    out << '(';
    print(f.child(0), out);
    out << ' ' << op << ' ';
    print(f.child(1), out);
    out << ')';
  };
  switch (f.kind()) {
    case FormulaKind::kTop: out << "true"; break;
    case FormulaKind::kBottom: out << "false"; break;
    case FormulaKind::kAtom:
      out << f.relation() << '(';
      list(f.variables(), ",");
      out << ')';
      break;
    case FormulaKind::kEquals: out << f.variables()[0] << " = " << f.variables()[1]; break;
    case FormulaKind::kNot:
      out << '~';
      print(f.child(0), out);
      break;
    case FormulaKind::kAnd: binary("&"); break;
    case FormulaKind::kOr: binary("|"); break;
    case FormulaKind::kImplies: binary("->"); break;
    case FormulaKind::kExists:
    case FormulaKind::kForall:
      out << (f.is(FormulaKind::kExists) ? "E " : "A ");
      list(f.variables(), " ");
      out << ". ";
      print(f.body(), out);
      break;
    case FormulaKind::kCount:
      out << "E[" << to_string(f.comparator()) << f.bound() << "] " << f.variables()[0] << ". ";
      print(f.body(), out);
      break;
  }
}

}  // namespace

Formula parse_formula(std::string_view text) {
  FormulaParser parser(text);
  try {
    return parser.parse_all();
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

Formula parse_formula(std::string_view text, const Vocabulary& vocab) {
  Formula f = parse_formula(text);
  validate(f, vocab);
  return f;
}

std::string print_formula(const Formula& f) {
  std::ostringstream out;
  print(f, out);
  return out.str();
}

}  // namespace u1
