#include "u1/detail/compiled.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace u1::detail {

int Program::slot_of(const std::string& var) const {
  auto it = std::find(slot_names.begin(), slot_names.end(), var);
  if (it == slot_names.end()) return -1;
  return static_cast<int>(it - slot_names.begin());
}

namespace {

class Compiler {
 public:
  explicit Compiler(Program& p) : p_(p) {}

  void prepare(const Formula& f) {
    for (const auto& v : all_variables(f)) {
      slots_.emplace(v, static_cast<int>(p_.slot_names.size()));
      p_.slot_names.push_back(v);
    }
    std::map<std::string, int> arities;
    collect_relations(f, arities);
    for (const auto& [name, arity] : arities) {
      rels_.emplace(name, static_cast<int>(p_.relation_names.size()));
      p_.relation_names.push_back(name);
      p_.relation_arities.push_back(arity);
    }
  }

  int emit(const Formula& f) {
    Program::Node n{f.kind()};
    if (f.is(FormulaKind::kCount)) {
      n.cmp = f.comparator();
      n.bound = f.bound();
    }
    if (f.is(FormulaKind::kAtom)) {
      n.rel = rels_.at(f.relation());
    }
    if (f.variables().size() > 64) throw std::length_error("atoms and blocks are limited to 64 variables");
    for (const auto& v : f.variables()) n.slots.push_back(slots_.at(v));
    for (std::size_t i = 0; i < f.num_children(); ++i) n.children.push_back(emit(f.child(i)));
    p_.nodes.push_back(std::move(n));
    return static_cast<int>(p_.nodes.size() - 1);
  }

 private:
  static void collect_relations(const Formula& f, std::map<std::string, int>& out) {
    if (f.is(FormulaKind::kAtom)) out.emplace(f.relation(), static_cast<int>(f.variables().size()));
    for (std::size_t i = 0; i < f.num_children(); ++i) collect_relations(f.child(i), out);
  }

  Program& p_;
  std::map<std::string, int> slots_;
  std::map<std::string, int> rels_;
};

}  // namespace

Program compile(const Formula& f) {
  Program p;
  Compiler c(p);
  c.prepare(f);
  p.root = c.emit(f);
  return p;
}

}  // namespace u1::detail
