#include "u1/eval.hpp"

#include "u1/detail/compiled.hpp"
#include "u1/detail/fo_semantics.hpp"
#include "u1/errors.hpp"

namespace u1 {

namespace {

using detail::Tri;

struct StructureLookup {
  std::vector<const Relation*> rels;
  Tri operator()(int rel, const int* args, int arity) const {
    return detail::tri(rels[static_cast<std::size_t>(rel)]->contains(std::span<const int>(args, static_cast<std::size_t>(arity))));
  }
};

StructureLookup make_lookup(const Structure& s, const detail::Program& p) {
  StructureLookup lookup;
  for (std::size_t i = 0; i < p.relation_names.size(); ++i) lookup.rels.push_back(&s.relation(p.relation_names[i]));
  return lookup;
}

void check_assignment(const Structure& s, const Assignment& a, const Formula& f) {
  for (const auto& v : free_variables(f)) {
    auto it = a.find(v);
    if (it == a.end()) throw EvalError("free variable '" + v + "' is unassigned");
  }
  for (const auto& [v, e] : a) {
    if (e < 0 || e >= s.size()) throw EvalError("variable '" + v + "' is assigned an element outside the domain");
  }
}

std::optional<std::string> sole_free_variable(const Formula& f) {
  auto free = free_variables(f);
  if (free.size() > 1) {
    std::string names;
    for (const auto& v : free) names += (names.empty() ? "" : ", ") + v;
    throw EvalError("satisfaction sets need at most one free variable, found " + names);
  }
  if (free.empty()) return std::nullopt;
  return *free.begin();
}

// Compiled kernel; parallel over the domain when requested.
SatisfactionSet satisfaction_kernel(const Structure& s, const Formula& f, bool parallel) {
  check_vocabulary(s, f);
  SatisfactionSet out{f, sole_free_variable(f), {}};
  const detail::Program program = detail::compile(f);
  const StructureLookup lookup = make_lookup(s, program);
  const int n = s.size();
  const int slot = out.variable ? program.slot_of(*out.variable) : -1;

  if (slot < 0) {
    std::vector<int> env(program.slot_names.size(), 0);
    StructureLookup l = lookup;
    detail::Machine<StructureLookup> m(program, l, n);
    if (m.run(env) == Tri::kTrue) {
      for (int e = 0; e < n; ++e) out.elements.push_back(e);
    }
    return out;
  }

  std::vector<char> member(static_cast<std::size_t>(n), 0);
#pragma omp parallel if (parallel && n > 1)
  {
    StructureLookup l = lookup;
    detail::Machine<StructureLookup> m(program, l, n);
    std::vector<int> env(program.slot_names.size(), 0);
#pragma omp for schedule(dynamic)
    for (int e = 0; e < n; ++e) {
      env[static_cast<std::size_t>(slot)] = e;
      member[static_cast<std::size_t>(e)] = m.run(env) == Tri::kTrue ? 1 : 0;
    }
  }
  for (int e = 0; e < n; ++e) {
    if (member[static_cast<std::size_t>(e)]) out.elements.push_back(e);
  }
  return out;
}

}  // namespace

void check_vocabulary(const Structure& s, const Formula& f) {
  if (f.is(FormulaKind::kAtom)) {
    if (!s.has_relation(f.relation())) throw EvalError("structure has no relation '" + f.relation() + "'");
    const int arity = s.relation(f.relation()).arity();
    if (arity != static_cast<int>(f.variables().size())) {
      throw EvalError("relation '" + f.relation() + "' has arity " + std::to_string(arity) + " in the structure but " +
                      std::to_string(f.variables().size()) + " arguments in the formula");
    }
  }
  for (std::size_t i = 0; i < f.num_children(); ++i) check_vocabulary(s, f.child(i));
}

Assignment parse_assignment(const Structure& s, std::string_view text) {
  Assignment a;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw EvalError("assignment item '" + std::string(item) + "' is not of the form var=element");
    auto trim = [](std::string_view v) {
      while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
      while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
      return std::string(v);
    };
    const std::string var = trim(item.substr(0, eq));
    const std::string elem = trim(item.substr(eq + 1));
    if (!is_identifier(var)) throw EvalError("'" + var + "' is not a variable name");
    auto id = s.find_element(elem);
    if (!id) throw EvalError("element '" + elem + "' is not in the domain");
    a[var] = *id;
    pos = end + 1;
  }
  return a;
}

bool eval(const Structure& s, const Assignment& a, const Formula& f) {
  check_vocabulary(s, f);
  check_assignment(s, a, f);
  const detail::Program program = detail::compile(f);
  StructureLookup lookup = make_lookup(s, program);
  std::vector<int> env(program.slot_names.size(), 0);
  for (const auto& [v, e] : a) {
    const int slot = program.slot_of(v);
    if (slot >= 0) env[static_cast<std::size_t>(slot)] = e;
  }
  detail::Machine<StructureLookup> m(program, lookup, s.size());
  return m.run(env) == Tri::kTrue;
}

bool eval_reference(const Structure& s, const Assignment& a, const Formula& f) {
  check_vocabulary(s, f);
  check_assignment(s, a, f);
  detail::StructureInterp in(s);
  detail::FoReference<detail::StructureInterp> ref(in);
  detail::FoReference<detail::StructureInterp>::Env env(a.begin(), a.end());
  return ref.eval(f, env);
}

SatisfactionSet satisfaction_set(const Structure& s, const Formula& f) { return satisfaction_kernel(s, f, true); }

SatisfactionSet satisfaction_set_serial(const Structure& s, const Formula& f) { return satisfaction_kernel(s, f, false); }

SatisfactionSet satisfaction_set_reference(const Structure& s, const Formula& f) {
  check_vocabulary(s, f);
  SatisfactionSet out{f, sole_free_variable(f), {}};
  detail::StructureInterp in(s);
  detail::FoReference<detail::StructureInterp> ref(in);
  for (int e = 0; e < s.size(); ++e) {
    detail::FoReference<detail::StructureInterp>::Env env;
    if (out.variable) env[*out.variable] = e;
    if (ref.eval(f, env)) out.elements.push_back(e);
  }
  return out;
}

}  // namespace u1
