#include "u1/lab.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "u1/errors.hpp"
#include "u1/eval.hpp"

namespace u1 {

namespace {

Structure binary_structure(std::vector<std::string> domain, const TupleSet& edges) {
  return Structure(std::move(domain), Vocabulary{{"R", 2}}, std::map<std::string, TupleSet>{{"R", edges}});
}

std::string variable_name(unsigned i) {
  static const char* const kFirst[] = {"x", "y", "z"};
  return i < 3 ? kFirst[i] : "x" + std::to_string(i + 1);
}

// ∃v1..vm (pairwise distinct ∧ P(vi)); ⊤ for m = 0.
Formula at_least(const std::string& p, unsigned m) {
  if (m == 0) return Formula::top();
  std::vector<std::string> vars;
  std::vector<Formula> parts;
  for (unsigned i = 0; i < m; ++i) vars.push_back(variable_name(i));
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = i + 1; j < m; ++j) parts.push_back(Formula::negation(Formula::equals(vars[i], vars[j])));
  }
  for (const auto& v : vars) parts.push_back(Formula::atom(p, {v}));
  return Formula::exists(vars, conjunction_of(parts));
}

std::string observe(const Query& q, const Structure& s) {
  if (const auto* f = std::get_if<Formula>(&q)) return eval(s, {}, *f) ? "true" : "false";
  ElementSet ext = std::holds_alternative<Concept>(q) ? concept_extension(s, std::get<Concept>(q))
                                                      : dlr_concept_extension(s, std::get<DlrConcept>(q), TopMode::kFull);
  return std::to_string(ext.size()) + "/" + std::to_string(s.size());
}

bool meets(Expect e, const std::string& observed) {
  switch (e) {
    case Expect::kTrue: return observed == "true";
    case Expect::kFalse: return observed == "false";
    default: break;
  }
  const auto slash = observed.find('/');
  if (slash == std::string::npos) return false;
  const std::string m = observed.substr(0, slash);
  const std::string n = observed.substr(slash + 1);
  if (e == Expect::kEmpty) return m == "0";
  if (e == Expect::kNonempty) return m != "0";
  return m == n;
}

Formula sentence(const char* text) { return parse_formula(text); }

std::vector<Probe> corpus_probes() {
  std::vector<Probe> out;
  int i = 0;
  for (const auto& f : agreement_corpus()) out.push_back({"corpus-" + std::to_string(++i), f, {}});
  return out;
}

}  // namespace

Structure gen_clique(int k) {
  if (k < 2) throw ValidationError("clique size must be at least 2");
  std::vector<std::string> domain;
  TupleSet edges;
  for (int i = 0; i < k; ++i) {
    domain.push_back("k" + std::to_string(i));
    for (int j = 0; j < k; ++j) {
      if (i != j) edges.insert({i, j});
    }
  }
  return binary_structure(std::move(domain), edges);
}

Structure gen_directed_cycle(int n) {
  if (n < 1) throw ValidationError("cycle length must be at least 1");
  std::vector<std::string> domain;
  TupleSet edges;
  for (int i = 0; i < n; ++i) {
    domain.push_back("c" + std::to_string(i));
    edges.insert({i, (i + 1) % n});
  }
  return binary_structure(std::move(domain), edges);
}

Formula counting_formula(const std::string& unary, Comparator cmp, unsigned k) {
  const Formula ge = at_least(unary, k);
  const Formula le = Formula::negation(at_least(unary, k + 1));
  switch (cmp) {
    case Comparator::kAtLeast: return ge;
    case Comparator::kAtMost: return le;
    case Comparator::kExactly: return k == 0 ? le : Formula::conjunction(ge, le);
  }
  return ge;
}

std::string print_query(const Query& q) {
  if (const auto* f = std::get_if<Formula>(&q)) return print_formula(*f);
  if (const auto* c = std::get_if<Concept>(&q)) return print_concept(*c);
  return print_dlr_concept(std::get<DlrConcept>(q));
}

const char* to_string(Expect e) {
  switch (e) {
    case Expect::kTrue: return "true";
    case Expect::kFalse: return "false";
    case Expect::kEmpty: return "empty";
    case Expect::kNonempty: return "nonempty";
    case Expect::kFull: return "full";
  }
  return "?";
}

std::string data_dir() {
  if (const char* env = std::getenv("U1_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return U1_DATA_DIR;
}

std::vector<Formula> agreement_corpus() {
  const std::string path = data_dir() + "/agreement_corpus_v1.txt";
  std::ifstream in(path);
  if (!in) throw Error("cannot read agreement corpus " + path);
  std::vector<Formula> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_formula(line, Vocabulary{{"R", 2}}));
  }
  return out;
}

std::vector<Experiment> separation_experiments() {
  std::vector<Experiment> out;

  out.push_back({"k2-vs-k3",
                 "two pebbles cannot tell K2 from K3, U1 can",
                 {"K2", "K3"},
                 {gen_clique(2), gen_clique(3)},
                 {{"covering-pair", sentence("E x. A y z. (R(y,z) -> (x = y | x = z))"), {Expect::kTrue, Expect::kFalse}}}});

  {
    Experiment e{"cycles-4xC3-vs-3xC4",
                 "4xC3 and 3xC4 agree on U1 but differ on a guarded-negation triangle",
                 {"4xC3", "3xC4"},
                 {disjoint_copies(gen_directed_cycle(3), 4), disjoint_copies(gen_directed_cycle(4), 3)},
                 {{"triangle", sentence("E x y z. (R(x,y) & R(y,z) & R(z,x))"), {Expect::kTrue, Expect::kFalse}}}};
    for (auto& p : corpus_probes()) e.probes.push_back(std::move(p));
    out.push_back(std::move(e));
  }

  {
    const Structure loop(std::vector<std::string>{"a"}, Vocabulary{{"A", 1}, {"R", 2}},
                         std::map<std::string, TupleSet>{{"A", {{0}}}, {"R", {{0, 0}}}});
    out.push_back({"prop2-disjoint-copies",
                   "DLR_reg extensions survive disjoint copies, these probes do not",
                   {"loop", "loop+loop"},
                   {loop, disjoint_union(loop, loop)},
                   {{"non-edge", sentence("E x y. ~R(x,y)"), {Expect::kFalse, Expect::kTrue}},
                    {"negated-role", parse_concept("~exists ~R.(A)"), {Expect::kNonempty, Expect::kEmpty}}}});
  }

  for (int k : {2, 3}) {
    Experiment e{"cliques-k" + std::to_string(k),
                 "an in-degree bound separates " + std::to_string(k + 1) + "xK" + std::to_string(k) + " from " +
                     std::to_string(k) + "xK" + std::to_string(k + 1),
                 {std::to_string(k + 1) + "xK" + std::to_string(k), std::to_string(k) + "xK" + std::to_string(k + 1)},
                 {disjoint_copies(gen_clique(k), k + 1), disjoint_copies(gen_clique(k + 1), k)},
                 {{"in-degree", DlrConcept::at_most(static_cast<unsigned>(k - 1), 2, DlrRole::atomic("R")),
                   {Expect::kFull, Expect::kEmpty}}}};
    for (auto& p : corpus_probes()) e.probes.push_back(std::move(p));
    out.push_back(std::move(e));
  }
  return out;
}

ExperimentResult run_experiment(const Experiment& e) {
  ExperimentResult r{e.name, e.claim, e.structure_names, {}, {}, true};
  for (const auto& s : e.structures) r.structure_sizes.push_back(s.size());
  for (const auto& p : e.probes) {
    ProbeResult pr{p.label, print_query(p.query), {}, {}, true};
    for (const auto& s : e.structures) pr.observed.push_back(observe(p.query, s));
    if (p.expected.empty()) {
      pr.expected.assign(e.structures.size(), "agree");
      for (const auto& o : pr.observed) pr.pass = pr.pass && o == pr.observed.front();
    } else {
      for (std::size_t i = 0; i < p.expected.size(); ++i) {
        pr.expected.push_back(to_string(p.expected[i]));
        pr.pass = pr.pass && i < pr.observed.size() && meets(p.expected[i], pr.observed[i]);
      }
      pr.pass = pr.pass && p.expected.size() == e.structures.size();
    }
    r.pass = r.pass && pr.pass;
    r.probes.push_back(std::move(pr));
  }
  return r;
}

}  // namespace u1
