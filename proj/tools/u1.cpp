// u1: command-line front end.
//
// Exit codes: 0 success or verdict true, 1 verdict false or no model up to
// the bound, 2 input error, 3 request outside the supported fragment.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "u1/dl.hpp"
#include "u1/dlr.hpp"
#include "u1/errors.hpp"
#include "u1/eval.hpp"
#include "u1/formula.hpp"
#include "u1/fragments.hpp"
#include "u1/json_io.hpp"
#include "u1/lab.hpp"
#include "u1/sat.hpp"
#include "u1/translate.hpp"

namespace {

using nlohmann::json;
using namespace u1;

enum Exit { kOk = 0, kNegative = 1, kInputError = 2, kGate = 3 };

struct Options {
  std::string format = "human";
  std::string expr;
  std::string file;
  std::string vocab_file;
  std::string kind = "formula";
  std::string fragment;
  std::string model_file;
  std::string assign;
  std::string top_mode = "full";
  std::string from;
  std::string to;
  std::string var = "x";
  int max_size = 0;
  std::size_t cell_limit = SearchOptions{}.cell_limit;
  bool prune = false;
  bool serial = false;
  bool timing = false;
  std::string lab_name;
};

bool json_out(const Options& o) { return o.format == "json"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string input_text(const Options& o) {
  if (!o.expr.empty() && !o.file.empty()) throw Error("give either -e TEXT or an input file, not both");
  if (!o.expr.empty()) return o.expr;
  if (!o.file.empty()) return read_file(o.file);
  throw Error("no input: use -e TEXT or an input file");
}

Vocabulary read_vocab(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("vocabulary file: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("vocabulary file must map relation names to arities");
  Vocabulary v;
  for (const auto& [name, arity] : doc.items()) {
    if (!arity.is_number_integer()) throw ValidationError("arity of '" + name + "' must be an integer");
    v.add(name, arity.get<int>());
  }
  return v;
}

TopMode top_mode(const Options& o) {
  if (o.top_mode == "full") return TopMode::kFull;
  if (o.top_mode == "explicit") return TopMode::kExplicit;
  throw Error("--top-mode must be full or explicit");
}

void emit(const Options& o, const json& body, const std::string& human) {
  if (json_out(o)) {
    std::cout << body.dump(2) << "\n";
  } else {
    std::cout << human << (human.empty() || human.back() == '\n' ? "" : "\n");
  }
}

std::string show_set(const Structure& s, const ElementSet& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? ", " : "") + s.element(ids[i]);
  return out + "}";
}

json names(const Structure& s, const ElementSet& ids) {
  json a = json::array();
  for (ElementId e : ids) a.push_back(s.element(e));
  return a;
}

int cmd_parse(const Options& o) {
  const std::string text = input_text(o);
  json body{{"kind", o.kind}};
  std::string canonical;
  if (o.kind == "formula") {
    const Formula f = parse_formula(text);
    canonical = print_formula(f);
    json free = json::array();
    for (const auto& v : free_variables(f)) free.push_back(v);
    body["free_variables"] = free;
    body["size"] = formula_size(f);
  } else if (o.kind == "dl") {
    const Concept c = parse_concept(text);
    canonical = print_concept(c);
    body["size"] = concept_size(c);
  } else if (o.kind == "dlr") {
    const DlrConcept c = parse_dlr_concept(text);
    canonical = print_dlr_concept(c);
    body["size"] = concept_size(c);
  } else {
    throw Error("--kind must be formula, dl or dlr");
  }
  body["canonical"] = canonical;
  emit(o, body, canonical);
  return kOk;
}

int cmd_check(const Options& o) {
  auto id = parse_fragment_id(o.fragment);
  if (!id) throw Error("unknown fragment '" + o.fragment + "'");
  const Formula f = parse_formula(input_text(o));
  const Diagnostic d = check_fragment(f, *id);
  std::string human = std::string(to_string(d.fragment)) + ": " + (d.verdict() ? "yes" : "no");
  for (const auto& v : d.violations) {
    std::string path;
    for (int step : v.path) path += (path.empty() ? "" : ".") + std::to_string(step);
    human += "\n  " + std::string(to_string(v.kind)) + " at [" + path + "] " + v.message;
  }
  json body = to_json(d);
  body["formula"] = print_formula(f);
  emit(o, body, human);
  return d.verdict() ? kOk : kNegative;
}

int cmd_eval(const Options& o) {
  const Structure s = parse_structure(read_file(o.model_file));
  const std::string text = input_text(o);
  if (o.kind == "dl" || o.kind == "dlr") {
    ElementSet ext;
    std::string printed;
    if (o.kind == "dl") {
      const Concept c = parse_concept(text);
      validate(c, s.vocabulary());
      ext = concept_extension(s, c);
      printed = print_concept(c);
    } else {
      const DlrConcept c = parse_dlr_concept(text);
      const TopMode mode = top_mode(o);
      if (mode == TopMode::kExplicit) check_top_coverage(s);
      ext = dlr_concept_extension(s, c, mode);
      printed = print_dlr_concept(c);
    }
    emit(o, {{"concept", printed}, {"extension", names(s, ext)}}, show_set(s, ext));
    return ext.empty() ? kNegative : kOk;
  }
  const Formula f = parse_formula(text);
  const Assignment a = parse_assignment(s, o.assign);
  std::size_t unassigned = 0;
  for (const auto& v : free_variables(f)) unassigned += a.count(v) ? 0 : 1;
  if (unassigned > 0 && a.empty()) {
    const SatisfactionSet set = satisfaction_set(s, f);
    json body{{"formula", print_formula(f)}, {"variable", set.variable.value_or("")}, {"elements", names(s, set.elements)}};
    emit(o, body, show_set(s, set.elements));
    return set.elements.empty() ? kNegative : kOk;
  }
  const bool v = eval(s, a, f);
  emit(o, {{"formula", print_formula(f)}, {"value", v}}, v ? "true" : "false");
  return v ? kOk : kNegative;
}

int cmd_translate(const Options& o) {
  const std::string text = input_text(o);
  json body{{"from", o.from}, {"to", o.to}};
  std::string out;
  if (o.from == "fu1" && o.to == "dl") {
    out = print_concept(fu1_to_dl(parse_formula(text)));
  } else if (o.from == "dl" && o.to == "fu1") {
    const Concept c = parse_concept(text);
    const Vocabulary v = o.vocab_file.empty() ? infer_vocabulary(c) : read_vocab(o.vocab_file);
    out = print_formula(dl_to_fu1(c, v, o.var));
  } else if (o.from == "dlr0" && o.to == "fu1") {
    const DlrConcept c = parse_dlr_concept(text);
    const Vocabulary v = o.vocab_file.empty() ? infer_vocabulary(c) : read_vocab(o.vocab_file);
    out = print_formula(dlr0_to_fu1(c, v, top_mode(o), o.var));
  } else if (o.from == "dlr0" && o.to == "dlr0") {
    out = print_dlr_concept(eliminate_comp_union(parse_dlr_concept(text)));
  } else {
    throw Error("unsupported translation " + o.from + " -> " + o.to + " (fu1->dl, dl->fu1, dlr0->fu1, dlr0->dlr0)");
  }
  body["output"] = out;
  emit(o, body, out);
  return kOk;
}

int cmd_sat(const Options& o) {
  const Formula f = parse_formula(input_text(o));
  const Vocabulary v = o.vocab_file.empty() ? infer_vocabulary(f) : read_vocab(o.vocab_file);
  SearchOptions opts;
  opts.prune = o.prune;
  opts.cell_limit = o.cell_limit;
  const SearchReport r = o.serial ? find_model_serial(f, v, o.max_size, opts) : find_model(f, v, o.max_size, opts);
  std::string human;
  if (r.found()) {
    human = "FoundModel size " + std::to_string(r.model->size()) + "\n" + print_structure(*r.model);
  } else {
    human = "NoModelUpTo(" + std::to_string(r.bound) + ")";
  }
  human += "\nnodes: " + std::to_string(r.statistics.nodes);
  if (o.timing) human += "\nelapsed: " + std::to_string(r.statistics.elapsed_seconds) + " s";
  emit(o, to_json(r, o.timing), human);
  return r.found() ? kOk : kNegative;
}

std::vector<Experiment> selected(const Options& o) {
  std::vector<Experiment> all = separation_experiments();
  if (o.lab_name.empty()) return all;
  for (auto& e : all) {
    if (e.name == o.lab_name) return {e};
  }
  std::string known;
  for (const auto& e : all) known += (known.empty() ? "" : ", ") + e.name;
  throw Error("unknown experiment '" + o.lab_name + "' (known: " + known + ")");
}

int cmd_lab_run(const Options& o) {
  json results = json::array();
  std::string human;
  bool all = true;
  for (const auto& e : selected(o)) {
    const ExperimentResult r = run_experiment(e);
    all = all && r.pass;
    results.push_back(to_json(r));
    human += std::string(r.pass ? "PASS " : "FAIL ") + r.name + "  (" + r.claim + ")\n";
    for (const auto& p : r.probes) {
      std::string exp;
      std::string obs;
      for (std::size_t i = 0; i < p.observed.size(); ++i) {
        exp += (i ? " / " : "") + (i < p.expected.size() ? p.expected[i] : std::string("?"));
        obs += (i ? " / " : "") + p.observed[i];
      }
      human += std::string("  ") + (p.pass ? "ok   " : "FAIL ") + p.label + ": expected " + exp + ", observed " + obs + "\n";
    }
  }
  emit(o, {{"experiments", results}, {"pass", all}}, human);
  return all ? kOk : kNegative;
}

int cmd_lab_dump(const Options& o) {
  json out = json::object();
  for (const auto& e : selected(o)) {
    json group = json::object();
    for (std::size_t i = 0; i < e.structures.size(); ++i) group[e.structure_names[i]] = to_json(e.structures[i]);
    out[e.name] = std::move(group);
  }
  std::cout << out.dump(2) << "\n";
  return kOk;
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const ValidationError*>(&e)) return "validation";
  if (dynamic_cast<const StructureError*>(&e)) return "structure";
  if (dynamic_cast<const EvalError*>(&e)) return "eval";
  if (dynamic_cast<const SearchError*>(&e)) return "search";
  if (dynamic_cast<const FragmentGateError*>(&e)) return "fragment_gate";
  return "input";
}

int fail(const Options& o, const std::exception& e, int code) {
  std::cerr << "u1: error: " << e.what() << "\n";
  if (json_out(o)) std::cout << json{{"error", {{"kind", error_kind(e)}, {"message", e.what()}}}}.dump(2) << "\n";
  return code;
}

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("-e,--expr", o.expr, "inline input text");
  sub->add_option("file", o.file, "input file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"u1: uniform one-dimensional fragment toolkit"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"human", "json"}));

  auto* parse = app.add_subcommand("parse", "parse and print canonically");
  add_input(parse, o);
  parse->add_option("--kind", o.kind, "formula, dl or dlr")->check(CLI::IsMember({"formula", "dl", "dlr"}));

  auto* check = app.add_subcommand("check", "fragment membership");
  add_input(check, o);
  check->add_option("--fragment", o.fragment, "u1, u1woeq, fu1, uc1 or fo2")->required();

  auto* evalc = app.add_subcommand("eval", "evaluate on a structure");
  add_input(evalc, o);
  evalc->add_option("--model", o.model_file, "structure JSON file")->required();
  evalc->add_option("--assign", o.assign, "x=a,y=b");
  evalc->add_option("--kind", o.kind, "formula, dl or dlr")->check(CLI::IsMember({"formula", "dl", "dlr"}));
  evalc->add_option("--top-mode", o.top_mode, "full or explicit (dlr)");

  auto* translate = app.add_subcommand("translate", "translate between formalisms");
  add_input(translate, o);
  translate->add_option("--from", o.from, "fu1, dl or dlr0")->required();
  translate->add_option("--to", o.to, "dl, fu1 or dlr0")->required();
  translate->add_option("--vocab", o.vocab_file, "vocabulary JSON file");
  translate->add_option("--top-mode", o.top_mode, "full or explicit");
  translate->add_option("--var", o.var, "free variable of the output");

  auto* sat = app.add_subcommand("sat", "bounded model finding");
  add_input(sat, o);
  sat->add_option("--max-size", o.max_size, "largest domain size")->required();
  sat->add_option("--cell-limit", o.cell_limit, "refuse beyond this many cells");
  sat->add_option("--vocab", o.vocab_file, "vocabulary JSON file");
  sat->add_flag("--prune", o.prune, "skip interpretations a transposition makes smaller");
  sat->add_flag("--serial", o.serial, "single thread");
  sat->add_flag("--timing", o.timing, "report elapsed time");

  auto* lab = app.add_subcommand("lab", "separation experiments");
  lab->require_subcommand(1);
  auto* lab_run = lab->add_subcommand("run", "run experiments");
  lab_run->add_option("--name", o.lab_name, "experiment name");
  auto* lab_dump = lab->add_subcommand("dump", "print the experiments' structures");
  lab_dump->add_option("--name", o.lab_name, "experiment name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*parse) return cmd_parse(o);
    if (*check) return cmd_check(o);
    if (*evalc) return cmd_eval(o);
    if (*translate) return cmd_translate(o);
    if (*sat) return cmd_sat(o);
    if (*lab_run) return cmd_lab_run(o);
    if (*lab_dump) return cmd_lab_dump(o);
  } catch (const FragmentGateError& e) {
    return fail(o, e, kGate);
  } catch (const std::exception& e) {
    return fail(o, e, kInputError);
  }
  return kInputError;
}
