// Structures and probes behind the separation arguments, and a runner that
// recomputes every probe.

#ifndef U1_LAB_HPP
#define U1_LAB_HPP

#include <string>
#include <variant>
#include <vector>

#include "u1/dl.hpp"
#include "u1/dlr.hpp"
#include "u1/formula.hpp"
#include "u1/structure.hpp"

namespace u1 {

// Domain k0..k{k-1}, R all pairs of distinct elements. k >= 2.
Structure gen_clique(int k);
// Domain c0..c{n-1}, R = {(i, i+1 mod n)}. n >= 1.
Structure gen_directed_cycle(int n);
// |P| cmp k without counting quantifiers: k+1 variables x, y, z, x4, ...
Formula counting_formula(const std::string& unary, Comparator cmp, unsigned k);

// Sentence, DL_FU1 concept, or DLR_reg concept (Δ^n convention).
using Query = std::variant<Formula, Concept, DlrConcept>;
std::string print_query(const Query& q);

enum class Expect { kTrue, kFalse, kEmpty, kNonempty, kFull };
const char* to_string(Expect e);

struct Probe {
  std::string label;
  Query query;
  // One claim per structure; empty means the structures must agree.
  std::vector<Expect> expected;
};

struct Experiment {
  std::string name;
  std::string claim;
  std::vector<std::string> structure_names;
  std::vector<Structure> structures;
  std::vector<Probe> probes;
};

struct ProbeResult {
  std::string label;
  std::string query;
  std::vector<std::string> expected;
  // "true"/"false" for sentences, "m/n" extension sizes for concepts.
  std::vector<std::string> observed;
  bool pass = false;
};

struct ExperimentResult {
  std::string name;
  std::string claim;
  std::vector<std::string> structure_names;
  std::vector<int> structure_sizes;
  std::vector<ProbeResult> probes;
  bool pass = false;
};

// $U1_DATA_DIR, else the data directory of the source tree.
std::string data_dir();
// The frozen U1 agreement corpus (20 sentences over R/2).
std::vector<Formula> agreement_corpus();

// k2-vs-k3, cycles-4xC3-vs-3xC4, prop2-disjoint-copies, cliques-k2,
// cliques-k3.
std::vector<Experiment> separation_experiments();
ExperimentResult run_experiment(const Experiment& e);

}  // namespace u1

#endif  // U1_LAB_HPP
