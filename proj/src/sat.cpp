#include "u1/sat.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <stdexcept>

#include "u1/detail/compiled.hpp"
#include "u1/errors.hpp"
#include "u1/eval.hpp"

namespace u1 {

namespace {

using detail::Tri;

constexpr int kMaxPrefixBits = 8;

struct Cell {
  int rel;
  Tuple tuple;
};

// Cells of one domain size plus the permutation tables used for pruning.
struct Layout {
  int n = 0;
  std::vector<Cell> cells;
  std::vector<std::size_t> offset;  // first cell of relation id
  std::vector<int> arity;
  // swapped[t][c]: the cell that c maps to under transposition t.
  std::vector<std::vector<std::size_t>> swapped;
};

std::size_t cell_of(const Layout& l, int rel, const int* args, int k) {
  std::size_t idx = 0;
  for (int i = 0; i < k; ++i) idx = idx * static_cast<std::size_t>(l.n) + static_cast<std::size_t>(args[i]);
  return l.offset[static_cast<std::size_t>(rel)] + idx;
}

Layout make_layout(const detail::Program& p, int n, bool prune) {
  Layout l;
  l.n = n;
  l.arity = p.relation_arities;
  for (std::size_t r = 0; r < p.relation_names.size(); ++r) {
    l.offset.push_back(l.cells.size());
    const std::size_t count = *cell_count(n, p.relation_arities[r]);
    for (std::size_t i = 0; i < count; ++i) {
      l.cells.push_back({static_cast<int>(r), cell_tuple(i, p.relation_arities[r], n)});
    }
  }
  if (prune) {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        std::vector<std::size_t> map;
        map.reserve(l.cells.size());
        for (const auto& c : l.cells) {
          Tuple t = c.tuple;
          for (auto& e : t) e = e == a ? b : (e == b ? a : e);
          map.push_back(cell_of(l, c.rel, t.data(), static_cast<int>(t.size())));
        }
        l.swapped.push_back(std::move(map));
      }
    }
  }
  return l;
}

struct Lookup {
  const Layout* layout;
  const std::vector<Tri>* values;
  Tri operator()(int rel, const int* args, int k) const { return (*values)[cell_of(*layout, rel, args, k)]; }
};

// Some transposition maps every completion of vals to a smaller
// interpretation.
bool dominated(const Layout& l, const std::vector<Tri>& vals) {
  for (const auto& map : l.swapped) {
    for (std::size_t c = 0; c < vals.size(); ++c) {
      const Tri mine = vals[c];
      const Tri theirs = vals[map[c]];
      if (mine == Tri::kUnknown || theirs == Tri::kUnknown) break;
      if (mine != theirs) {
        if (mine == Tri::kTrue) return true;
        break;
      }
    }
  }
  return false;
}

class Search {
 public:
  Search(const detail::Program& p, const Layout& l, bool prune)
      : p_(p), l_(l), prune_(prune), vals_(l.cells.size(), Tri::kUnknown), lookup_{&l_, &vals_}, machine_(p_, lookup_, l.n),
        env_(p.slot_names.size(), 0) {}

  // Fixes the first bits cells to the binary digits of prefix (cell 0 most
  // significant) and searches the rest.
  bool run(std::size_t prefix, int bits) {
    std::fill(vals_.begin(), vals_.end(), Tri::kUnknown);
    for (int i = 0; i < bits; ++i) vals_[static_cast<std::size_t>(i)] = detail::tri((prefix >> (bits - 1 - i)) & 1U);
    return dfs(static_cast<std::size_t>(bits));
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Tri>& values() const { return vals_; }

 private:
  bool dfs(std::size_t pos) {
    ++nodes_;
    if (prune_ && dominated(l_, vals_)) return false;
    const Tri t = machine_.run(env_);
    if (t == Tri::kFalse) return false;
    if (t == Tri::kTrue) {
      for (std::size_t c = pos; c < vals_.size(); ++c) vals_[c] = Tri::kFalse;
      return true;
    }
    if (pos == vals_.size()) throw std::logic_error("three-valued evaluation undecided on a total interpretation");
    for (Tri v : {Tri::kFalse, Tri::kTrue}) {
      vals_[pos] = v;
      if (dfs(pos + 1)) return true;
    }
    vals_[pos] = Tri::kUnknown;
    return false;
  }

  const detail::Program& p_;
  const Layout& l_;
  bool prune_;
  std::vector<Tri> vals_;
  Lookup lookup_;
  detail::Machine<Lookup> machine_;
  std::vector<int> env_;
  std::uint64_t nodes_ = 0;
};

std::vector<std::string> domain_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("d" + std::to_string(i));
  return names;
}

Structure build(const Layout& l, const detail::Program& p, const Vocabulary& vocab, const std::vector<Tri>& vals) {
  std::map<std::string, TupleSet> rels;
  for (std::size_t c = 0; c < l.cells.size(); ++c) {
    if (vals[c] == Tri::kTrue) rels[p.relation_names[static_cast<std::size_t>(l.cells[c].rel)]].insert(l.cells[c].tuple);
  }
  return Structure(domain_names(l.n), vocab, rels);
}

void check_inputs(const Formula& f, const Vocabulary& vocab, int max_size) {
  if (!is_sentence(f)) throw SearchError("model search needs a sentence; " + print_formula(f) + " has free variables");
  if (max_size < 1) throw SearchError("max size must be at least 1");
  validate(f, vocab);
}

std::size_t cells_at(const detail::Program& p, int n) {
  std::size_t total = 0;
  for (int a : p.relation_arities) {
    auto c = cell_count(n, a);
    if (!c) return SIZE_MAX;
    total += *c;
  }
  return total;
}

SearchReport search(const Formula& f, const Vocabulary& vocab, int max_size, const SearchOptions& options, bool parallel) {
  const auto start = std::chrono::steady_clock::now();
  check_inputs(f, vocab, max_size);
  const detail::Program program = detail::compile(f);
  const std::size_t worst = cells_at(program, max_size);
  if (worst > options.cell_limit) {
    throw SearchError("size " + std::to_string(max_size) + " needs " +
                      (worst == SIZE_MAX ? std::string("too many") : std::to_string(worst)) + " cells, limit is " +
                      std::to_string(options.cell_limit));
  }

  SearchReport report{f, max_size, std::nullopt, {}};
  for (int n = 1; n <= max_size && !report.found(); ++n) {
    const Layout layout = make_layout(program, n, options.prune);
    const int bits = static_cast<int>(std::min<std::size_t>(layout.cells.size(), kMaxPrefixBits));
    const long long prefixes = 1LL << bits;
    std::vector<std::uint64_t> nodes(static_cast<std::size_t>(prefixes), 0);
    std::atomic<long long> best{prefixes};
    std::vector<Tri> winner;

#pragma omp parallel if (parallel && prefixes > 1)
    {
      Search s(program, layout, options.prune);
      std::uint64_t before = 0;
#pragma omp for schedule(dynamic)
      for (long long i = 0; i < prefixes; ++i) {
        if (i > best.load()) continue;
        const bool ok = s.run(static_cast<std::size_t>(i), bits);
        nodes[static_cast<std::size_t>(i)] = s.nodes() - before;
        before = s.nodes();
        if (ok) {
#pragma omp critical(u1_sat_winner)
          {
            if (i < best.load()) {
              best.store(i);
              winner = s.values();
            }
          }
        }
      }
    }

    const long long last = best.load() < prefixes ? best.load() : prefixes - 1;
    for (long long i = 0; i <= last; ++i) report.statistics.nodes += nodes[static_cast<std::size_t>(i)];
    if (best.load() < prefixes) report.model = build(layout, program, vocab, winner);
  }
  if (report.model && !eval(*report.model, {}, f)) throw std::logic_error("model search returned a non-model");
  report.statistics.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

SearchReport find_model(const Formula& f, const Vocabulary& vocab, int max_size, const SearchOptions& options) {
  return search(f, vocab, max_size, options, true);
}

SearchReport find_model_serial(const Formula& f, const Vocabulary& vocab, int max_size, const SearchOptions& options) {
  return search(f, vocab, max_size, options, false);
}

SearchReport find_model_exhaustive(const Formula& f, const Vocabulary& vocab, int max_size) {
  const auto start = std::chrono::steady_clock::now();
  check_inputs(f, vocab, max_size);
  const detail::Program program = detail::compile(f);
  SearchReport report{f, max_size, std::nullopt, {}};
  for (int n = 1; n <= max_size && !report.found(); ++n) {
    const Layout layout = make_layout(program, n, false);
    const std::size_t cells = layout.cells.size();
    if (cells > 20) throw SearchError("exhaustive search is limited to 20 cells per size");
    std::vector<Tri> vals(cells);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
      ++report.statistics.nodes;
      for (std::size_t c = 0; c < cells; ++c) vals[c] = detail::tri((mask >> (cells - 1 - c)) & 1U);
      Structure s = build(layout, program, vocab, vals);
      if (eval_reference(s, {}, f)) {
        report.model = std::move(s);
        break;
      }
    }
  }
  report.statistics.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace u1
