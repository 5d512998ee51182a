// Symbolic extensions over every interpretation of a fixed domain size.
// Each element gets one BDD in the cell variables; two queries agree on all
// interpretations iff the BDD vectors are equal (BDDs are canonical).

#ifndef U1_TEST_EQUIV_HPP
#define U1_TEST_EQUIV_HPP

#include <string>
#include <vector>

#include "support/bdd.hpp"
#include "u1/detail/dl_semantics.hpp"
#include "u1/detail/dlr_semantics.hpp"
#include "u1/detail/fo_semantics.hpp"
#include "u1/formula.hpp"

namespace u1test {

struct Symbolic {
  Symbolic(const u1::Vocabulary& vocab, int n) : vocab(vocab), layout(vocab, n), bdd(layout.size()), in(bdd, layout) {}

  // {d | f[var ↦ d]}; sentences give the same value at every element.
  std::vector<int> formula(const u1::Formula& f) {
    const auto fv = u1::free_variables(f);
    const std::string var = fv.empty() ? std::string("x") : *fv.begin();
    u1::detail::FoReference<BddInterp> ref(in);
    std::vector<int> out;
    for (int d = 0; d < layout.domain_size(); ++d) {
      typename u1::detail::FoReference<BddInterp>::Env env{{var, d}};
      out.push_back(ref.eval(f, env));
    }
    return out;
  }
  std::vector<int> concept_of(const u1::Concept& c) {
    return u1::detail::DlSemantics<BddInterp>(in, vocab).concept_values(c);
  }
  std::vector<int> concept_of(const u1::DlrConcept& c, u1::TopMode mode = u1::TopMode::kFull) {
    return u1::detail::DlrSemantics<BddInterp>(in, vocab, mode).concept_values(c);
  }

  // Some interpretation (as a structure) on which a and b differ.
  u1::Structure witness(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == b[i]) continue;
      const int diff = bdd.disj(bdd.conj(a[i], bdd.neg(b[i])), bdd.conj(b[i], bdd.neg(a[i])));
      return layout.structure(vocab, bdd.satisfying(diff));
    }
    return layout.structure(vocab, std::vector<bool>(static_cast<std::size_t>(layout.size()), false));
  }

  u1::Vocabulary vocab;
  CellLayout layout;
  Bdd bdd;
  BddInterp in;
};

}  // namespace u1test

#endif  // U1_TEST_EQUIV_HPP
