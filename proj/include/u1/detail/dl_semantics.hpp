// DL_FU1 extensions, generic in the truth algebra (see fo_semantics.hpp for
// the interpretation interface).

#ifndef U1_DETAIL_DL_SEMANTICS_HPP
#define U1_DETAIL_DL_SEMANTICS_HPP

#include "u1/detail/dense.hpp"
#include "u1/dl.hpp"

namespace u1::detail {

template <class I>
class DlSemantics {
 public:
  using Value = typename I::Value;

  DlSemantics(const I& in, const Vocabulary& vocab) : in_(in), vocab_(vocab) {}

  DenseRel<Value> role(const Role& r) const {
    const int n = in_.size();
    switch (r.kind()) {
      case RoleKind::kAtomic: return dense_atom(in_, r.name(), role_arity(r, vocab_));
      case RoleKind::kEpsilon: {
        DenseRel<Value> out{2, {}};
        for (int u = 0; u < n; ++u) {
          for (int v = 0; v < n; ++v) out.cells.push_back(in_.truth(u == v));
        }
        return out;
      }
      case RoleKind::kNot: {
        DenseRel<Value> out = role(r.child(0));
        for (std::size_t i = 0; i < out.cells.size(); ++i) out.cells[i] = in_.neg(out.cells[i]);
        return out;
      }
      case RoleKind::kAnd: {
        DenseRel<Value> a = role(r.child(0));
        DenseRel<Value> b = role(r.child(1));
        if (a.arity != b.arity) return dense_constant(in_, 2, false);
        for (std::size_t c = 0; c < a.cells.size(); ++c) a.cells[c] = in_.conj(a.cells[c], b.cells[c]);
        return a;
      }
      case RoleKind::kApply: {
        const Surjection& sigma = r.surjection();
        DenseRel<Value> inner = role(r.child(0));
        if (inner.arity != sigma.source_arity()) return dense_constant(in_, 2, false);
        const int m = sigma.target_arity();
        DenseRel<Value> out{m, {}};
        const std::size_t cells = dense_cells(n, m);
        out.cells.reserve(cells);
        Tuple w(static_cast<std::size_t>(sigma.source_arity()));
        for (std::size_t c = 0; c < cells; ++c) {
          const Tuple u = cell_tuple(c, m, n);
          for (int j = 1; j <= sigma.source_arity(); ++j) w[static_cast<std::size_t>(j - 1)] = u[static_cast<std::size_t>(sigma(j) - 1)];
          out.cells.push_back(inner.cells[cell_index(w, n)]);
        }
        return out;
      }
    }
    return dense_constant(in_, 2, false);
  }

  std::vector<Value> concept_values(const Concept& c) const {
    const int n = in_.size();
    std::vector<Value> out;
    switch (c.kind()) {
      case ConceptKind::kTop: return std::vector<Value>(static_cast<std::size_t>(n), in_.truth(true));
      case ConceptKind::kAtomic: {
        for (int u = 0; u < n; ++u) {
          const ElementId t[1] = {u};
          out.push_back(in_.atom(c.name(), t));
        }
        return out;
      }
      case ConceptKind::kNot: {
        out = concept_values(c.child(0));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = in_.neg(out[i]);
        return out;
      }
      case ConceptKind::kAnd: {
        out = concept_values(c.child(0));
        std::vector<Value> b = concept_values(c.child(1));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = in_.conj(out[i], b[i]);
        return out;
      }
      case ConceptKind::kExists: {
        DenseRel<Value> r = role(c.role());
        const std::size_t args = c.num_children();
        if (static_cast<int>(args) != r.arity - 1) {
          throw ValidationError("existential restriction over a role of arity " + std::to_string(r.arity) + " needs " +
                                std::to_string(r.arity - 1) + " concepts, got " + std::to_string(args));
        }
        std::vector<std::vector<Value>> fillers;
        for (std::size_t i = 0; i < args; ++i) fillers.push_back(concept_values(c.child(i)));
        out.assign(static_cast<std::size_t>(n), in_.truth(false));
        for (std::size_t cell = 0; cell < r.cells.size(); ++cell) {
          const Tuple t = cell_tuple(cell, r.arity, n);
          Value v = r.cells[cell];
          for (std::size_t i = 0; i < args; ++i) v = in_.conj(v, fillers[i][static_cast<std::size_t>(t[i + 1])]);
          out[static_cast<std::size_t>(t[0])] = in_.disj(out[static_cast<std::size_t>(t[0])], v);
        }
        return out;
      }
    }
    return out;
  }

 private:
  const I& in_;
  const Vocabulary& vocab_;
};

}  // namespace u1::detail

#endif  // U1_DETAIL_DL_SEMANTICS_HPP
