// DLR_reg extensions, generic in the truth algebra (interface as in
// fo_semantics.hpp). Binary relations are n*n row-major matrices.

#ifndef U1_DETAIL_DLR_SEMANTICS_HPP
#define U1_DETAIL_DLR_SEMANTICS_HPP

#include "u1/detail/dense.hpp"
#include "u1/dlr.hpp"

namespace u1::detail {

template <class I>
class DlrSemantics {
 public:
  using Value = typename I::Value;
  using Matrix = std::vector<Value>;

  DlrSemantics(const I& in, const Vocabulary& vocab, TopMode mode) : in_(in), vocab_(vocab), mode_(mode) {}

  DenseRel<Value> top(int n) const {
    if (mode_ == TopMode::kFull) return dense_constant(in_, n, true);
    return dense_atom(in_, top_relation_name(n), n);
  }

  DenseRel<Value> role(const DlrRole& r) const {
    const int n = in_.size();
    switch (r.kind()) {
      case DlrRoleKind::kTop: return top(r.width());
      case DlrRoleKind::kAtomic: return dense_atom(in_, r.name(), dlr_role_arity(r, vocab_));
      case DlrRoleKind::kSelect: {
        DenseRel<Value> out = top(r.width());
        const std::vector<Value> c = concept_values(r.filler());
        const std::size_t pos = static_cast<std::size_t>(r.position() - 1);
        for (std::size_t cell = 0; cell < out.cells.size(); ++cell) {
          const Tuple t = cell_tuple(cell, out.arity, n);
          out.cells[cell] = in_.conj(out.cells[cell], c[static_cast<std::size_t>(t[pos])]);
        }
        return out;
      }
      case DlrRoleKind::kNot: {
        DenseRel<Value> inner = role(r.child(0));
        DenseRel<Value> out = top(inner.arity);
        for (std::size_t cell = 0; cell < out.cells.size(); ++cell) {
          out.cells[cell] = in_.conj(out.cells[cell], in_.neg(inner.cells[cell]));
        }
        return out;
      }
      case DlrRoleKind::kAnd: {
        DenseRel<Value> a = role(r.child(0));
        DenseRel<Value> b = role(r.child(1));
        if (a.arity != b.arity) throw ValidationError("intersection of roles with different arities");
        for (std::size_t cell = 0; cell < a.cells.size(); ++cell) a.cells[cell] = in_.conj(a.cells[cell], b.cells[cell]);
        return a;
      }
    }
    throw ValidationError("unknown role kind");
  }

  Matrix identity() const {
    const int n = in_.size();
    Matrix m;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) m.push_back(in_.truth(u == v));
    }
    return m;
  }

  Matrix compose(const Matrix& a, const Matrix& b) const {
    const std::size_t n = static_cast<std::size_t>(in_.size());
    Matrix out(n * n, in_.truth(false));
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w = 0; w < n; ++w) out[u * n + w] = in_.disj(out[u * n + w], in_.conj(a[u * n + v], b[v * n + w]));
      }
    }
    return out;
  }

  Matrix binrel(const DlrBinRel& e) const {
    const int n = in_.size();
    const std::size_t nn = static_cast<std::size_t>(n);
    switch (e.kind()) {
      case DlrBinRelKind::kEpsilon: return identity();
      case DlrBinRelKind::kProject: {
        DenseRel<Value> r = role(e.role());
        if (e.first() < 1 || e.first() > r.arity || e.second() < 1 || e.second() > r.arity) {
          throw ValidationError("projection index out of range for a role of arity " + std::to_string(r.arity));
        }
        Matrix out(nn * nn, in_.truth(false));
        const std::size_t i = static_cast<std::size_t>(e.first() - 1);
        const std::size_t j = static_cast<std::size_t>(e.second() - 1);
        for (std::size_t cell = 0; cell < r.cells.size(); ++cell) {
          const Tuple t = cell_tuple(cell, r.arity, n);
          const std::size_t at = static_cast<std::size_t>(t[i]) * nn + static_cast<std::size_t>(t[j]);
          out[at] = in_.disj(out[at], r.cells[cell]);
        }
        return out;
      }
      case DlrBinRelKind::kCompose: return compose(binrel(e.child(0)), binrel(e.child(1)));
      case DlrBinRelKind::kUnion: {
        Matrix a = binrel(e.child(0));
        Matrix b = binrel(e.child(1));
        for (std::size_t k = 0; k < a.size(); ++k) a[k] = in_.disj(a[k], b[k]);
        return a;
      }
      case DlrBinRelKind::kStar: {
        // Least reflexive-transitive relation containing e, by squaring to a
        // fixpoint.
        Matrix m = binrel(e.child(0));
        Matrix id = identity();
        for (std::size_t k = 0; k < m.size(); ++k) m[k] = in_.disj(m[k], id[k]);
        while (true) {
          Matrix sq = compose(m, m);
          bool same = true;
          for (std::size_t k = 0; k < m.size(); ++k) {
            Value next = in_.disj(m[k], sq[k]);
            if (!in_.same(next, m[k])) same = false;
            m[k] = next;
          }
          if (same) return m;
        }
      }
    }
    throw ValidationError("unknown relation kind");
  }

  std::vector<Value> concept_values(const DlrConcept& c) const {
    const int n = in_.size();
    const std::size_t nn = static_cast<std::size_t>(n);
    std::vector<Value> out;
    switch (c.kind()) {
      case DlrConceptKind::kTop: return std::vector<Value>(nn, in_.truth(true));
      case DlrConceptKind::kAtomic:
        for (int u = 0; u < n; ++u) {
          const ElementId t[1] = {u};
          out.push_back(in_.atom(c.name(), t));
        }
        return out;
      case DlrConceptKind::kNot:
        out = concept_values(c.child(0));
        for (std::size_t u = 0; u < nn; ++u) out[u] = in_.neg(out[u]);
        return out;
      case DlrConceptKind::kAnd: {
        out = concept_values(c.child(0));
        std::vector<Value> b = concept_values(c.child(1));
        for (std::size_t u = 0; u < nn; ++u) out[u] = in_.conj(out[u], b[u]);
        return out;
      }
      case DlrConceptKind::kExists: {
        Matrix m = binrel(c.relation());
        std::vector<Value> filler = concept_values(c.child(0));
        out.assign(nn, in_.truth(false));
        for (std::size_t u = 0; u < nn; ++u) {
          for (std::size_t v = 0; v < nn; ++v) out[u] = in_.disj(out[u], in_.conj(m[u * nn + v], filler[v]));
        }
        return out;
      }
      case DlrConceptKind::kExistsProject:
      case DlrConceptKind::kAtMost: {
        DenseRel<Value> r = role(c.role());
        if (c.position() < 1 || c.position() > r.arity) {
          throw ValidationError("position $" + std::to_string(c.position()) + " out of range for a role of arity " +
                                std::to_string(r.arity));
        }
        const std::size_t i = static_cast<std::size_t>(c.position() - 1);
        std::vector<std::vector<Value>> at(nn);
        for (std::size_t cell = 0; cell < r.cells.size(); ++cell) {
          at[static_cast<std::size_t>(cell_tuple(cell, r.arity, n)[i])].push_back(r.cells[cell]);
        }
        for (std::size_t u = 0; u < nn; ++u) {
          if (c.is(DlrConceptKind::kExistsProject)) {
            out.push_back(in_.at_least(at[u], 1));
          } else {
            out.push_back(in_.neg(in_.at_least(at[u], c.bound() + 1)));
          }
        }
        return out;
      }
    }
    return out;
  }

 private:
  const I& in_;
  const Vocabulary& vocab_;
  TopMode mode_;
};

}  // namespace u1::detail

#endif  // U1_DETAIL_DLR_SEMANTICS_HPP
