// Relations stored as one truth value per cell of Δ^arity (row-major), over
// any truth algebra. Shared by the generic DL and DLR semantics.

#ifndef U1_DETAIL_DENSE_HPP
#define U1_DETAIL_DENSE_HPP

#include <vector>

#include "u1/errors.hpp"
#include "u1/structure.hpp"

namespace u1::detail {

template <class V>
struct DenseRel {
  int arity = 0;
  std::vector<V> cells;
};

inline std::size_t dense_cells(int n, int arity) {
  auto cells = cell_count(n, arity);
  if (!cells || *cells > (std::size_t{1} << 24)) {
    throw StructureError(StructureErrorKind::kTooLarge,
                         "relation of arity " + std::to_string(arity) + " over " + std::to_string(n) +
                             " elements is too large to tabulate");
  }
  return *cells;
}

template <class I>
DenseRel<typename I::Value> dense_constant(const I& in, int arity, bool value) {
  return {arity, std::vector<typename I::Value>(dense_cells(in.size(), arity), in.truth(value))};
}

template <class I>
DenseRel<typename I::Value> dense_atom(const I& in, const std::string& name, int arity) {
  DenseRel<typename I::Value> out{arity, {}};
  const std::size_t cells = dense_cells(in.size(), arity);
  out.cells.reserve(cells);
  for (std::size_t c = 0; c < cells; ++c) out.cells.push_back(in.atom(name, cell_tuple(c, arity, in.size())));
  return out;
}

// Concrete tuples of a bool relation.
inline TupleSet dense_tuples(const DenseRel<bool>& r, int n) {
  TupleSet out;
  for (std::size_t c = 0; c < r.cells.size(); ++c) {
    if (r.cells[c]) out.insert(cell_tuple(c, r.arity, n));
  }
  return out;
}

inline ElementSet dense_elements(const std::vector<bool>& v) {
  ElementSet out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i]) out.push_back(static_cast<ElementId>(i));
  }
  return out;
}

}  // namespace u1::detail

#endif  // U1_DETAIL_DENSE_HPP
