#pragma once

// Exact rank computations over the scalar field.  Two routes are provided
// on purpose: an incremental echelon basis (used by the subset sweeps in
// the arrangement code, where vectors are added and removed in stack
// order) and one-shot fraction-free elimination (used for fixed matrices).
// Tests play them against each other.

#include <cstddef>
#include <optional>
#include <vector>

#include "invarr/scalar.hpp"

namespace invarr {

using Vec = std::vector<Scalar>;

// Maintains a row basis of the span of the vectors added so far.  Rows are
// kept in insertion order; each row is reduced against all earlier rows, so
// a single forward pass eliminates every pivot.  Removal only supports the
// most recently added row, which is all the backtracking sweeps need.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Returns true if v was independent of the current span (and is now part
  // of the basis).
  bool add(Vec v) {
    reduce(v);
    std::size_t pivot = 0;
    while (pivot < dim_ && v[pivot].is_zero()) ++pivot;
    if (pivot == dim_) return false;
    Scalar lead = v[pivot];
    for (auto& x : v) x /= lead;
    rows_.push_back(Row{pivot, std::move(v)});
    return true;
  }

  // Undoes the most recent successful add.
  void pop() { rows_.pop_back(); }

  // True iff v lies in the current span.
  bool contains(Vec v) const {
    reduce(v);
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }

 private:
  struct Row {
    std::size_t pivot;
    Vec data;
  };

  void reduce(Vec& v) const {
    for (const auto& row : rows_) {
      const Scalar& c = v[row.pivot];
      if (c.is_zero()) continue;
      Scalar factor = c;  // row has a unit pivot
      for (std::size_t j = 0; j < dim_; ++j) v[j] -= factor * row.data[j];
    }
  }

  std::size_t dim_;
  std::vector<Row> rows_;
};

inline int rank_of(const std::vector<Vec>& vectors, std::size_t dim) {
  EchelonBasis basis(dim);
  for (const auto& v : vectors) basis.add(v);
  return basis.rank();
}

// Fraction-free (Bareiss) elimination.  For matrices with entries in
// Z[tau] all intermediate values stay in Z[tau]; the divisions are exact.
inline int bareiss_rank(std::vector<Vec> m) {
  if (m.empty()) return 0;
  const std::size_t nrows = m.size(), ncols = m[0].size();
  Scalar prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t pivot = r;
    while (pivot < nrows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == nrows) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j)
        m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
      m[i][c] = Scalar(0);
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace invarr
