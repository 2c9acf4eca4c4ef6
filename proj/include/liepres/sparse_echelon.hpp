#pragma once

#include "liepres/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace liepres {

/// Sparse vector, entries sorted by strictly increasing column.
using SparseVec = std::vector<std::pair<std::uint32_t, Rational>>;

/// Incremental semi-echelon basis over a fixed column count.
///
/// Each stored row is monic at its leading (smallest) column, its pivot, and
/// pivots are distinct. Rows are not required to vanish at pivot columns added
/// after them; reduce() still eliminates every pivot column because a row's
/// entries all lie to the right of its own pivot.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t cols);

  std::size_t cols() const { return pivot_row_.size(); }
  std::size_t size() const { return rows_.size(); }

  const SparseVec& row(std::size_t i) const { return rows_[i]; }
  std::uint32_t pivot_col(std::size_t i) const { return rows_[i].front().first; }
  std::optional<std::size_t> pivot_row(std::uint32_t col) const;

  /// The unique vector in v + span(rows) that is zero at every pivot column.
  SparseVec reduce(const SparseVec& v) const;

  /// Stores a nonzero vector that is already reduced, scaled to be monic.
  /// Returns the new row index.
  std::size_t insert_reduced(SparseVec v);

  /// reduce() followed by insert_reduced() when the remainder is nonzero.
  std::optional<std::size_t> insert(const SparseVec& v);

  /// Clears every pivot column other than its own from row i.
  void reduce_row(std::size_t i);

  /// Makes every row fully reduced, giving the reduced row-echelon form of
  /// the span (up to row order).
  void back_substitute();

 private:
  std::vector<SparseVec> rows_;
  std::vector<std::int64_t> pivot_row_;
};

}  // namespace liepres
