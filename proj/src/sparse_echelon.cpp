#include "liepres/sparse_echelon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace liepres {

SparseEchelon::SparseEchelon(std::size_t cols) : pivot_row_(cols, -1) {}

std::optional<std::size_t> SparseEchelon::pivot_row(std::uint32_t col) const
{
  const auto r = pivot_row_.at(col);
  if (r < 0)
    return std::nullopt;
  return static_cast<std::size_t>(r);
}

SparseVec SparseEchelon::reduce(const SparseVec& v) const
{
  if (v.empty())
    return {};
  // Dense accumulator reused per thread; always left all-zero on exit.
  thread_local std::vector<Rational> acc;
  if (acc.size() < cols())
    acc.resize(cols());

  for (const auto& [c, x] : v)
    acc[c] = x;

  SparseVec out;
  const std::size_t first = v.front().first;
  for (std::size_t c = first; c < cols(); ++c) {
    if (sgn(acc[c]) == 0)
      continue;
    const auto r = pivot_row_[c];
    if (r < 0) {
      out.emplace_back(static_cast<std::uint32_t>(c), std::move(acc[c]));
      acc[c] = 0;
      continue;
    }
    const Rational factor = acc[c];
    for (const auto& [col, y] : rows_[r])
      acc[col] -= factor * y;
    // Pivot entries are 1, so this is already zero up to representation.
    acc[c] = 0;
  }
  return out;
}

std::size_t SparseEchelon::insert_reduced(SparseVec v)
{
  if (v.empty())
    throw std::invalid_argument("insert_reduced: zero vector");
  const std::uint32_t pivot = v.front().first;
  if (pivot_row_.at(pivot) >= 0)
    throw std::logic_error("insert_reduced: pivot column already taken");
  const Rational inv = 1 / v.front().second;
  for (auto& entry : v)
    entry.second *= inv;
  rows_.push_back(std::move(v));
  pivot_row_[pivot] = static_cast<std::int64_t>(rows_.size() - 1);
  return rows_.size() - 1;
}

std::optional<std::size_t> SparseEchelon::insert(const SparseVec& v)
{
  auto r = reduce(v);
  if (r.empty())
    return std::nullopt;
  return insert_reduced(std::move(r));
}

void SparseEchelon::reduce_row(std::size_t i)
{
  SparseVec& row = rows_.at(i);
  SparseVec tail(row.begin() + 1, row.end());
  SparseVec reduced = reduce(tail);
  row.resize(1);
  row.insert(row.end(), std::make_move_iterator(reduced.begin()), std::make_move_iterator(reduced.end()));
}

void SparseEchelon::back_substitute()
{
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [this](std::size_t a, std::size_t b) { return pivot_col(a) > pivot_col(b); });
  for (auto i : order)
    reduce_row(i);
}

}  // namespace liepres
