#include "liepres/rat_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace liepres {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

RatMatrix RatMatrix::identity(std::size_t n)
{
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(std::span<const RatVector> rows)
{
  if (rows.empty())
    return {};
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_)
      throw std::invalid_argument("from_rows: ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

RatVector RatMatrix::row_vector(std::size_t r) const
{
  auto s = row(r);
  return {s.begin(), s.end()};
}

RatVector RatMatrix::column_vector(std::size_t c) const
{
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

RatMatrix RatMatrix::transpose() const
{
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

bool RatMatrix::is_zero() const
{
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b)
{
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product: shape mismatch");
  RatMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0)
          p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

RatVector operator*(const RatMatrix& a, const RatVector& v)
{
  if (a.cols() != v.size())
    throw std::invalid_argument("matrix-vector product: shape mismatch");
  RatVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0)
        out[i] += a(i, k) * v[k];
  return out;
}

namespace {

// One pivot step shared by both rref variants: find the pivot row, swap it
// up and normalize. Returns false when the column has no pivot.
bool prepare_pivot(RatMatrix& m, std::size_t lead_row, std::size_t col)
{
  std::size_t r = lead_row;
  while (r < m.rows() && sgn(m(r, col)) == 0)
    ++r;
  if (r == m.rows())
    return false;
  if (r != lead_row)
    for (std::size_t c = 0; c < m.cols(); ++c)
      swap(m(r, c), m(lead_row, c));
  const Rational inv = 1 / m(lead_row, col);
  for (std::size_t c = col; c < m.cols(); ++c)
    m(lead_row, c) *= inv;
  return true;
}

void eliminate_row(RatMatrix& m, std::size_t target, std::size_t lead_row, std::size_t col)
{
  if (target == lead_row || sgn(m(target, col)) == 0)
    return;
  const Rational factor = m(target, col);
  for (std::size_t c = col; c < m.cols(); ++c)
    if (sgn(m(lead_row, c)) != 0)
      m(target, c) -= factor * m(lead_row, c);
}

}  // namespace

RrefResult rref_serial(const RatMatrix& input)
{
  RrefResult out{input, {}};
  RatMatrix& m = out.reduced;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    if (!prepare_pivot(m, lead, col))
      continue;
    for (std::size_t r = 0; r < m.rows(); ++r)
      eliminate_row(m, r, lead, col);
    out.pivots.push_back(col);
    ++lead;
  }
  return out;
}

RrefResult rref(const RatMatrix& input)
{
  RrefResult out{input, {}};
  RatMatrix& m = out.reduced;
  const auto rows = static_cast<std::ptrdiff_t>(m.rows());
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    if (!prepare_pivot(m, lead, col))
      continue;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t r = 0; r < rows; ++r)
      eliminate_row(m, static_cast<std::size_t>(r), lead, col);
    out.pivots.push_back(col);
    ++lead;
  }
  return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

std::vector<RatVector> kernel_basis(const RatMatrix& m)
{
  const auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots)
    is_pivot[p] = true;

  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve_in_span(std::span<const RatVector> basis, const RatVector& target)
{
  if (basis.empty())
    return is_zero(target) ? std::optional<RatVector>(RatVector{}) : std::nullopt;

  // Augmented system [b_1 ... b_k | target] in column form.
  const std::size_t n = target.size();
  const std::size_t k = basis.size();
  RatMatrix aug(n, k + 1);
  for (std::size_t j = 0; j < k; ++j) {
    if (basis[j].size() != n)
      throw std::invalid_argument("solve_in_span: length mismatch");
    for (std::size_t i = 0; i < n; ++i)
      aug(i, j) = basis[j][i];
  }
  for (std::size_t i = 0; i < n; ++i)
    aug(i, k) = target[i];

  const auto [reduced, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == k)
    return std::nullopt;
  RatVector coeffs(k);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    coeffs[pivots[i]] = reduced(i, k);
  return coeffs;
}

Rational determinant(const RatMatrix& input)
{
  if (input.rows() != input.cols())
    throw std::invalid_argument("determinant of a non-square matrix");
  RatMatrix m = input;
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t r = col;
    while (r < n && sgn(m(r, col)) == 0)
      ++r;
    if (r == n)
      return 0;
    if (r != col) {
      for (std::size_t c = 0; c < n; ++c)
        swap(m(r, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(m(i, col)) == 0)
        continue;
      const Rational factor = m(i, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c)
        m(i, c) -= factor * m(col, c);
    }
  }
  return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& m)
{
  if (m.rows() != m.cols())
    throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto [reduced, pivots] = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = reduced(i, n + j);
  return inv;
}

}  // namespace liepres
