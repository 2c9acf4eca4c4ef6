#pragma once

#include "liepres/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace liepres {

/// Dense row-major matrix over the rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);
  /// All rows must have the same length; an empty list gives a 0x0 matrix.
  static RatMatrix from_rows(std::span<const RatVector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  RatVector row_vector(std::size_t r) const;
  RatVector column_vector(std::size_t c) const;

  RatMatrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatVector operator*(const RatMatrix& a, const RatVector& v);

struct RrefResult {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. The pivot in each column is the first nonzero
/// entry at or below the current row. Elimination of the other rows at each
/// pivot step runs as an OpenMP loop.
RrefResult rref(const RatMatrix& m);

/// Single-threaded reference for rref(); results are identical.
RrefResult rref_serial(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Basis of {v : m v = 0}, one vector per free column (free variable set to 1).
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Coefficients c with sum_i c_i basis_i == target, or nullopt when target is
/// outside the span. With a dependent basis the coefficients of redundant
/// vectors are zero.
std::optional<RatVector> solve_in_span(std::span<const RatVector> basis, const RatVector& target);

Rational determinant(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);

}  // namespace liepres
