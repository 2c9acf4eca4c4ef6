#pragma once

#include "liepres/free_lie.hpp"
#include "liepres/presentation.hpp"

#include <array>
#include <string>
#include <vector>

namespace liepres {

/// One matching pattern of the quadruple case analysis.
struct QuadrupleCase {
  std::string pattern;  // "c=d", "a=b", "a=c", "a=d", "b=c", "b=d"
  LiePoly value;
};

/// Direct rewriter for the three-generator presentation with quadruple
/// relations.
///
/// Quotient elements are coordinate vectors over 14 canonical towers:
/// x1 x2 x3, [x_j,x_k] (j<k), and [x_i,[x_j,x_k]] (j<k) except
/// [x3,[x1,x2]], which Jacobi rewrites as -[x1,[x2,x3]] + [x2,[x1,x3]].
/// Degree-4 towers collapse to degree 1 through reduce_quadruple(); brackets
/// of longer expressions are expanded by Jacobi on the first argument until
/// only generator-against-tower brackets remain.
class G2Rewriter {
 public:
  static constexpr std::size_t kDim = 14;
  using Element = RatVector;

  explicit G2Rewriter(QuadrupleCoefficients coeffs = {});

  /// 0-based towers in coordinate order.
  static const std::vector<Tower>& canonical_towers();
  static std::vector<std::string> canonical_names();

  const QuadrupleCoefficients& coefficients() const { return coeffs_; }

  Element zero() const { return Element(kDim); }
  Element generator(std::size_t index) const;
  /// Any left-normed tower (0-based, length >= 1).
  Element tower(const Tower& t) const;

  /// Every pattern that applies to [x_a,[x_b,[x_c,x_d]]] (1-based), each with
  /// its degree <= 1 value. Used to check confluence.
  std::vector<QuadrupleCase> quadruple_cases(int a, int b, int c, int d) const;
  /// Image of [x_a,[x_b,[x_c,x_d]]] (1-based) in the quotient. Throws
  /// std::logic_error if no pattern applies or matching patterns disagree.
  LiePoly reduce_quadruple(int a, int b, int c, int d) const;

  /// Bracket of two quotient elements.
  Element bracket(const Element& p, const Element& q) const;
  /// Bracket of two canonical towers, by index.
  const Element& bracket_canonical(std::size_t i, std::size_t j) const { return table_[i][j]; }

  /// Image of a free Lie polynomial (Lyndon basis on three generators).
  Element from_lie(const LiePoly& p) const;

 private:
  Element bracket_generator(std::size_t a, const Element& e) const;
  Element bracket_generator_canonical(std::size_t a, std::size_t idx) const;
  Element expand_first(std::size_t i, std::size_t j) const;

  QuadrupleCoefficients coeffs_;
  std::array<std::array<Element, kDim>, kDim> table_;
};

}  // namespace liepres
