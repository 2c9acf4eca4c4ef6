#pragma once

#include "liepres/free_lie.hpp"
#include "liepres/rational.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace liepres {

/// Levi-Civita symbol on 1-based indices: epsilon(1,2,3) = 1, totally
/// antisymmetric, zero on repeated or out-of-range indices.
int levi_civita(int i, int j, int k);

/// Parsed left-hand side of a relation: a scaled generator or a bracket.
struct LieExpr {
  Rational coeff{1};                     // scaled term only
  std::string name;                      // scaled term; empty for a bare rational 0
  std::shared_ptr<const LieExpr> left;   // bracket only
  std::shared_ptr<const LieExpr> right;  // bracket only

  bool is_bracket() const { return left != nullptr; }
};
using LieExprPtr = std::shared_ptr<const LieExpr>;

LieExprPtr make_term(Rational coeff, std::string name);
LieExprPtr make_bracket(LieExprPtr left, LieExprPtr right);
/// [x_{i1},[x_{i2},...]] over the given generator names (0-based indices).
LieExprPtr make_tower_expr(const Tower& t, const std::vector<std::string>& names);

bool structurally_equal(const LieExpr& a, const LieExpr& b);

struct RhsTerm {
  Rational coeff;
  std::string name;
  friend bool operator==(const RhsTerm&, const RhsTerm&) = default;
};

/// lhs = sum(rhs); an empty rhs means 0.
struct Relation {
  LieExprPtr lhs;
  std::vector<RhsTerm> rhs;
};

/// Generators plus relations, kept in their written form so printing and
/// reparsing is exact. Relation polynomials (lhs - rhs) are derived on demand.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generators, std::vector<Relation> relations);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Relation>& relations() const { return relations_; }
  std::size_t generator_index(std::string_view name) const;

  /// lhs - rhs for every relation, in the Lyndon basis of alg.
  std::vector<LiePoly> relation_polys(const FreeLieAlgebra& alg) const;
  LiePoly relation_poly(const FreeLieAlgebra& alg, std::size_t index) const;

  friend bool operator==(const Presentation& a, const Presentation& b);

 private:
  std::vector<std::string> generators_;
  std::vector<Relation> relations_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Grammar (whitespace-insensitive, '#' starts a line comment):
///   file     := "generators:" name+ relation*
///   relation := "relation:" lie_expr "=" rhs
///   lie_expr := "[" lie_expr "," lie_expr "]" | scaled
///   scaled   := (rational "*")? name | rational
///   rhs      := ("+"|"-")? scaled (("+"|"-") scaled)*
Presentation parse_presentation(std::string_view text);

std::string print_expr(const LieExpr& e);
std::string print_relation(const Relation& rel);
std::string print_presentation(const Presentation& p);

/// Coefficients of the three quadruple relation families
///   [x_i,[x_j,[x_i,x_k]]] = c1 eps_ijk x_i
///   [x_i,[x_i,[x_j,x_k]]] = c2 eps_ijk x_i
///   [x_i,[x_j,[x_j,x_k]]] = c3 eps_ijk x_j
struct QuadrupleCoefficients {
  Rational family1{2};
  Rational family2{4};
  Rational family3{6};
};

/// The three families instantiated over all (i,j,k) in {1,2,3}^3 on
/// generators x1 x2 x3, dropping relations that vanish in the free Lie
/// algebra. Order: family, then (i,j,k) lexicographic.
Presentation g2_presentation(const QuadrupleCoefficients& coeffs = {});
std::vector<LiePoly> g2_relations(const FreeLieAlgebra& alg, const QuadrupleCoefficients& coeffs = {});

/// e, f, h with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
Presentation sl2_presentation();
/// p, q with [p,[p,q]] = 0 and [q,[p,q]] = 0.
Presentation heisenberg_presentation();

}  // namespace liepres
