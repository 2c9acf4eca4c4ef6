#pragma once

#include "liepres/free_lie.hpp"
#include "liepres/presentation.hpp"
#include "liepres/quotient.hpp"
#include "liepres/rat_matrix.hpp"
#include "liepres/rewriter.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace liepres {

/// Structure constants [b_i, b_j] = sum_k c^k_ij b_k of a finite-dimensional
/// Lie algebra with a named basis. Only i < j is stored.
class StructureTable {
 public:
  StructureTable() = default;
  explicit StructureTable(std::vector<std::string> names);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;

  /// [b_i, b_j] for any i, j; the lower triangle is rebuilt by antisymmetry.
  RatVector bracket(std::size_t i, std::size_t j) const;
  RatVector bracket(const RatVector& u, const RatVector& v) const;
  /// Stores [b_i, b_j] = coeffs for i != j (orientation handled internally).
  void set(std::size_t i, std::size_t j, RatVector coeffs);

  /// ad(b_i) with entry (k, j) = c^k_ij.
  RatMatrix ad(std::size_t i) const;
  RatVector unit(std::size_t i) const;

  /// "2h1 + h2", "-x1", "0".
  std::string format(const RatVector& v) const;

  friend bool operator==(const StructureTable&, const StructureTable&) = default;

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const;

  std::vector<std::string> names_;
  std::vector<RatVector> upper_;
};

/// A named basis element defined as a rational combination of towers.
struct NamedElement {
  std::string name;
  std::vector<std::pair<Rational, Tower>> definition;
};
using NamedBasisMap = std::vector<NamedElement>;

/// x_i, y_1 = 1/2 [x2,x3], y_2 = 1/2 [x3,x1], y_3 = 1/2 [x1,x2],
/// a_ij = 1/3 [x_?, y_?] and h_1, h_2 as combinations of [x_i, y_i], listed
/// in the order h1 h2 a12 a13 a23 a21 a31 a32 x1 x2 x3 y1 y2 y3.
NamedBasisMap g2_named_basis();
LiePoly to_lie(const NamedElement& e, const FreeLieAlgebra& alg);
G2Rewriter::Element to_rewriter(const NamedElement& e, const G2Rewriter& rw);

/// Table of a quotient in its representative basis, or in a named basis when
/// one is given. Throws std::invalid_argument("names do not form a basis")
/// when the named elements are dependent modulo the consequence span, and
/// std::domain_error when a bracket needs a degree above the bound.
/// Pairs are computed in parallel; jobs = 1 runs serially.
StructureTable structure_table(const QuotientBasis& q, const NamedBasisMap* names = nullptr, int jobs = 0);

/// Table of the rewriter quotient in a named basis.
StructureTable rewriter_structure_table(const G2Rewriter& rw, const NamedBasisMap& names);

struct PairMismatch {
  std::string left;
  std::string right;
  std::string rewriter;
  std::string closure;
};

struct CrossValidationReport {
  bool applicable = false;
  std::string note;
  std::size_t closure_dim = 0;
  bool closure_stabilized = false;
  std::size_t pairs_compared = 0;
  std::vector<std::string> relation_residuals;  // relations the rewriter rules do not imply
  std::vector<std::string> problems;            // dimension, basis or antisymmetry failures
  std::vector<PairMismatch> mismatches;

  bool agree() const { return applicable && relation_residuals.empty() && problems.empty() && mismatches.empty(); }
};

/// Runs the rewriter and the ideal closure on the same presentation and
/// compares all brackets of the named g2 basis. Presentations that are not
/// three generators with relations of degree 4 plus degree 1 are reported as
/// not applicable.
CrossValidationReport cross_validate(const Presentation& pres, const ClosureOptions& options = {});
CrossValidationReport cross_validate(const Presentation& pres, const QuotientBasis& closure, int jobs = 0);

}  // namespace liepres
