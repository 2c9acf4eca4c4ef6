#pragma once

#include "liepres/rat_matrix.hpp"
#include "liepres/structure_table.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace liepres {

struct JacobiViolation {
  std::size_t i = 0, j = 0, k = 0;
  RatVector residual;  // [b_i,[b_j,b_k]] + [b_j,[b_k,b_i]] + [b_k,[b_i,b_j]]
};

/// Every triple i < j < k, exact. Violations come back sorted by (i, j, k)
/// whatever the thread count.
std::vector<JacobiViolation> check_jacobi(const StructureTable& t, int jobs = 0);
std::vector<JacobiViolation> check_jacobi_serial(const StructureTable& t);

struct DerivedCenter {
  std::size_t derived_dim = 0;
  std::size_t center_dim = 0;
};
DerivedCenter derived_and_center(const StructureTable& t);

/// Dimensions of g, [g,g], [g,[g,g]], ... until they stop changing.
std::vector<std::size_t> lower_central_series(const StructureTable& t);
bool is_nilpotent(const StructureTable& t);

/// K(i,j) = trace(ad b_i ad b_j).
RatMatrix killing_form(const StructureTable& t, int jobs = 0);
RatMatrix killing_form_serial(const StructureTable& t);
/// Triples (i,j,k) with K([b_i,b_j],b_k) != K(b_i,[b_j,b_k]).
std::vector<std::array<std::size_t, 3>> killing_invariance_violations(const StructureTable& t, const RatMatrix& k);

struct CartanVerdict {
  bool ok = false;
  std::size_t normalizer_dim = 0;
  std::vector<std::string> witnesses;
};
/// Abelian and self-normalizing check for the span of the given basis elements.
CartanVerdict cartan_check(const StructureTable& t, std::span<const std::size_t> candidate);

/// Basis elements with diagonal, nonzero ad that commute with every element
/// picked before them, in basis order.
std::vector<std::size_t> diagonal_cartan_candidate(const StructureTable& t);

struct RootSpace {
  RatVector root;                      // values on the Cartan basis
  std::vector<RatVector> vectors;      // basis of the joint eigenspace
  std::vector<std::size_t> basis_indices;  // table basis elements lying in it
};

struct RootDatum {
  std::vector<std::size_t> cartan_indices;
  std::vector<RootSpace> roots;  // nonzero roots, sorted
  RootSpace zero_space;
  RatMatrix killing_on_cartan;   // K restricted to the Cartan span

  std::size_t multiplicity_total() const;
  /// (a, b) through the inverse of the Killing form on the Cartan span.
  Rational inner(const RatVector& a, const RatVector& b) const;
};

/// Joint eigenspace decomposition of ad over the Cartan span. Throws
/// std::runtime_error("not simultaneously diagonalizable over the rationals")
/// when the eigenspaces do not fill the algebra.
RootDatum root_decomposition(const StructureTable& t, std::span<const std::size_t> cartan);

struct CartanType {
  std::vector<RatVector> simple_roots;
  std::vector<std::vector<long>> matrix;
  std::string name;  // "A1", "A1xA1", "A2", "B2", "G2"
};
/// Simple roots from the lexicographic positivity functional, Cartan matrix
/// A_ij = 2(a_i,a_j)/(a_j,a_j) and the rank <= 2 catalog. Throws
/// std::runtime_error("unrecognized type: ...") outside the catalog.
CartanType cartan_matrix_and_type(const RootDatum& rd);

struct Sl3Verdict {
  bool ok = false;
  std::size_t pairs_checked = 0;
  std::vector<std::string> mismatches;
};
/// h1 h2 a12 a13 a23 a21 a31 a32 against the matrix model a_ij -> e_ij,
/// h1 -> e11 - e22, h2 -> e22 - e33, plus ad-invariance of span{x} and span{y}.
Sl3Verdict verify_sl3_subalgebra(const StructureTable& t);

struct Classification {
  std::size_t jacobi_triples = 0;
  std::optional<JacobiViolation> first_violation;
  DerivedCenter derived_center;
  bool nilpotent = false;
  Rational killing_determinant;
  std::vector<std::size_t> cartan;
  std::optional<RootDatum> roots;
  std::optional<CartanType> cartan_type;
  std::string type;  // catalog name or "unrecognized (...)"
  bool identified = false;
};

/// Jacobi, derived/center, Killing form, Cartan, roots and type in one pass.
/// Stops after the first failing stage; `type` then says why.
Classification classify(const StructureTable& t, std::optional<std::vector<std::size_t>> cartan = std::nullopt,
                        int jobs = 0);

/// Characteristic polynomial det(x I - m), coefficients from x^0 upward.
RatVector characteristic_polynomial(const RatMatrix& m);
/// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const RatVector& poly);

}  // namespace liepres
