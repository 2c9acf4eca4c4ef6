#pragma once

#include "liepres/free_lie.hpp"
#include "liepres/presentation.hpp"
#include "liepres/sparse_echelon.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace liepres {

/// Where a row of the consequence span came from.
struct Provenance {
  enum class Kind { Relation, Bracket } kind = Kind::Relation;
  std::size_t relation = 0;   // Kind::Relation
  std::size_t generator = 0;  // Kind::Bracket: [x_generator, parent row]
  std::size_t parent = 0;
};

/// The consequence row whose pivot eliminates a given Lyndon monomial, with
/// the monomial's normal form over the representatives.
struct KillWitness {
  Word monomial;
  std::size_t row = 0;
  Provenance source;
  RatVector normal_form;
};

struct ClosureStats {
  std::size_t degree_bound = 0;
  std::size_t lyndon_dim = 0;        // Lyndon monomials of degree <= bound
  std::size_t consequence_rank = 0;  // dim W
  std::size_t truncated = 0;         // consequences [x_g, row] above the bound
  std::size_t relations_above_bound = 0;
  std::size_t max_representative_degree = 0;
  std::optional<std::size_t> previous_dim;  // quotient dimension at bound - 1
};

struct ClosureOptions {
  std::size_t degree_bound = 8;
  /// Threads for candidate generation and pre-reduction; 0 = OpenMP default,
  /// 1 = the serial reference path. Output does not depend on this value.
  int jobs = 0;
  bool check_stability = true;
};

/// Finite-dimensional quotient of the free Lie algebra truncated at a degree
/// bound: (Lyndon span up to the bound) / W, where W is the consequence span
/// closed under ad(generator) within the bound.
class QuotientBasis {
 public:
  std::size_t dim() const { return representatives_.size(); }
  std::size_t degree_bound() const { return stats_.degree_bound; }
  bool stabilized() const { return stabilized_; }
  const ClosureStats& stats() const { return stats_; }
  const FreeLieAlgebra& algebra() const { return *alg_; }
  std::shared_ptr<const FreeLieAlgebra> algebra_ptr() const { return alg_; }

  /// Lyndon words of the representatives, ordered by degree then lexicographically.
  const std::vector<Word>& representatives() const { return representatives_; }
  LiePoly representative(std::size_t k) const { return LiePoly::monomial(representatives_.at(k)); }
  std::vector<std::string> representative_names() const;

  /// Coordinates of p modulo W. Throws std::domain_error if p has a term
  /// above the degree bound.
  RatVector reduce(const LiePoly& p) const;
  LiePoly lift(const RatVector& coords) const;

  /// For each non-representative Lyndon monomial of the given degree, the
  /// consequence that eliminates it.
  std::vector<KillWitness> witnesses(std::size_t degree) const;
  const Provenance& provenance(std::size_t row) const { return provenance_.at(row); }
  std::string describe(const Provenance& p, const Presentation& pres) const;

 private:
  friend QuotientBasis closure_at(const Presentation&, std::shared_ptr<const FreeLieAlgebra>, std::size_t, int);
  friend QuotientBasis quotient_closure(const Presentation&, const ClosureOptions&);

  std::shared_ptr<const FreeLieAlgebra> alg_;
  std::vector<Word> columns_;                // column index -> Lyndon word
  std::map<Word, std::uint32_t, DegLexLess> column_of_;
  std::vector<std::int64_t> rep_index_of_col_;  // -1 for pivot columns
  std::vector<Word> representatives_;
  std::unique_ptr<SparseEchelon> echelon_;   // fully reduced after closure
  std::vector<Provenance> provenance_;       // per echelon row
  ClosureStats stats_;
  bool stabilized_ = false;
};

/// Closure of the relation span under ad(generator), truncated at the bound.
///
/// Columns are Lyndon words ordered by (degree desc, lex desc), so a row's
/// pivot is its highest-degree, lexicographically largest term and the
/// non-pivot columns left over favour low degree and small words.
///
/// stabilized is set when the quotient dimension at bound - 1 equals the
/// dimension at bound and no representative has degree >= bound. The second
/// condition means every monomial of degree bound reduces to lower degree,
/// which by induction reduces every higher bracket too.
QuotientBasis quotient_closure(const Presentation& pres, const ClosureOptions& options = {});
QuotientBasis quotient_closure(const Presentation& pres, std::size_t degree_bound);

}  // namespace liepres
