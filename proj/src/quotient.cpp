#include "liepres/quotient.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include <omp.h>

namespace liepres {

namespace {

SparseVec to_sparse(const LiePoly& p, const std::map<Word, std::uint32_t, DegLexLess>& column_of)
{
  SparseVec v;
  v.reserve(p.size());
  for (const auto& [w, c] : p.terms()) {
    auto it = column_of.find(w);
    if (it == column_of.end())
      throw std::domain_error("term of degree " + std::to_string(w.size()) + " exceeds the degree bound");
    v.emplace_back(it->second, c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

LiePoly to_poly(const SparseVec& v, const std::vector<Word>& columns)
{
  LiePoly p;
  for (const auto& [c, x] : v)
    p.add_term(columns[c], x);
  return p;
}

struct QueueEntry {
  std::size_t degree;
  std::size_t row;
  bool operator>(const QueueEntry& o) const { return degree != o.degree ? degree > o.degree : row > o.row; }
};

}  // namespace

QuotientBasis closure_at(const Presentation& pres, std::shared_ptr<const FreeLieAlgebra> alg, std::size_t bound,
                         int jobs)
{
  if (bound == 0)
    throw std::invalid_argument("quotient_closure: degree bound must be >= 1");
  if (bound > alg->degree_cap())
    throw std::invalid_argument("quotient_closure: degree bound exceeds the free algebra degree cap");

  QuotientBasis q;
  q.alg_ = alg;
  q.stats_.degree_bound = bound;

  const auto words = lyndon_words(alg->rank(), bound);
  for (std::size_t d = bound; d >= 1; --d)
    for (auto it = words[d - 1].rbegin(); it != words[d - 1].rend(); ++it) {
      q.column_of_.emplace(*it, static_cast<std::uint32_t>(q.columns_.size()));
      q.columns_.push_back(*it);
    }
  q.stats_.lyndon_dim = q.columns_.size();
  q.echelon_ = std::make_unique<SparseEchelon>(q.columns_.size());
  SparseEchelon& ech = *q.echelon_;

  std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> pending;
  auto row_degree = [&](std::size_t row) { return q.columns_[ech.pivot_col(row)].size(); };
  auto add_reduced = [&](SparseVec v, Provenance prov) {
    if (v.empty())
      return;
    const std::size_t row = ech.insert_reduced(std::move(v));
    q.provenance_.push_back(prov);
    pending.push({row_degree(row), row});
  };

  const auto relations = pres.relation_polys(*alg);
  for (std::size_t r = 0; r < relations.size(); ++r) {
    if (relations[r].degree() > bound) {
      ++q.stats_.relations_above_bound;
      continue;
    }
    add_reduced(ech.reduce(to_sparse(relations[r], q.column_of_)), {Provenance::Kind::Relation, r, 0, 0});
  }

  const std::size_t rank = alg->rank();
  while (!pending.empty()) {
    const std::size_t degree = pending.top().degree;
    std::vector<std::size_t> batch;
    while (!pending.empty() && pending.top().degree == degree) {
      batch.push_back(pending.top().row);
      pending.pop();
    }
    for (auto row : batch)
      ech.reduce_row(row);
    if (degree + 1 > bound) {
      q.stats_.truncated += batch.size() * rank;
      continue;
    }

    // Candidates [x_g, row] are independent: bracket and pre-reduce them in
    // parallel against the current rows, then finish serially in a fixed
    // order. Full reduction is unique, so the result does not depend on the
    // thread count.
    const std::size_t count = batch.size() * rank;
    std::vector<SparseVec> candidates(count);
    const auto n = static_cast<std::ptrdiff_t>(count);
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
    for (std::ptrdiff_t t = 0; t < n; ++t) {
      const std::size_t row = batch[static_cast<std::size_t>(t) / rank];
      const std::size_t g = static_cast<std::size_t>(t) % rank;
      const LiePoly bracket = alg->bracket(alg->generator(g), to_poly(ech.row(row), q.columns_));
      candidates[static_cast<std::size_t>(t)] = ech.reduce(to_sparse(bracket, q.column_of_));
    }

    for (std::size_t t = 0; t < count; ++t) {
      if (candidates[t].empty())
        continue;
      add_reduced(ech.reduce(candidates[t]), {Provenance::Kind::Bracket, 0, t % rank, batch[t / rank]});
    }
  }

  ech.back_substitute();
  q.stats_.consequence_rank = ech.size();

  q.rep_index_of_col_.assign(q.columns_.size(), -1);
  for (std::size_t c = q.columns_.size(); c-- > 0;) {
    if (ech.pivot_row(static_cast<std::uint32_t>(c)))
      continue;
    q.rep_index_of_col_[c] = static_cast<std::int64_t>(q.representatives_.size());
    q.representatives_.push_back(q.columns_[c]);
    q.stats_.max_representative_degree = std::max(q.stats_.max_representative_degree, q.columns_[c].size());
  }
  return q;
}

QuotientBasis quotient_closure(const Presentation& pres, const ClosureOptions& options)
{
  auto alg = std::make_shared<const FreeLieAlgebra>(
      pres.generators(), std::max(options.degree_bound, FreeLieAlgebra::kDefaultDegreeCap));
  QuotientBasis q = closure_at(pres, alg, options.degree_bound, options.jobs);
  if (options.check_stability && options.degree_bound >= 2) {
    const QuotientBasis previous = closure_at(pres, alg, options.degree_bound - 1, options.jobs);
    q.stats_.previous_dim = previous.dim();
    q.stabilized_ = previous.dim() == q.dim() && q.stats_.relations_above_bound == 0 &&
                    q.stats_.max_representative_degree < options.degree_bound;
  }
  return q;
}

QuotientBasis quotient_closure(const Presentation& pres, std::size_t degree_bound)
{
  ClosureOptions options;
  options.degree_bound = degree_bound;
  return quotient_closure(pres, options);
}

std::vector<std::string> QuotientBasis::representative_names() const
{
  std::vector<std::string> names;
  names.reserve(representatives_.size());
  for (const auto& w : representatives_)
    names.push_back(alg_->format_word(w));
  return names;
}

RatVector QuotientBasis::reduce(const LiePoly& p) const
{
  RatVector coords(dim());
  for (const auto& [w, c] : p.terms()) {
    auto it = column_of_.find(w);
    if (it == column_of_.end())
      throw std::domain_error("reduce: term " + alg_->format_word(w) + " exceeds the degree bound " +
                              std::to_string(degree_bound()));
    const std::uint32_t col = it->second;
    if (const auto rep = rep_index_of_col_[col]; rep >= 0) {
      coords[static_cast<std::size_t>(rep)] += c;
      continue;
    }
    // Rows are fully reduced: pivot 1 followed by representative columns only.
    const SparseVec& row = echelon_->row(*echelon_->pivot_row(col));
    for (auto e = row.begin() + 1; e != row.end(); ++e)
      coords[static_cast<std::size_t>(rep_index_of_col_[e->first])] -= c * e->second;
  }
  return coords;
}

LiePoly QuotientBasis::lift(const RatVector& coords) const
{
  if (coords.size() != dim())
    throw std::invalid_argument("lift: coordinate vector has the wrong length");
  LiePoly p;
  for (std::size_t k = 0; k < coords.size(); ++k)
    p.add_term(representatives_[k], coords[k]);
  return p;
}

std::vector<KillWitness> QuotientBasis::witnesses(std::size_t degree) const
{
  std::vector<KillWitness> out;
  for (std::size_t c = columns_.size(); c-- > 0;) {
    if (columns_[c].size() != degree)
      continue;
    const auto row = echelon_->pivot_row(static_cast<std::uint32_t>(c));
    if (!row)
      continue;
    out.push_back({columns_[c], *row, provenance_[*row], reduce(LiePoly::monomial(columns_[c]))});
  }
  return out;
}

std::string QuotientBasis::describe(const Provenance& p, const Presentation& pres) const
{
  // Unwind the ad-chain back to the relation it started from.
  std::vector<std::size_t> gens;
  const Provenance* cur = &p;
  while (cur->kind == Provenance::Kind::Bracket) {
    gens.push_back(cur->generator);
    cur = &provenance_.at(cur->parent);
  }
  std::ostringstream os;
  for (auto g : gens)
    os << "[" << pres.generators().at(g) << ",";
  os << "R" << cur->relation + 1;
  for (std::size_t i = 0; i < gens.size(); ++i)
    os << "]";
  os << "  where R" << cur->relation + 1 << ": " << print_relation(pres.relations().at(cur->relation));
  return os.str();
}

}  // namespace liepres
