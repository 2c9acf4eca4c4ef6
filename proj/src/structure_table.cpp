#include "liepres/structure_table.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <omp.h>

namespace liepres {

StructureTable::StructureTable(std::vector<std::string> names)
    : names_(std::move(names)), upper_(names_.size() * (names_.size() - (names_.empty() ? 0 : 1)) / 2,
                                       RatVector(names_.size()))
{
}

std::optional<std::size_t> StructureTable::find(std::string_view name) const
{
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t StructureTable::index_of(std::string_view name) const
{
  if (auto i = find(name))
    return *i;
  throw std::invalid_argument("no basis element named '" + std::string(name) + "'");
}

std::size_t StructureTable::pair_index(std::size_t i, std::size_t j) const
{
  // Row-major upper triangle without the diagonal.
  const std::size_t n = dim();
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

RatVector StructureTable::bracket(std::size_t i, std::size_t j) const
{
  if (i >= dim() || j >= dim())
    throw std::out_of_range("StructureTable::bracket: index out of range");
  if (i == j)
    return RatVector(dim());
  if (i < j)
    return upper_[pair_index(i, j)];
  RatVector v = upper_[pair_index(j, i)];
  for (auto& x : v)
    x = -x;
  return v;
}

RatVector StructureTable::bracket(const RatVector& u, const RatVector& v) const
{
  RatVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(u[i]) == 0)
      continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (i == j || sgn(v[j]) == 0)
        continue;
      const Rational s = u[i] * v[j];
      const RatVector b = bracket(i, j);
      for (std::size_t k = 0; k < dim(); ++k)
        if (sgn(b[k]) != 0)
          out[k] += s * b[k];
    }
  }
  return out;
}

void StructureTable::set(std::size_t i, std::size_t j, RatVector coeffs)
{
  if (i >= dim() || j >= dim() || i == j)
    throw std::out_of_range("StructureTable::set: bad index pair");
  if (coeffs.size() != dim())
    throw std::invalid_argument("StructureTable::set: coefficient vector has the wrong length");
  if (i > j) {
    std::swap(i, j);
    for (auto& x : coeffs)
      x = -x;
  }
  upper_[pair_index(i, j)] = std::move(coeffs);
}

RatMatrix StructureTable::ad(std::size_t i) const
{
  RatMatrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    const RatVector b = bracket(i, j);
    for (std::size_t k = 0; k < dim(); ++k)
      m(k, j) = b[k];
  }
  return m;
}

RatVector StructureTable::unit(std::size_t i) const
{
  RatVector v(dim());
  v.at(i) = 1;
  return v;
}

std::string StructureTable::format(const RatVector& v) const
{
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) == 0)
      continue;
    const Rational mag = abs(v[k]);
    if (first)
      os << (sgn(v[k]) < 0 ? "-" : "");
    else
      os << (sgn(v[k]) < 0 ? " - " : " + ");
    if (mag != 1)
      os << mag.get_str();
    os << names_[k];
    first = false;
  }
  return first ? "0" : os.str();
}

// ------------------------------------------------------------ named basis

NamedBasisMap g2_named_basis()
{
  const Rational half(1, 2);
  const Rational third(1, 3);
  auto T = [](std::initializer_list<int> one_based) {
    Tower t;
    for (int i : one_based)
      t.indices.push_back(static_cast<Letter>(i - 1));
    return t;
  };
  // y_1 = 1/2 [x2,x3], y_2 = 1/2 [x3,x1], y_3 = 1/2 [x1,x2]; the a's and h's
  // bracket a generator with one of these, scaled by 1/3.
  return {
      {"h1", {{third * half, T({1, 2, 3})}, {-third * half, T({2, 3, 1})}}},
      {"h2", {{third * half, T({2, 3, 1})}, {-third * half, T({3, 1, 2})}}},
      {"a12", {{third * half, T({2, 2, 3})}}},
      {"a13", {{third * half, T({3, 2, 3})}}},
      {"a23", {{third * half, T({3, 3, 1})}}},
      {"a21", {{third * half, T({1, 3, 1})}}},
      {"a31", {{third * half, T({1, 1, 2})}}},
      {"a32", {{third * half, T({2, 1, 2})}}},
      {"x1", {{1, T({1})}}},
      {"x2", {{1, T({2})}}},
      {"x3", {{1, T({3})}}},
      {"y1", {{half, T({2, 3})}}},
      {"y2", {{half, T({3, 1})}}},
      {"y3", {{half, T({1, 2})}}},
  };
}

LiePoly to_lie(const NamedElement& e, const FreeLieAlgebra& alg)
{
  LiePoly out;
  for (const auto& [c, t] : e.definition)
    out += c * alg.tower(t);
  return out;
}

G2Rewriter::Element to_rewriter(const NamedElement& e, const G2Rewriter& rw)
{
  G2Rewriter::Element out = rw.zero();
  for (const auto& [c, t] : e.definition) {
    const auto v = rw.tower(t);
    for (std::size_t k = 0; k < out.size(); ++k)
      out[k] += c * v[k];
  }
  return out;
}

namespace {

RatVector row_times(const RatVector& row, const RatMatrix& m)
{
  RatVector out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (sgn(row[i]) == 0)
      continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0)
        out[j] += row[i] * m(i, j);
  }
  return out;
}

// Change of basis: rows of `coords` are the new basis in old coordinates.
// Returns the inverse, or throws when the rows are dependent.
RatMatrix change_of_basis(const std::vector<RatVector>& coords)
{
  const RatMatrix m = RatMatrix::from_rows(coords);
  auto inv = inverse(m);
  if (!inv)
    throw std::invalid_argument("names do not form a basis");
  return *inv;
}

}  // namespace

StructureTable structure_table(const QuotientBasis& q, const NamedBasisMap* names, int jobs)
{
  const FreeLieAlgebra& alg = q.algebra();
  std::vector<std::string> labels;
  std::vector<LiePoly> elements;
  std::optional<RatMatrix> to_named;

  if (names) {
    if (names->size() != q.dim())
      throw std::invalid_argument("names do not form a basis");
    std::vector<RatVector> coords;
    for (const auto& e : *names) {
      labels.push_back(e.name);
      elements.push_back(to_lie(e, alg));
      coords.push_back(q.reduce(elements.back()));
    }
    to_named = change_of_basis(coords);
  } else {
    labels = q.representative_names();
    for (std::size_t k = 0; k < q.dim(); ++k)
      elements.push_back(q.representative(k));
  }

  StructureTable table(labels);
  const std::size_t n = q.dim();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      pairs.emplace_back(i, j);

  std::vector<RatVector> results(pairs.size());
  const auto count = static_cast<std::ptrdiff_t>(pairs.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    try {
      const auto [i, j] = pairs[static_cast<std::size_t>(t)];
      RatVector c = q.reduce(alg.bracket(elements[i], elements[j]));
      results[static_cast<std::size_t>(t)] = to_named ? row_times(c, *to_named) : std::move(c);
    } catch (...) {
#pragma omp critical(liepres_table_failure)
      if (!failure)
        failure = std::current_exception();
    }
  }
  if (failure)
    std::rethrow_exception(failure);

  for (std::size_t t = 0; t < pairs.size(); ++t)
    table.set(pairs[t].first, pairs[t].second, std::move(results[t]));
  return table;
}

StructureTable rewriter_structure_table(const G2Rewriter& rw, const NamedBasisMap& names)
{
  if (names.size() != G2Rewriter::kDim)
    throw std::invalid_argument("names do not form a basis");
  std::vector<std::string> labels;
  std::vector<RatVector> elements;
  for (const auto& e : names) {
    labels.push_back(e.name);
    elements.push_back(to_rewriter(e, rw));
  }
  const RatMatrix to_named = change_of_basis(elements);
  StructureTable table(labels);
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      table.set(i, j, row_times(rw.bracket(elements[i], elements[j]), to_named));
  return table;
}

// ---------------------------------------------------------- cross-check

namespace {

std::optional<std::string> rewriter_inapplicable(const Presentation& pres, const std::vector<LiePoly>& rels)
{
  if (pres.generators().size() != 3)
    return "rewriter not applicable: needs exactly 3 generators, found " + std::to_string(pres.generators().size());
  for (std::size_t r = 0; r < rels.size(); ++r)
    for (const auto& [w, c] : rels[r].terms())
      if (w.size() != 4 && w.size() != 1)
        return "rewriter not applicable: relation R" + std::to_string(r + 1) +
               " is not a quadruple relation (term of degree " + std::to_string(w.size()) + ")";
  return std::nullopt;
}

}  // namespace

CrossValidationReport cross_validate(const Presentation& pres, const QuotientBasis& closure, int jobs)
{
  CrossValidationReport report;
  report.closure_dim = closure.dim();
  report.closure_stabilized = closure.stabilized();

  const FreeLieAlgebra& alg = closure.algebra();
  const auto rels = pres.relation_polys(alg);
  if (auto why = rewriter_inapplicable(pres, rels)) {
    report.note = *why;
    return report;
  }
  report.applicable = true;

  const G2Rewriter rw;
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const auto image = rw.from_lie(rels[r]);
    if (!is_zero(image))
      report.relation_residuals.push_back("R" + std::to_string(r + 1) + " leaves " +
                                          StructureTable(G2Rewriter::canonical_names()).format(image));
  }

  const NamedBasisMap names = g2_named_basis();
  const StructureTable expected = rewriter_structure_table(rw, names);

  // The rewriter expands only on the first argument, so antisymmetry of its
  // raw brackets is a genuine consistency check.
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      const auto ei = to_rewriter(names[i], rw);
      const auto ej = to_rewriter(names[j], rw);
      auto sum = rw.bracket(ei, ej);
      const auto back = rw.bracket(ej, ei);
      for (std::size_t k = 0; k < sum.size(); ++k)
        sum[k] += back[k];
      if (!is_zero(sum))
        report.problems.push_back("rewriter bracket not antisymmetric on (" + names[i].name + "," +
                                  names[j].name + ")");
    }

  if (closure.dim() != G2Rewriter::kDim) {
    report.problems.push_back("closure dimension " + std::to_string(closure.dim()) + " differs from rewriter dimension " +
                              std::to_string(G2Rewriter::kDim));
    return report;
  }

  StructureTable derived;
  try {
    derived = structure_table(closure, &names, jobs);
  } catch (const std::exception& e) {
    report.problems.push_back(std::string("closure table: ") + e.what());
    return report;
  }

  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      ++report.pairs_compared;
      const auto a = expected.bracket(i, j);
      const auto b = derived.bracket(i, j);
      if (a != b)
        report.mismatches.push_back({names[i].name, names[j].name, expected.format(a), derived.format(b)});
    }
  return report;
}

CrossValidationReport cross_validate(const Presentation& pres, const ClosureOptions& options)
{
  return cross_validate(pres, quotient_closure(pres, options), options.jobs);
}

}  // namespace liepres
