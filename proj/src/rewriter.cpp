#include "liepres/rewriter.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace liepres {

namespace {

std::size_t canonical_index(const std::vector<Letter>& idx)
{
  const auto& towers = G2Rewriter::canonical_towers();
  for (std::size_t i = 0; i < towers.size(); ++i)
    if (towers[i].indices == idx)
      return i;
  throw std::logic_error("not a canonical tower");
}

void axpy(RatVector& y, const Rational& a, const RatVector& x)
{
  if (sgn(a) == 0)
    return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (sgn(x[i]) != 0)
      y[i] += a * x[i];
}

}  // namespace

const std::vector<Tower>& G2Rewriter::canonical_towers()
{
  static const std::vector<Tower> towers = {
      {{0}},       {{1}},       {{2}},                                            //
      {{0, 1}},    {{0, 2}},    {{1, 2}},                                         //
      {{0, 0, 1}}, {{0, 0, 2}}, {{0, 1, 2}}, {{1, 0, 1}}, {{1, 0, 2}}, {{1, 1, 2}},  //
      {{2, 0, 2}}, {{2, 1, 2}},
  };
  return towers;
}

std::vector<std::string> G2Rewriter::canonical_names()
{
  std::vector<std::string> names;
  for (const auto& t : canonical_towers()) {
    std::string s = "x" + std::to_string(t.indices.back() + 1);
    for (auto it = t.indices.rbegin() + 1; it != t.indices.rend(); ++it)
      s = "[x" + std::to_string(*it + 1) + "," + s + "]";
    names.push_back(s);
  }
  return names;
}

G2Rewriter::G2Rewriter(QuadrupleCoefficients coeffs) : coeffs_(std::move(coeffs))
{
  const auto& towers = canonical_towers();
  // Rows are filled by increasing degree of the first argument; expand_first
  // only reads rows of strictly lower degree.
  for (std::size_t degree = 1; degree <= 3; ++degree)
    for (std::size_t i = 0; i < kDim; ++i) {
      if (towers[i].indices.size() != degree)
        continue;
      for (std::size_t j = 0; j < kDim; ++j)
        table_[i][j] = degree == 1 ? bracket_generator_canonical(towers[i].indices[0], j) : expand_first(i, j);
    }
}

G2Rewriter::Element G2Rewriter::generator(std::size_t index) const
{
  if (index >= 3)
    throw std::out_of_range("G2Rewriter: generator index out of range");
  Element e = zero();
  e[index] = 1;
  return e;
}

G2Rewriter::Element G2Rewriter::tower(const Tower& t) const
{
  if (t.indices.empty())
    throw std::invalid_argument("G2Rewriter::tower: empty tower");
  Element acc = generator(t.indices.back());
  for (auto it = t.indices.rbegin() + 1; it != t.indices.rend(); ++it)
    acc = bracket_generator(*it, acc);
  return acc;
}

std::vector<QuadrupleCase> G2Rewriter::quadruple_cases(int a, int b, int c, int d) const
{
  for (int v : {a, b, c, d})
    if (v < 1 || v > 3)
      throw std::out_of_range("quadruple index outside {1,2,3}");
  std::vector<QuadrupleCase> cases;
  if (c == d) {
    cases.push_back({"c=d", {}});
    return cases;
  }
  Rational sign = 1;
  if (c > d) {
    std::swap(c, d);
    sign = -1;
  }
  auto gen = [](int one_based, const Rational& coeff) {
    return LiePoly::generator(static_cast<std::size_t>(one_based - 1), coeff);
  };
  // [x_i,[x_i,[x_j,x_k]]] = c2 eps_ijk x_i
  if (a == b)
    cases.push_back({"a=b", gen(a, sign * coeffs_.family2 * levi_civita(a, c, d))});
  // [x_i,[x_j,[x_i,x_k]]] = c1 eps_ijk x_i, and its antisymmetric twin
  if (a == c)
    cases.push_back({"a=c", gen(a, sign * coeffs_.family1 * levi_civita(a, b, d))});
  if (a == d)
    cases.push_back({"a=d", gen(a, -sign * coeffs_.family1 * levi_civita(a, b, c))});
  // [x_i,[x_j,[x_j,x_k]]] = c3 eps_ijk x_j, and its antisymmetric twin
  if (b == c)
    cases.push_back({"b=c", gen(b, sign * coeffs_.family3 * levi_civita(a, b, d))});
  if (b == d)
    cases.push_back({"b=d", gen(b, -sign * coeffs_.family3 * levi_civita(a, b, c))});
  return cases;
}

LiePoly G2Rewriter::reduce_quadruple(int a, int b, int c, int d) const
{
  const auto cases = quadruple_cases(a, b, c, d);
  const std::string where = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
                            std::to_string(d) + ")";
  if (cases.empty())
    throw std::logic_error("reduce_quadruple: no relation pattern applies to " + where);
  for (const auto& other : cases)
    if (!(other.value == cases.front().value))
      throw std::logic_error("reduce_quadruple: patterns " + cases.front().pattern + " and " + other.pattern +
                             " disagree on " + where);
  return cases.front().value;
}

G2Rewriter::Element G2Rewriter::bracket_generator_canonical(std::size_t a, std::size_t idx) const
{
  const auto& t = canonical_towers()[idx].indices;
  Element out = zero();
  switch (t.size()) {
    case 1: {
      const std::size_t b = t[0];
      if (a < b)
        out[canonical_index({static_cast<Letter>(a), static_cast<Letter>(b)})] = 1;
      else if (a > b)
        out[canonical_index({static_cast<Letter>(b), static_cast<Letter>(a)})] = -1;
      return out;
    }
    case 2: {
      const std::vector<Letter> three{static_cast<Letter>(a), t[0], t[1]};
      if (three == std::vector<Letter>{2, 0, 1}) {
        // [x3,[x1,x2]] = -[x1,[x2,x3]] + [x2,[x1,x3]]
        out[canonical_index({0, 1, 2})] = -1;
        out[canonical_index({1, 0, 2})] = 1;
      } else {
        out[canonical_index(three)] = 1;
      }
      return out;
    }
    case 3: {
      const LiePoly low = reduce_quadruple(static_cast<int>(a) + 1, t[0] + 1, t[1] + 1, t[2] + 1);
      for (const auto& [w, c] : low.terms())
        out[w.front()] += c;
      return out;
    }
    default:
      throw std::logic_error("canonical tower of unexpected length");
  }
}

G2Rewriter::Element G2Rewriter::bracket_generator(std::size_t a, const Element& e) const
{
  Element out = zero();
  for (std::size_t k = 0; k < kDim; ++k)
    if (sgn(e[k]) != 0)
      axpy(out, e[k], bracket_generator_canonical(a, k));
  return out;
}

// [T1, T2] with T1 = [x_a, T1'] expands as [x_a,[T1',T2]] - [T1',[x_a,T2]].
G2Rewriter::Element G2Rewriter::expand_first(std::size_t i, std::size_t j) const
{
  const auto& t = canonical_towers()[i].indices;
  const std::size_t a = t.front();
  const std::size_t rest = canonical_index(std::vector<Letter>(t.begin() + 1, t.end()));

  Element out = bracket_generator(a, table_[rest][j]);
  const Element& inner = table_[a][j];
  for (std::size_t l = 0; l < kDim; ++l)
    axpy(out, -inner[l], table_[rest][l]);
  return out;
}

G2Rewriter::Element G2Rewriter::bracket(const Element& p, const Element& q) const
{
  if (p.size() != kDim || q.size() != kDim)
    throw std::invalid_argument("G2Rewriter::bracket: wrong coordinate length");
  Element out = zero();
  for (std::size_t i = 0; i < kDim; ++i) {
    if (sgn(p[i]) == 0)
      continue;
    for (std::size_t j = 0; j < kDim; ++j)
      if (sgn(q[j]) != 0)
        axpy(out, p[i] * q[j], table_[i][j]);
  }
  return out;
}

G2Rewriter::Element G2Rewriter::from_lie(const LiePoly& p) const
{
  std::map<Word, Element, DegLexLess> cache;
  auto image = [&](auto&& self, const Word& w) -> Element {
    if (w.size() == 1)
      return generator(w.front());
    if (auto it = cache.find(w); it != cache.end())
      return it->second;
    auto [u, v] = standard_factorization(w);
    Element e = bracket(self(self, u), self(self, v));
    cache.emplace(w, e);
    return e;
  };
  Element out = zero();
  for (const auto& [w, c] : p.terms())
    axpy(out, c, image(image, w));
  return out;
}

}  // namespace liepres
