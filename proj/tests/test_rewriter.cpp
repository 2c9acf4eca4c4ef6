#include "liepres/analysis.hpp"
#include "liepres/quotient.hpp"
#include "liepres/rewriter.hpp"

#include <doctest.h>

using namespace liepres;

TEST_CASE("quadruple reduction examples")
{
  const G2Rewriter rw;
  CHECK(rw.reduce_quadruple(1, 2, 1, 3) == LiePoly::generator(0, 2));
  CHECK(rw.reduce_quadruple(2, 1, 1, 3) == LiePoly::generator(0, -6));
  CHECK(rw.reduce_quadruple(1, 2, 3, 3).is_zero());
  CHECK(rw.reduce_quadruple(3, 3, 1, 2) == LiePoly::generator(2, 4));

  const auto cases = rw.quadruple_cases(1, 2, 1, 2);
  REQUIRE(cases.size() == 2);
  CHECK(cases[0].pattern == "a=c");
  CHECK(cases[1].pattern == "b=d");
  CHECK(cases[0].value.is_zero());
  CHECK(cases[1].value.is_zero());
  CHECK_THROWS_AS(rw.reduce_quadruple(0, 1, 2, 3), std::out_of_range);
}

TEST_CASE("all 81 tuples reduce, overlapping patterns agree, and values match the closure")
{
  const G2Rewriter rw;
  const QuotientBasis q = quotient_closure(g2_presentation(), 8);
  const FreeLieAlgebra& alg = q.algebra();
  std::size_t overlapping = 0;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c)
        for (int d = 1; d <= 3; ++d) {
          CAPTURE(a * 1000 + b * 100 + c * 10 + d);
          const auto cases = rw.quadruple_cases(a, b, c, d);
          REQUIRE_FALSE(cases.empty());
          if (cases.size() > 1)
            ++overlapping;
          for (const auto& k : cases)
            CHECK(k.value == cases.front().value);
          LiePoly value;
          REQUIRE_NOTHROW(value = rw.reduce_quadruple(a, b, c, d));
          CHECK(value.degree() <= 1);
          const Tower t{{static_cast<Letter>(a - 1), static_cast<Letter>(b - 1), static_cast<Letter>(c - 1),
                         static_cast<Letter>(d - 1)}};
          CHECK(q.reduce(alg.tower(t)) == q.reduce(value));
        }
  CHECK(overlapping > 0);
}

TEST_CASE("canonical coordinates respect the degree-3 Jacobi relation")
{
  const G2Rewriter rw;
  CHECK(rw.canonical_towers().size() == G2Rewriter::kDim);
  auto t = [&](std::initializer_list<Letter> idx) { return rw.tower(Tower{idx}); };
  const auto a = t({2, 0, 1}), b = t({0, 1, 2}), c = t({1, 0, 2});
  for (std::size_t k = 0; k < G2Rewriter::kDim; ++k)
    CHECK(a[k] + b[k] - c[k] == 0);
  CHECK(rw.canonical_names()[8] == "[x1,[x2,x3]]");
  CHECK(is_zero(rw.bracket(t({0}), t({0}))));
}

TEST_CASE("relations vanish under the rewriter and brackets satisfy Jacobi")
{
  const G2Rewriter rw;
  const FreeLieAlgebra alg({"x1", "x2", "x3"});
  for (const auto& r : g2_relations(alg))
    CHECK(is_zero(rw.from_lie(r)));

  StructureTable raw(G2Rewriter::canonical_names());
  for (std::size_t i = 0; i < G2Rewriter::kDim; ++i)
    for (std::size_t j = i + 1; j < G2Rewriter::kDim; ++j) {
      raw.set(i, j, rw.bracket_canonical(i, j));
      RatVector sum = rw.bracket_canonical(i, j);
      for (std::size_t k = 0; k < sum.size(); ++k)
        sum[k] += rw.bracket_canonical(j, i)[k];
      CHECK(is_zero(sum));
    }
  CHECK(check_jacobi(raw).empty());
}

TEST_CASE("altered coefficients break the rewriter table")
{
  for (const QuadrupleCoefficients& c :
       {QuadrupleCoefficients{2, 5, 6}, QuadrupleCoefficients{-2, 4, 6}, QuadrupleCoefficients{2, 4, 7}}) {
    const G2Rewriter rw(c);
    StructureTable raw(G2Rewriter::canonical_names());
    bool antisymmetric = true;
    for (std::size_t i = 0; i < G2Rewriter::kDim; ++i)
      for (std::size_t j = i + 1; j < G2Rewriter::kDim; ++j) {
        raw.set(i, j, rw.bracket_canonical(i, j));
        RatVector sum = rw.bracket_canonical(i, j);
        for (std::size_t k = 0; k < sum.size(); ++k)
          sum[k] += rw.bracket_canonical(j, i)[k];
        antisymmetric = antisymmetric && is_zero(sum);
      }
    CHECK((!antisymmetric || !check_jacobi(raw).empty()));
  }
}
