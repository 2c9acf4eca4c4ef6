#include "oracles.hpp"

#include "liepres/rat_matrix.hpp"
#include "liepres/rational.hpp"
#include "liepres/sparse_echelon.hpp"

#include <doctest.h>

#include <random>

using namespace liepres;

namespace {

RatMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int zero_percent)
{
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4), pct(0, 99);
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (pct(rng) >= zero_percent)
        m(r, c) = make_rational(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("rational text forms")
{
  CHECK(to_pq_string(make_rational(4, 2)) == "2/1");
  CHECK(to_pq_string(make_rational(3, -6)) == "-1/2");
  CHECK(to_pq_string(Rational(0)) == "0/1");
  CHECK(to_compact_string(make_rational(-6, 4)) == "-3/2");
  CHECK(to_compact_string(make_rational(7, 1)) == "7");
  CHECK(parse_rational("-3/6") == make_rational(-1, 2));
  CHECK(parse_rational("+5") == 5);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("rref agrees with the serial path and with fraction-free elimination")
{
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + trial % 9, cols = 1 + (trial * 7) % 11;
    const RatMatrix m = random_matrix(rng, rows, cols, trial % 3 == 0 ? 70 : 20);
    const RrefResult a = rref(m), b = rref_serial(m);
    CHECK(a.reduced == b.reduced);
    CHECK(a.pivots == b.pivots);
    CHECK(a.pivots.size() == oracle::bareiss_rank(m));
    for (std::size_t k = 0; k < a.pivots.size(); ++k) {
      CHECK(a.reduced(k, a.pivots[k]) == 1);
      for (std::size_t r = 0; r < rows; ++r)
        if (r != k)
          CHECK(a.reduced(r, a.pivots[k]) == 0);
    }
  }
}

TEST_CASE("kernel vectors are annihilated and count nullity")
{
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const RatMatrix m = random_matrix(rng, 2 + trial % 5, 3 + trial % 7, 40);
    const auto ker = kernel_basis(m);
    CHECK(ker.size() == m.cols() - oracle::bareiss_rank(m));
    for (const auto& v : ker)
      CHECK(is_zero(m * v));
    if (!ker.empty())
      CHECK(oracle::bareiss_rank(RatMatrix::from_rows(ker)) == ker.size());
  }
}

TEST_CASE("determinant and inverse")
{
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const RatMatrix m = random_matrix(rng, n, n, trial % 4 == 0 ? 60 : 10);
    const Rational d = determinant(m);
    CHECK(d == oracle::bareiss_det(m));
    const auto inv = inverse(m);
    CHECK(inv.has_value() == (d != 0));
    if (inv)
      CHECK(m * *inv == RatMatrix::identity(n));
  }
  RatMatrix singular(2, 2);
  singular(0, 0) = 1;
  singular(0, 1) = 2;
  singular(1, 0) = 2;
  singular(1, 1) = 4;
  CHECK(determinant(singular) == 0);
  CHECK_FALSE(inverse(singular).has_value());
}

TEST_CASE("solve_in_span")
{
  const std::vector<RatVector> basis = {{1, 0, 1}, {0, 1, 1}, {1, 1, 2}};
  const auto c = solve_in_span(basis, {2, 3, 5});
  REQUIRE(c.has_value());
  RatVector back(3);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t k = 0; k < 3; ++k)
      back[k] += (*c)[i] * basis[i][k];
  CHECK(back == RatVector{2, 3, 5});
  CHECK_FALSE(solve_in_span(basis, {1, 0, 0}).has_value());
}

TEST_CASE("sparse echelon reduces to the same span as dense elimination")
{
  std::mt19937 rng(3);
  for (int trial = 0; trial < 15; ++trial) {
    const RatMatrix m = random_matrix(rng, 8, 10, 60);
    SparseEchelon e(10);
    std::size_t inserted = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      SparseVec v;
      for (std::uint32_t c = 0; c < 10; ++c)
        if (m(r, c) != 0)
          v.emplace_back(c, m(r, c));
      if (e.insert(v))
        ++inserted;
    }
    CHECK(inserted == oracle::bareiss_rank(m));
    CHECK(e.size() == inserted);
    // Every original row reduces to zero against the echelon.
    for (std::size_t r = 0; r < m.rows(); ++r) {
      SparseVec v;
      for (std::uint32_t c = 0; c < 10; ++c)
        if (m(r, c) != 0)
          v.emplace_back(c, m(r, c));
      CHECK(e.reduce(v).empty());
    }
  }
}
