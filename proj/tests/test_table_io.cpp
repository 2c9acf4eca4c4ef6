#include "oracles.hpp"

#include "liepres/table_io.hpp"

#include <doctest.h>

#include <sstream>

using namespace liepres;

TEST_CASE("JSON export is a fixed point of read/write")
{
  const StructureTable g = oracle::golden_table();
  const std::string once = write_table_json(g);
  const StructureTable back = read_table_json(once);
  CHECK(back == g);
  CHECK(write_table_json(back) == once);
  CHECK(once.find("\"2/1\"") != std::string::npos);
  CHECK(once.find("\"schema_version\": \"1\"") != std::string::npos);

  StructureTable frac({"u", "v"});
  frac.set(0, 1, {make_rational(-3, 4), 0});
  CHECK(read_table_json(write_table_json(frac)) == frac);
}

TEST_CASE("schema violations")
{
  const std::string good = write_table_json(oracle::golden_table());
  auto with = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    const auto at = s.find(from);
    REQUIRE(at != std::string::npos);
    return s.replace(at, from.size(), to);
  };
  CHECK_THROWS_WITH_AS(read_table_json(with("\"schema_version\": \"1\"", "\"schema_version\": \"9\"")),
                       doctest::Contains("unsupported schema_version"), TableSchemaError);
  CHECK_THROWS_AS(read_table_json(with("\"dim\": 14", "\"dim\": 13")), TableSchemaError);
  CHECK_THROWS_AS(read_table_json(with("\"2/1\"", "\"4/2\"")), TableSchemaError);
  CHECK_THROWS_AS(read_table_json(with("\"2/1\"", "\"2\"")), TableSchemaError);
  CHECK_THROWS_AS(read_table_json(with("\"2/1\"", "2")), TableSchemaError);
  CHECK_THROWS_AS(read_table_json(with("\"a12\": \"2/1\"", "\"b7\": \"2/1\"")), TableSchemaError);
  CHECK_THROWS_AS(read_table_json(with("\"i\": 0", "\"i\": 5")), TableSchemaError);
  CHECK_THROWS_AS(read_table_json("{"), TableSchemaError);
  CHECK_THROWS_AS(read_table_json("[]"), TableSchemaError);
  CHECK_THROWS_AS(read_table_json(R"({"schema_version":"1","dim":2,"names":["a","a"],"brackets":[]})"),
                  TableSchemaError);
  CHECK_THROWS_AS(
      read_table_json(
          R"({"schema_version":"1","dim":2,"names":["a","b"],"brackets":[{"i":0,"j":1,"coefficients":{}},{"i":0,"j":1,"coefficients":{}}]})"),
      TableSchemaError);
}

TEST_CASE("CSV export")
{
  const StructureTable g = oracle::golden_table();
  const std::string csv = write_table_csv(g);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "left,right,h1,h2,a12,a13,a23,a21,a31,a32,x1,x2,x3,y1,y2,y3");
  std::size_t rows = 0;
  bool found = false;
  while (std::getline(in, line)) {
    ++rows;
    if (line.rfind("x1,y1,", 0) == 0) {
      found = true;
      CHECK(line == "x1,y1,2,1,0,0,0,0,0,0,0,0,0,0,0,0");
    }
  }
  CHECK(rows == 91);
  CHECK(found);
}

TEST_CASE("LaTeX export")
{
  CHECK(latex_name("y3") == "y_{3}");
  CHECK(latex_name("a12") == "a_{12}");
  CHECK(latex_name("h") == "h");
  CHECK(latex_name("[x1,x2]") == "\\mathrm{[x1,x2]}");

  const StructureTable g = oracle::golden_table();
  const std::string tex = write_table_latex(g);
  CHECK(tex.rfind("\\begin{tabular}{c|ccccccccccccc}", 0) == 0);
  std::istringstream in(tex);
  std::string line;
  bool x1_row = false;
  while (std::getline(in, line))
    if (line.rfind("$x_{1}$", 0) == 0) {
      x1_row = true;
      // Columns h2..y3; x2 is the ninth column after the row label.
      std::vector<std::string> cells;
      std::string cell;
      std::istringstream row(line.substr(0, line.find("\\\\")));
      while (std::getline(row, cell, '&'))
        cells.push_back(cell);
      REQUIRE(cells.size() == 14);
      CHECK(cells[9] == " $2y_{3}$ ");
      CHECK(cells[11] == " $2h_{1} + h_{2}$ ");
      CHECK(cells[1] == "  ");
    }
  CHECK(x1_row);
  CHECK(write_table_latex(g) == tex);
}

TEST_CASE("diff names altered entries")
{
  const StructureTable g = oracle::golden_table();
  CHECK(diff_tables(g, g).empty());
  StructureTable m = g;
  RatVector v(14);
  v[g.index_of("h1")] = 1;
  v[g.index_of("h2")] = 1;
  m.set(g.index_of("x1"), g.index_of("y1"), v);
  const auto d = diff_tables(m, g);
  REQUIRE(d.size() == 1);
  CHECK(d[0] == "[x1,y1]: table h1 + h2, golden 2h1 + h2");

  // Reordered names compare equal.
  std::vector<std::string> rev(g.names().rbegin(), g.names().rend());
  StructureTable r(rev);
  for (std::size_t i = 0; i < 14; ++i)
    for (std::size_t j = i + 1; j < 14; ++j) {
      const RatVector b = g.bracket(13 - i, 13 - j);
      RatVector rb(14);
      for (std::size_t k = 0; k < 14; ++k)
        rb[13 - k] = b[k];
      r.set(i, j, rb);
    }
  CHECK(diff_tables(r, g).empty());
}
