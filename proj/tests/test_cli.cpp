#include "oracles.hpp"

#include "liepres/cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace liepres;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args)
{
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir()
  {
    path = fs::temp_directory_path() / ("liepres-cli-" + std::to_string(::getpid()) + "-" +
                                        std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(file(name)) << text; }
};

}  // namespace

TEST_CASE("derive g2 and verify against the golden table")
{
  TempDir tmp;
  const Run d = run({"derive", oracle::data_path("g2.lp"), "--out", tmp.file("t.json")});
  CHECK(d.code == exit_code::ok);
  CHECK(d.out.find("dim = 14\n") == 0);
  CHECK(d.out.find("stabilized: yes") != std::string::npos);
  CHECK(d.out.find("engines agree on 91 pairs") != std::string::npos);
  CHECK(d.out.find("degree-4 monomials eliminated (18)") != std::string::npos);

  const Run v = run({"verify", "--table", tmp.file("t.json"), "--golden", oracle::data_path("g2_table.json")});
  CHECK(v.code == exit_code::ok);

  for (const char* engine : {"closure", "rewriter"}) {
    const Run e = run({"derive", oracle::data_path("g2.lp"), "--engine", engine, "--out", tmp.file("e.json")});
    CHECK(e.code == exit_code::ok);
    CHECK(oracle::slurp(tmp.file("e.json")) == oracle::slurp(tmp.file("t.json")));
  }
}

TEST_CASE("derive output does not depend on --jobs")
{
  TempDir tmp;
  const Run a = run({"derive", oracle::data_path("g2.lp"), "--jobs", "1", "--out", tmp.file("a.json")});
  const Run b = run({"derive", oracle::data_path("g2.lp"), "--jobs", "3", "--out", tmp.file("b.json")});
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(oracle::slurp(tmp.file("a.json")) == oracle::slurp(tmp.file("b.json")));
  const Run c = run({"derive", oracle::data_path("g2.lp"), "--jobs", "2"});
  const Run e = run({"derive", oracle::data_path("g2.lp")});
  CHECK(c.out == e.out);
}

TEST_CASE("derive exit codes")
{
  TempDir tmp;
  const Run sl2 = run({"derive", oracle::data_path("sl2.lp")});
  CHECK(sl2.code == exit_code::ok);
  CHECK(sl2.out.find("dim = 3\n") == 0);
  CHECK(sl2.out.find("rewriter not applicable") != std::string::npos);

  const Run mutated = run({"derive", oracle::data_path("g2_mutated.lp")});
  CHECK(mutated.code == exit_code::disagreement);
  CHECK(mutated.out.find("dim = 14\n") == std::string::npos);

  tmp.write("bad.lp", "generators: x y\nrelation: [x,\n");
  const Run bad = run({"derive", tmp.file("bad.lp")});
  CHECK(bad.code == exit_code::usage);
  CHECK(bad.err.find("line 2, column 11") != std::string::npos);

  tmp.write("free.lp", "generators: x y\n");
  CHECK(run({"derive", tmp.file("free.lp"), "--max-degree", "5"}).code == exit_code::unstable);

  CHECK(run({"derive", tmp.file("missing.lp")}).code == exit_code::usage);
  CHECK(run({"derive", oracle::data_path("sl2.lp"), "--engine", "rewriter"}).code == exit_code::usage);
  CHECK(run({"derive", oracle::data_path("sl2.lp"), "--engine", "magic"}).code == exit_code::usage);
}

TEST_CASE("verify reports differences and schema errors")
{
  TempDir tmp;
  std::string text = oracle::slurp(oracle::data_path("g2_table.json"));
  const StructureTable g = oracle::golden_table();
  StructureTable m = g;
  RatVector v(14);
  v[g.index_of("h1")] = 1;
  v[g.index_of("h2")] = 1;
  m.set(g.index_of("x1"), g.index_of("y1"), v);
  tmp.write("m.json", write_table_json(m));
  const Run diff = run({"verify", "--table", tmp.file("m.json"), "--golden", oracle::data_path("g2_table.json")});
  CHECK(diff.code == exit_code::failure);
  CHECK(diff.out.find("[x1,y1]") != std::string::npos);

  text.replace(text.find("\"1\""), 3, "\"2\"");
  tmp.write("s.json", text);
  CHECK(run({"verify", "--table", tmp.file("s.json"), "--golden", oracle::data_path("g2_table.json")}).code ==
        exit_code::usage);
}

TEST_CASE("classify")
{
  TempDir tmp;
  const Run g = run({"classify", "--table", oracle::data_path("g2_table.json")});
  CHECK(g.code == exit_code::ok);
  CHECK(g.out.find("type: G2\n") != std::string::npos);
  CHECK(g.out.find("jacobi: ok (364 triples)") != std::string::npos);

  CHECK(run({"derive", oracle::data_path("sl2.lp"), "--out", tmp.file("sl2.json")}).code == 0);
  const Run s = run({"classify", "--table", tmp.file("sl2.json")});
  CHECK(s.code == exit_code::ok);
  CHECK(s.out.find("type: A1\n") != std::string::npos);

  CHECK(run({"derive", oracle::data_path("heisenberg.lp"), "--out", tmp.file("h.json")}).code == 0);
  const Run h = run({"classify", "--table", tmp.file("h.json")});
  CHECK(h.code == exit_code::failure);
  CHECK(h.out.find("type: unrecognized (nilpotent: Killing form degenerate)") != std::string::npos);

  StructureTable bad = oracle::golden_table();
  bad.set(bad.index_of("x1"), bad.index_of("x2"), RatVector(14));
  tmp.write("bad.json", write_table_json(bad));
  const Run j = run({"classify", "--table", tmp.file("bad.json")});
  CHECK(j.code == exit_code::jacobi);
  CHECK(j.out.find("jacobi: FAIL at (") != std::string::npos);

  const Run wrong = run({"classify", "--table", oracle::data_path("g2_table.json"), "--cartan", "h1,x1"});
  CHECK(wrong.code == exit_code::failure);
  CHECK(wrong.out.find("Cartan check failed") != std::string::npos);
}

TEST_CASE("export")
{
  TempDir tmp;
  const std::string golden = oracle::data_path("g2_table.json");
  const Run csv = run({"export", "--table", golden, "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 92);

  const Run tex = run({"export", "--table", golden, "--format", "latex"});
  CHECK(tex.code == 0);
  CHECK(tex.out.find("$2y_{3}$") != std::string::npos);
  CHECK(run({"export", "--table", golden, "--format", "latex"}).out == tex.out);

  const Run json = run({"export", "--table", golden, "--format", "json", "--out", tmp.file("a.json")});
  CHECK(json.code == 0);
  CHECK(run({"export", "--table", tmp.file("a.json"), "--format", "json"}).out == oracle::slurp(tmp.file("a.json")));

  CHECK(run({"export", "--table", golden, "--format", "yaml"}).code == exit_code::usage);
  tmp.write("empty.json", R"({"schema_version":"1","dim":0,"names":[],"brackets":[]})");
  CHECK(run({"export", "--table", tmp.file("empty.json"), "--format", "csv"}).code == exit_code::usage);
}

TEST_CASE("free and fixture")
{
  CHECK(run({"free", "--alphabet", "3", "--max-degree", "3"}).out == "3 3 8, total 14\n");
  CHECK(run({"free", "--alphabet", "3", "--max-degree", "6"}).out.find("3 3 8 18 48 116,") == 0);
  CHECK(run({"free", "--alphabet", "2", "--max-degree", "4"}).out.find("2 1 2 3,") == 0);
  CHECK(run({"free", "--alphabet", "0", "--max-degree", "4"}).code == exit_code::usage);

  CHECK(run({"fixture", "g2"}).out == oracle::slurp(oracle::data_path("g2.lp")));
  CHECK(run({"fixture", "sl2"}).out == oracle::slurp(oracle::data_path("sl2.lp")));
  CHECK(run({"fixture", "heisenberg"}).out == oracle::slurp(oracle::data_path("heisenberg.lp")));
  CHECK(run({"fixture", "e8"}).code == exit_code::usage);
  CHECK(run({}).code == exit_code::usage);
  CHECK(run({"--help"}).code == 0);
}
