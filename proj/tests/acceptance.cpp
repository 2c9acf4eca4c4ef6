// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "oracles.hpp"

#include "liepres/analysis.hpp"
#include "liepres/quotient.hpp"
#include "liepres/rewriter.hpp"
#include "liepres/structure_table.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace liepres;

namespace {

// Each check returns an empty string on success, otherwise the reason.
using Check = std::function<std::string()>;

#define EXPECT(cond, msg)                   \
  do {                                      \
    if (!(cond)) {                          \
      std::ostringstream why_;              \
      why_ << msg;                          \
      return why_.str();                    \
    }                                       \
  } while (0)

StructureTable named_table(const Presentation& pres, std::size_t bound)
{
  const QuotientBasis q = quotient_closure(pres, bound);
  const NamedBasisMap names = g2_named_basis();
  return structure_table(q, &names);
}

const StructureTable& derived()
{
  static const StructureTable t = named_table(g2_presentation(), 8);
  return t;
}

RatVector combo(const StructureTable& t, std::initializer_list<std::pair<int, const char*>> terms)
{
  RatVector v(t.dim());
  for (const auto& [c, n] : terms)
    v[t.index_of(n)] += c;
  return v;
}

std::string dimension()
{
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t bound : {6u, 7u, 8u}) {
    const QuotientBasis q = quotient_closure(g2_presentation(), bound);
    EXPECT(q.dim() == 14, "dim " << q.dim() << " at bound " << bound);
    EXPECT(q.stabilized(), "not stabilized at bound " << bound);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT(secs < 60, "took " << secs << " s");
  std::cout << "  bounds 6,7,8 in " << secs << " s\n";
  return {};
}

std::string table()
{
  const StructureTable& t = derived();
  const StructureTable golden = oracle::golden_table();
  const auto diff = diff_tables(t, golden);
  EXPECT(diff.empty(), diff.size() << " entries differ, first " << diff.front());
  auto br = [&](const char* a, const char* b) { return t.bracket(t.index_of(a), t.index_of(b)); };
  EXPECT(br("x1", "x2") == combo(t, {{2, "y3"}}), "[x1,x2]");
  EXPECT(br("x1", "y1") == combo(t, {{2, "h1"}, {1, "h2"}}), "[x1,y1]");
  EXPECT(br("a13", "a31") == combo(t, {{1, "h1"}, {1, "h2"}}), "[a13,a31]");
  EXPECT(is_zero(br("y1", "a23")), "[y1,a23]");
  EXPECT(br("a12", "a23") == combo(t, {{1, "a13"}}), "[a12,a23]");
  return {};
}

std::string engines()
{
  const auto report = cross_validate(g2_presentation());
  EXPECT(report.applicable && report.agree(), "engines disagree on the shipped presentation");
  EXPECT(report.pairs_compared == 91, report.pairs_compared << " pairs compared");
  EXPECT(rewriter_structure_table(G2Rewriter{}, g2_named_basis()) == derived(), "rewriter table differs");

  const Presentation base = g2_presentation();
  std::vector<Presentation> mutants = {g2_presentation({2, 4, 7}), g2_presentation({-2, 4, 6}),
                                       g2_presentation({2, -4, 6})};
  auto rels = base.relations();
  for (auto& r : rels)
    if (!r.rhs.empty()) {
      r.rhs[0].coeff += 1;
      break;
    }
  mutants.emplace_back(base.generators(), rels);
  std::size_t caught = 0;
  for (const auto& m : mutants) {
    const auto r = cross_validate(m, ClosureOptions{8, 0, true});
    if (!r.agree() || r.closure_dim != 14)
      ++caught;
  }
  EXPECT(caught == mutants.size(), caught << " of " << mutants.size() << " mutations caught");
  std::cout << "  91 pairs agree, " << caught << " mutations caught\n";
  return {};
}

std::string jacobi()
{
  const StructureTable& t = derived();
  EXPECT(check_jacobi(t).empty(), "violation on the derived table");
  EXPECT(check_jacobi_serial(t).empty(), "violation (serial)");
  StructureTable bad = t;
  RatVector v = bad.bracket(bad.index_of("a12"), bad.index_of("a23"));
  v[bad.index_of("a13")] = 2;
  bad.set(bad.index_of("a12"), bad.index_of("a23"), v);
  EXPECT(!check_jacobi(bad).empty(), "mutated entry not caught");
  return {};
}

std::string killing()
{
  const StructureTable& t = derived();
  const RatMatrix k = killing_form(t);
  EXPECT(k == k.transpose(), "not symmetric");
  EXPECT(killing_invariance_violations(t, k).empty(), "not ad-invariant");
  EXPECT(oracle::bareiss_det(k) != 0, "degenerate");

  // Trace of the product of the diagonal ad(h) actions, read from the golden rows.
  const StructureTable g = oracle::golden_table();
  const std::size_t h1 = g.index_of("h1"), h2 = g.index_of("h2");
  Rational k11, k12;
  for (std::size_t j = 0; j < g.dim(); ++j) {
    const Rational a = g.bracket(h1, j)[j], b = g.bracket(h2, j)[j];
    k11 += a * a;
    k12 += a * b;
  }
  EXPECT(k11 == 16 && k12 == -8, "oracle gives " << k11 << ", " << k12);
  EXPECT(k(t.index_of("h1"), t.index_of("h1")) == k11, "K(h1,h1) = " << k(t.index_of("h1"), t.index_of("h1")));
  EXPECT(k(t.index_of("h1"), t.index_of("h2")) == k12, "K(h1,h2) = " << k(t.index_of("h1"), t.index_of("h2")));
  return {};
}

std::string roots()
{
  const StructureTable& t = derived();
  const Classification c = classify(t);
  EXPECT(c.roots.has_value(), c.type);
  const RootDatum& rd = *c.roots;
  EXPECT(rd.roots.size() == 12, rd.roots.size() << " roots");
  for (const auto& r : rd.roots) {
    EXPECT(r.vectors.size() == 1, "multiplicity " << r.vectors.size());
    RatVector neg = r.root;
    for (auto& x : neg)
      x = -x;
    const bool closed =
        std::any_of(rd.roots.begin(), rd.roots.end(), [&](const RootSpace& s) { return s.root == neg; });
    EXPECT(closed, "negative of a root missing");
  }
  EXPECT(rd.zero_space.vectors.size() == 2, "zero space dim " << rd.zero_space.vectors.size());
  EXPECT(rd.zero_space.vectors.size() + rd.multiplicity_total() == 14, "dimensions do not add to 14");
  EXPECT(c.cartan_type.has_value(), "no Cartan matrix");
  const auto& m = c.cartan_type->matrix;
  using M = std::vector<std::vector<long>>;
  const bool match = m == M{{2, -1}, {-3, 2}} || m == M{{2, -3}, {-1, 2}};
  EXPECT(match, "Cartan matrix does not match");
  EXPECT(c.type == "G2" && c.identified, "type " << c.type);
  return {};
}

std::string sl3()
{
  const Sl3Verdict v = verify_sl3_subalgebra(derived());
  EXPECT(v.ok, (v.mismatches.empty() ? std::string("failed") : v.mismatches.front()));
  EXPECT(v.pairs_checked == 28, v.pairs_checked << " pairs checked");
  return {};
}

std::string free_counts()
{
  const auto words = lyndon_words(3, 8);
  const std::vector<std::size_t> expected = {3, 3, 8, 18, 48, 116, 312, 810};
  for (unsigned d = 1; d <= 8; ++d) {
    EXPECT(words[d - 1].size() == expected[d - 1], "degree " << d << ": " << words[d - 1].size());
    EXPECT(oracle::witt(3, d) == expected[d - 1], "Witt oracle at degree " << d);
  }
  return {};
}

std::string oracle_equivalence()
{
  const FreeLieAlgebra alg({"x1", "x2", "x3"});
  std::vector<Word> words;
  for (const auto& bucket : lyndon_words(3, 4))
    words.insert(words.end(), bucket.begin(), bucket.end());
  std::size_t pairs = 0;
  for (const auto& u : words)
    for (const auto& v : words) {
      if (u.size() + v.size() > 5)
        continue;
      ++pairs;
      const auto eu = oracle::expand_lyndon(u), ev = oracle::expand_lyndon(v);
      EXPECT(oracle::expand(alg.bracket_words(u, v)) == oracle::minus(oracle::times(eu, ev), oracle::times(ev, eu)),
             "[" << alg.format_word(u) << "," << alg.format_word(v) << "]");
    }
  std::cout << "  " << pairs << " pairs\n";
  return {};
}

std::string rewriter()
{
  const G2Rewriter rw;
  std::size_t overlapping = 0;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c)
        for (int d = 1; d <= 3; ++d) {
          const auto cases = rw.quadruple_cases(a, b, c, d);
          EXPECT(!cases.empty(), "no pattern for " << a << b << c << d);
          for (const auto& k : cases)
            EXPECT(k.value == cases.front().value, "patterns disagree on " << a << b << c << d);
          if (cases.size() > 1)
            ++overlapping;
          try {
            rw.reduce_quadruple(a, b, c, d);
          } catch (const std::exception& e) {
            EXPECT(false, a << b << c << d << ": " << e.what());
          }
        }
  std::cout << "  81 tuples, " << overlapping << " with several patterns\n";
  return {};
}

std::string fixtures()
{
  const QuotientBasis s = quotient_closure(sl2_presentation(), 6);
  EXPECT(s.dim() == 3 && s.stabilized(), "sl2 dim " << s.dim());
  const Classification cs = classify(structure_table(s, nullptr));
  EXPECT(cs.identified && cs.type == "A1", "sl2 type " << cs.type);

  const QuotientBasis h = quotient_closure(heisenberg_presentation(), 6);
  EXPECT(h.dim() == 3 && h.stabilized(), "heisenberg dim " << h.dim());
  const StructureTable ht = structure_table(h, nullptr);
  EXPECT(oracle::bareiss_det(killing_form(ht)) == 0, "heisenberg Killing form nondegenerate");
  const DerivedCenter dc = derived_and_center(ht);
  EXPECT(dc.derived_dim == 1 && dc.center_dim == 1,
         "heisenberg derived " << dc.derived_dim << ", center " << dc.center_dim);
  return {};
}

}  // namespace

int main()
{
  const std::vector<std::pair<const char*, Check>> criteria = {
      {"presentation to dimension", dimension},
      {"table reproduction", table},
      {"engine cross-validation", engines},
      {"Jacobi certification", jacobi},
      {"Killing form", killing},
      {"root system", roots},
      {"sl(3) decomposition", sl3},
      {"free Lie algebra counts", free_counts},
      {"oracle equivalence", oracle_equivalence},
      {"rewriter totality and confluence", rewriter},
      {"fixtures", fixtures},
  };
  int failed = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    std::string why;
    try {
      why = criteria[n].second();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (why.empty()) {
      std::cout << "PASS " << n + 1 << ": " << criteria[n].first << "\n";
    } else {
      ++failed;
      std::cout << "FAIL " << n + 1 << ": " << criteria[n].first << " (" << why << ")\n";
    }
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
