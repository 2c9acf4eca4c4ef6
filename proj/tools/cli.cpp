#include "liepres/cli.hpp"

#include "liepres/analysis.hpp"
#include "liepres/free_lie.hpp"
#include "liepres/presentation.hpp"
#include "liepres/quotient.hpp"
#include "liepres/rewriter.hpp"
#include "liepres/structure_table.hpp"
#include "liepres/table_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace liepres {

namespace {

std::optional<std::string> read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool write_file(const std::string& path, const std::string& text)
{
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

std::string root_string(const RatVector& root)
{
  std::string s = "(";
  for (std::size_t i = 0; i < root.size(); ++i)
    s += (i ? ", " : "") + to_compact_string(root[i]);
  return s + ")";
}

std::string matrix_string(const std::vector<std::vector<long>>& m)
{
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m[i].size(); ++j)
      s += (j ? "," : "") + std::to_string(m[i][j]);
    s += "]";
  }
  return s + "]";
}

void print_brackets(const StructureTable& t, std::ostream& out)
{
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = i + 1; j < t.dim(); ++j) {
      const auto b = t.bracket(i, j);
      if (!is_zero(b))
        out << "[" << t.names()[i] << "," << t.names()[j] << "] = " << t.format(b) << "\n";
    }
}

struct TableLoad {
  std::optional<StructureTable> table;
  int code = exit_code::ok;
};

TableLoad load_table(const std::string& path, std::ostream& err)
{
  const auto text = read_file(path);
  if (!text) {
    err << path << ": cannot read file\n";
    return {std::nullopt, exit_code::usage};
  }
  try {
    return {read_table_json(*text), exit_code::ok};
  } catch (const TableSchemaError& e) {
    err << path << ": " << e.what() << "\n";
    return {std::nullopt, exit_code::usage};
  }
}

// ---------------------------------------------------------------- derive

struct DeriveArgs {
  std::string file;
  std::size_t max_degree = 8;
  std::string engine = "both";
  std::string out;
  int jobs = 0;
};

void report_closure(const QuotientBasis& q, const Presentation& pres, std::ostream& out)
{
  const auto& s = q.stats();
  out << "dim = " << q.dim() << "\n";
  out << "degree bound " << s.degree_bound << ": " << s.lyndon_dim << " Lyndon monomials, consequence rank "
      << s.consequence_rank << ", " << s.truncated << " brackets past the bound\n";
  out << "dim at bound " << s.degree_bound - 1 << " = ";
  if (s.previous_dim)
    out << *s.previous_dim;
  else
    out << "n/a";
  out << ", max representative degree " << s.max_representative_degree << ", relations above bound "
      << s.relations_above_bound << "\n";
  out << "stabilized: " << (q.stabilized() ? "yes" : "no") << "\n";

  const auto kills = q.witnesses(4);
  if (!kills.empty() && q.dim() > 0) {
    const StructureTable reps(q.representative_names());
    out << "degree-4 monomials eliminated (" << kills.size() << "):\n";
    for (const auto& k : kills)
      out << "  " << q.algebra().format_word(k.monomial) << " = " << reps.format(k.normal_form) << "  via "
          << q.describe(k.source, pres) << "\n";
  }
}

int cmd_derive(const DeriveArgs& a, std::ostream& out, std::ostream& err)
{
  const auto text = read_file(a.file);
  if (!text) {
    err << a.file << ": cannot read file\n";
    return exit_code::usage;
  }
  Presentation pres;
  try {
    pres = parse_presentation(*text);
  } catch (const ParseError& e) {
    err << a.file << ": " << e.what() << "\n";
    return exit_code::usage;
  }

  const NamedBasisMap g2_names = g2_named_basis();
  std::optional<StructureTable> table;

  if (a.engine == "rewriter") {
    FreeLieAlgebra alg(pres.generators(), std::max<std::size_t>(a.max_degree, 12));
    const auto rels = pres.relation_polys(alg);
    bool shaped = pres.generators().size() == 3;
    for (const auto& r : rels)
      for (const auto& [w, c] : r.terms())
        shaped = shaped && (w.size() == 4 || w.size() == 1);
    if (!shaped) {
      err << "rewriter not applicable: needs three generators and relations of degree 4 plus degree 1\n";
      return exit_code::usage;
    }
    const G2Rewriter rw;
    int code = exit_code::ok;
    for (std::size_t r = 0; r < rels.size(); ++r)
      if (!is_zero(rw.from_lie(rels[r]))) {
        err << "rewriter rules do not imply relation R" << r + 1 << "\n";
        code = exit_code::disagreement;
      }
    if (code != exit_code::ok)
      return code;
    table = rewriter_structure_table(rw, g2_names);
    out << "dim = " << table->dim() << "\n";
  } else {
    const QuotientBasis q = quotient_closure(pres, ClosureOptions{a.max_degree, a.jobs, true});
    report_closure(q, pres, out);

    if (a.engine == "both") {
      const auto report = cross_validate(pres, q, a.jobs);
      if (!report.applicable) {
        out << report.note << "; closure engine only\n";
      } else if (!report.agree()) {
        err << "engines disagree:\n";
        for (const auto& r : report.relation_residuals)
          err << "  rewriter rules do not imply " << r << "\n";
        for (const auto& p : report.problems)
          err << "  " << p << "\n";
        for (const auto& m : report.mismatches)
          err << "  [" << m.left << "," << m.right << "]: rewriter " << m.rewriter << ", closure " << m.closure << "\n";
        return exit_code::disagreement;
      } else {
        out << "engines agree on " << report.pairs_compared << " pairs\n";
      }
    }
    if (!q.stabilized()) {
      err << "quotient not stabilized at degree bound " << a.max_degree << "\n";
      return exit_code::unstable;
    }
    try {
      if (pres.generators().size() == 3 && q.dim() == g2_names.size()) {
        try {
          table = structure_table(q, &g2_names, a.jobs);
        } catch (const std::invalid_argument&) {
          table.reset();
        }
      }
      if (!table)
        table = structure_table(q, nullptr, a.jobs);
    } catch (const std::domain_error& e) {
      err << "degree bound " << a.max_degree << " too low for the bracket table: " << e.what() << "\n";
      return exit_code::unstable;
    }
  }

  if (a.out.empty()) {
    print_brackets(*table, out);
  } else if (!write_file(a.out, write_table_json(*table))) {
    err << a.out << ": cannot write file\n";
    return exit_code::failure;
  } else {
    out << "table written to " << a.out << "\n";
  }
  return exit_code::ok;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& table_path, const std::string& golden_path, std::ostream& out, std::ostream& err)
{
  const auto table = load_table(table_path, err);
  if (!table.table)
    return table.code;
  const auto golden = load_table(golden_path, err);
  if (!golden.table)
    return golden.code;
  const auto diff = diff_tables(*table.table, *golden.table);
  if (diff.empty()) {
    const std::size_t n = golden.table->dim();
    out << "tables agree on " << n * (n - (n ? 1 : 0)) / 2 << " pairs\n";
    return exit_code::ok;
  }
  for (const auto& d : diff)
    out << d << "\n";
  out << diff.size() << " difference(s)\n";
  return exit_code::failure;
}

// -------------------------------------------------------------- classify

int cmd_classify(const std::string& path, const std::vector<std::string>& cartan_names, int jobs, std::ostream& out,
                 std::ostream& err)
{
  const auto load = load_table(path, err);
  if (!load.table)
    return load.code;
  const StructureTable& t = *load.table;

  std::optional<std::vector<std::size_t>> cartan;
  if (!cartan_names.empty()) {
    cartan.emplace();
    for (const auto& n : cartan_names) {
      const auto i = t.find(n);
      if (!i) {
        err << "--cartan: no basis element named '" << n << "'\n";
        return exit_code::usage;
      }
      cartan->push_back(*i);
    }
  }

  const Classification c = classify(t, cartan, jobs);
  if (c.first_violation) {
    const auto& v = *c.first_violation;
    out << "jacobi: FAIL at (" << t.names()[v.i] << "," << t.names()[v.j] << "," << t.names()[v.k]
        << "), residual " << t.format(v.residual) << "\n";
    return exit_code::jacobi;
  }
  out << "jacobi: ok (" << c.jacobi_triples << " triples)\n";
  out << "derived dim: " << c.derived_center.derived_dim << ", center dim: " << c.derived_center.center_dim << "\n";
  out << "nilpotent: " << (c.nilpotent ? "yes" : "no") << "\n";
  out << "killing form: " << (sgn(c.killing_determinant) != 0 ? "nondegenerate" : "degenerate")
      << " (det = " << c.killing_determinant.get_str() << ")\n";
  if (!c.cartan.empty()) {
    out << "cartan:";
    for (auto i : c.cartan)
      out << " " << t.names()[i];
    out << "\n";
  }
  if (c.roots) {
    out << "roots: " << c.roots->roots.size() << ", multiplicity total " << c.roots->multiplicity_total()
        << ", " << t.dim() << " = " << c.roots->zero_space.vectors.size() << " + "
        << c.roots->multiplicity_total() << "\n";
    for (const auto& rs : c.roots->roots) {
      out << "  " << root_string(rs.root);
      for (auto i : rs.basis_indices)
        out << " " << t.names()[i];
      out << "\n";
    }
  }
  if (c.cartan_type)
    out << "cartan matrix: " << matrix_string(c.cartan_type->matrix) << "\n";
  out << "type: " << c.type << "\n";
  return c.identified ? exit_code::ok : exit_code::failure;
}

// ---------------------------------------------------------------- export

int cmd_export(const std::string& path, const std::string& format, const std::string& out_path, std::ostream& out,
               std::ostream& err)
{
  if (format != "json" && format != "csv" && format != "latex") {
    err << "unknown format '" << format << "' (expected json, csv or latex)\n";
    return exit_code::usage;
  }
  const auto load = load_table(path, err);
  if (!load.table)
    return load.code;
  if (load.table->dim() == 0) {
    err << path << ": table has dimension 0\n";
    return exit_code::usage;
  }
  const std::string text = format == "json"  ? write_table_json(*load.table)
                           : format == "csv" ? write_table_csv(*load.table)
                                             : write_table_latex(*load.table);
  if (out_path.empty()) {
    out << text;
  } else if (!write_file(out_path, text)) {
    err << out_path << ": cannot write file\n";
    return exit_code::failure;
  }
  return exit_code::ok;
}

// ------------------------------------------------------------------ free

int cmd_free(std::size_t alphabet, std::size_t max_degree, std::ostream& out, std::ostream& err)
{
  if (alphabet < 1 || max_degree < 1) {
    err << "--alphabet and --max-degree must be at least 1\n";
    return exit_code::usage;
  }
  if (alphabet > 255) {
    err << "--alphabet must be at most 255\n";
    return exit_code::usage;
  }
  const auto words = lyndon_words(alphabet, max_degree);
  std::size_t total = 0;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    out << (d > 1 ? " " : "") << words[d - 1].size();
    total += words[d - 1].size();
  }
  out << ", total " << total << "\n";
  return exit_code::ok;
}

// --------------------------------------------------------------- fixture

int cmd_fixture(const std::string& name, const std::string& out_path, std::ostream& out, std::ostream& err)
{
  std::string text;
  if (name == "g2")
    text = print_presentation(g2_presentation());
  else if (name == "sl2")
    text = print_presentation(sl2_presentation());
  else if (name == "heisenberg")
    text = print_presentation(heisenberg_presentation());
  else {
    err << "unknown fixture '" << name << "' (expected g2, sl2 or heisenberg)\n";
    return exit_code::usage;
  }
  if (out_path.empty()) {
    out << text;
  } else if (!write_file(out_path, text)) {
    err << out_path << ": cannot write file\n";
    return exit_code::failure;
  }
  return exit_code::ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Finitely presented Lie algebras: derive, verify, classify and export bracket tables", "liepres"};
  app.require_subcommand(1);

  DeriveArgs derive;
  auto* d = app.add_subcommand("derive", "Derive the bracket table of a presentation");
  d->add_option("presentation", derive.file, "Presentation file")->required();
  d->add_option("--max-degree", derive.max_degree, "Degree bound for the closure")->capture_default_str();
  d->add_option("--engine", derive.engine, "rewriter, closure or both")
      ->check(CLI::IsMember({"rewriter", "closure", "both"}))
      ->capture_default_str();
  d->add_option("--out", derive.out, "Write the table JSON here");
  d->add_option("--jobs", derive.jobs, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);

  std::string table_path, golden_path, format, out_path;
  auto* v = app.add_subcommand("verify", "Compare a table with a golden table");
  v->add_option("--table", table_path)->required();
  v->add_option("--golden", golden_path)->required();

  std::vector<std::string> cartan_names;
  int classify_jobs = 0;
  auto* c = app.add_subcommand("classify", "Certify a table and identify its type");
  c->add_option("--table", table_path)->required();
  c->add_option("--cartan", cartan_names, "Cartan basis elements, comma separated")->delimiter(',');
  c->add_option("--jobs", classify_jobs, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);

  auto* e = app.add_subcommand("export", "Render a table as json, csv or latex");
  e->add_option("--table", table_path)->required();
  e->add_option("--format", format)->required();
  e->add_option("--out", out_path);

  std::size_t alphabet = 0, free_degree = 0;
  auto* f = app.add_subcommand("free", "Lyndon word counts per degree");
  f->add_option("--alphabet", alphabet)->required();
  f->add_option("--max-degree", free_degree)->required();

  std::string fixture_name;
  auto* x = app.add_subcommand("fixture", "Print a shipped presentation (g2, sl2, heisenberg)");
  x->add_option("name", fixture_name)->required();
  x->add_option("--out", out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex, out, err);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex, out, err);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex, out, err);
    return exit_code::usage;
  }

  try {
    if (d->parsed())
      return cmd_derive(derive, out, err);
    if (v->parsed())
      return cmd_verify(table_path, golden_path, out, err);
    if (c->parsed())
      return cmd_classify(table_path, cartan_names, classify_jobs, out, err);
    if (e->parsed())
      return cmd_export(table_path, format, out_path, out, err);
    if (f->parsed())
      return cmd_free(alphabet, free_degree, out, err);
    if (x->parsed())
      return cmd_fixture(fixture_name, out_path, out, err);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return exit_code::failure;
  }
  return exit_code::usage;
}

}  // namespace liepres
