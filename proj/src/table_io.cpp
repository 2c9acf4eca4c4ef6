#include "liepres/table_io.hpp"

#include <json.hpp>

#include <cctype>
#include <set>
#include <sstream>

namespace liepres {

using ordered_json = nlohmann::ordered_json;

std::string write_table_json(const StructureTable& t)
{
  ordered_json doc;
  doc["schema_version"] = std::string(kTableSchemaVersion);
  doc["dim"] = t.dim();
  doc["names"] = t.names();
  ordered_json brackets = ordered_json::array();
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = i + 1; j < t.dim(); ++j) {
      const RatVector b = t.bracket(i, j);
      if (is_zero(b))
        continue;
      ordered_json coeffs = ordered_json::object();
      for (std::size_t k = 0; k < b.size(); ++k)
        if (sgn(b[k]) != 0)
          coeffs[t.names()[k]] = to_pq_string(b[k]);
      brackets.push_back({{"i", i}, {"j", j}, {"coefficients", std::move(coeffs)}});
    }
  doc["brackets"] = std::move(brackets);
  return doc.dump(2) + "\n";
}

namespace {

[[noreturn]] void schema(const std::string& msg)
{
  throw TableSchemaError("table schema: " + msg);
}

std::size_t index_field(const ordered_json& rec, const char* key, std::size_t dim)
{
  if (!rec.contains(key) || !rec[key].is_number_unsigned())
    schema(std::string("bracket record needs a non-negative integer '") + key + "'");
  const auto v = rec[key].get<std::size_t>();
  if (v >= dim)
    schema(std::string("'") + key + "' = " + std::to_string(v) + " is out of range");
  return v;
}

}  // namespace

StructureTable read_table_json(std::string_view text)
{
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    schema(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object())
    schema("top level must be an object");
  if (!doc.contains("schema_version") || !doc["schema_version"].is_string())
    schema("missing string 'schema_version'");
  if (doc["schema_version"].get<std::string>() != kTableSchemaVersion)
    schema("unsupported schema_version '" + doc["schema_version"].get<std::string>() + "'");
  if (!doc.contains("dim") || !doc["dim"].is_number_unsigned())
    schema("missing non-negative integer 'dim'");
  if (!doc.contains("names") || !doc["names"].is_array())
    schema("missing array 'names'");
  if (!doc.contains("brackets") || !doc["brackets"].is_array())
    schema("missing array 'brackets'");

  const auto dim = doc["dim"].get<std::size_t>();
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const auto& n : doc["names"]) {
    if (!n.is_string() || n.get<std::string>().empty())
      schema("names must be non-empty strings");
    if (!seen.insert(n.get<std::string>()).second)
      schema("duplicate name '" + n.get<std::string>() + "'");
    names.push_back(n.get<std::string>());
  }
  if (names.size() != dim)
    schema("dim is " + std::to_string(dim) + " but " + std::to_string(names.size()) + " names are given");

  StructureTable t(names);
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& rec : doc["brackets"]) {
    if (!rec.is_object())
      schema("bracket records must be objects");
    const std::size_t i = index_field(rec, "i", dim);
    const std::size_t j = index_field(rec, "j", dim);
    if (i >= j)
      schema("bracket record needs i < j, got (" + std::to_string(i) + "," + std::to_string(j) + ")");
    if (!pairs.emplace(i, j).second)
      schema("pair (" + std::to_string(i) + "," + std::to_string(j) + ") listed twice");
    if (!rec.contains("coefficients") || !rec["coefficients"].is_object())
      schema("bracket record needs an object 'coefficients'");
    RatVector v(dim);
    for (const auto& [name, value] : rec["coefficients"].items()) {
      auto k = t.find(name);
      if (!k)
        schema("unknown basis element '" + name + "' in coefficients");
      if (!value.is_string())
        schema("coefficient of '" + name + "' must be a \"p/q\" string");
      const auto s = value.get<std::string>();
      Rational r;
      try {
        r = parse_rational(s);
      } catch (const std::invalid_argument&) {
        schema("bad rational \"" + s + "\"");
      }
      if (to_pq_string(r) != s)
        schema("rational \"" + s + "\" is not written as p/q in lowest terms");
      v[*k] = r;
    }
    t.set(i, j, std::move(v));
  }
  return t;
}

std::string write_table_csv(const StructureTable& t)
{
  std::ostringstream os;
  os << "left,right";
  for (const auto& n : t.names())
    os << ',' << n;
  os << '\n';
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = i + 1; j < t.dim(); ++j) {
      os << t.names()[i] << ',' << t.names()[j];
      for (const auto& c : t.bracket(i, j))
        os << ',' << to_compact_string(c);
      os << '\n';
    }
  return os.str();
}

std::string latex_name(std::string_view name)
{
  std::size_t split = 0;
  while (split < name.size() && std::isalpha(static_cast<unsigned char>(name[split])))
    ++split;
  bool digits = split > 0 && split < name.size();
  for (std::size_t k = split; k < name.size(); ++k)
    digits = digits && std::isdigit(static_cast<unsigned char>(name[k]));
  if (split == name.size())
    return std::string(name);
  if (digits)
    return std::string(name.substr(0, split)) + "_{" + std::string(name.substr(split)) + "}";
  return "\\mathrm{" + std::string(name) + "}";
}

namespace {

std::string latex_cell(const StructureTable& t, const RatVector& v)
{
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) == 0)
      continue;
    const Rational mag = abs(v[k]);
    if (!out.empty())
      out += sgn(v[k]) < 0 ? " - " : " + ";
    else if (sgn(v[k]) < 0)
      out += "-";
    if (mag.get_den() != 1)
      out += "\\tfrac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
    else if (mag != 1)
      out += mag.get_str();
    out += latex_name(t.names()[k]);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string write_table_latex(const StructureTable& t)
{
  std::ostringstream os;
  const std::size_t n = t.dim();
  os << "\\begin{tabular}{c|" << std::string(n > 1 ? n - 1 : 0, 'c') << "}\n";
  os << "$[\\cdot,\\cdot]$";
  for (std::size_t j = 1; j < n; ++j)
    os << " & $" << latex_name(t.names()[j]) << "$";
  os << " \\\\\n\\hline\n";
  for (std::size_t i = 0; i + 1 < n; ++i) {
    os << "$" << latex_name(t.names()[i]) << "$";
    for (std::size_t j = 1; j < n; ++j) {
      os << " & ";
      if (j > i)
        os << "$" << latex_cell(t, t.bracket(i, j)) << "$";
    }
    os << " \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

std::vector<std::string> diff_tables(const StructureTable& table, const StructureTable& golden)
{
  std::vector<std::string> out;
  const std::set<std::string> a(table.names().begin(), table.names().end());
  const std::set<std::string> b(golden.names().begin(), golden.names().end());
  if (a != b) {
    for (const auto& n : a)
      if (!b.count(n))
        out.push_back("basis element '" + n + "' only in table");
    for (const auto& n : b)
      if (!a.count(n))
        out.push_back("basis element '" + n + "' only in golden");
    return out;
  }

  // Compare in golden order, translating table coordinates by name.
  auto in_golden_basis = [&](const RatVector& v) {
    RatVector g(golden.dim());
    for (std::size_t k = 0; k < v.size(); ++k)
      g[golden.index_of(table.names()[k])] = v[k];
    return g;
  };
  for (std::size_t i = 0; i < golden.dim(); ++i)
    for (std::size_t j = i + 1; j < golden.dim(); ++j) {
      const auto& li = golden.names()[i];
      const auto& lj = golden.names()[j];
      const RatVector got = in_golden_basis(table.bracket(table.index_of(li), table.index_of(lj)));
      const RatVector want = golden.bracket(i, j);
      if (got != want)
        out.push_back("[" + li + "," + lj + "]: table " + golden.format(got) + ", golden " + golden.format(want));
    }
  return out;
}

}  // namespace liepres
