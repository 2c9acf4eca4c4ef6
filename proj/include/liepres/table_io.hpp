#pragma once

#include "liepres/structure_table.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace liepres {

inline constexpr std::string_view kTableSchemaVersion = "1";

/// Malformed or unsupported table document.
class TableSchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"schema_version": "1", "dim": n, "names": [...],
///  "brackets": [{"i": i, "j": j, "coefficients": {"name": "p/q", ...}}, ...]}
/// with i < j, zero brackets omitted and coefficients in basis order.
std::string write_table_json(const StructureTable& t);
StructureTable read_table_json(std::string_view text);

/// Header "left,right,<names>", then one row per pair i < j.
std::string write_table_csv(const StructureTable& t);

/// Upper-triangular tabular: rows b_1..b_{n-1}, columns b_2..b_n.
std::string write_table_latex(const StructureTable& t);
/// "y3" -> "y_{3}", "a12" -> "a_{12}"; other names go through \mathrm.
std::string latex_name(std::string_view name);

/// Differences after matching basis elements by name; empty iff equal.
std::vector<std::string> diff_tables(const StructureTable& table, const StructureTable& golden);

}  // namespace liepres
