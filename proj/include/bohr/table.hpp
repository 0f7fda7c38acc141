#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bohr/poly_json.hpp"

namespace bohr {

enum class OutputFormat { json, csv, md };

OutputFormat parse_output_format(std::string_view s);

struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

// Builds a table from an array of flat JSON objects; columns follow the key
// order of the first row, nested values are written as compact JSON.
Table table_from_rows(const Json& rows);

std::string render_csv(const Table& t);
// Pipe table with columns padded to a common width.
std::string render_markdown(const Table& t);

std::string format_cell(const Json& v);

}  // namespace bohr
