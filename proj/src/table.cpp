#include "bohr/table.hpp"

#include <algorithm>

#include "bohr/errors.hpp"

namespace bohr {

OutputFormat parse_output_format(std::string_view s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "md") return OutputFormat::md;
  throw ConfigError("unknown output format '" + std::string(s) + "' (json, csv, md)");
}

std::string format_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

Table table_from_rows(const Json& rows) {
  Table t;
  if (!rows.is_array()) throw ConfigError("table rows must be an array");
  for (const auto& row : rows) {
    if (!row.is_object()) throw ConfigError("table rows must be objects");
    if (t.headers.empty()) {
      for (const auto& [key, _] : row.items()) t.headers.push_back(key);
    }
    std::vector<std::string> cells;
    for (const auto& h : t.headers) cells.push_back(row.contains(h) ? format_cell(row.at(h)) : "");
    t.rows.push_back(std::move(cells));
  }
  return t;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_csv(const Table& t) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv_field(cells[i]);
    }
    out += '\n';
  };
  line(t.headers);
  for (const auto& r : t.rows) line(r);
  return out;
}

std::string render_markdown(const Table& t) {
  std::vector<std::size_t> width(t.headers.size(), 3);
  for (std::size_t i = 0; i < t.headers.size(); ++i) width[i] = std::max(width[i], t.headers[i].size());
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    out += '|';
    for (std::size_t i = 0; i < width.size(); ++i) {
      const std::string& c = i < cells.size() ? cells[i] : std::string();
      out += ' ' + c + std::string(width[i] - c.size(), ' ') + " |";
    }
    out += '\n';
  };
  line(t.headers);
  out += '|';
  for (std::size_t w : width) out += std::string(w + 2, '-') + '|';
  out += '\n';
  for (const auto& r : t.rows) line(r);
  return out;
}

}  // namespace bohr
