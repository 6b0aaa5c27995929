#include "covjam/report.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace covjam {

namespace {

std::string quote_if_needed(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_record(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (quoted) throw std::runtime_error("CSV: unterminated quoted field");
  fields.push_back(std::move(cur));
  return fields;
}

Cell parse_cell(const std::string& s) {
  if (s.empty()) return s;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const bool integral = s.find_first_not_of("-0123456789") == std::string::npos;
  if (integral) {
    long long v = 0;
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec == std::errc() && p == last) return v;
  }
  double d = 0.0;
  auto [p, ec] = std::from_chars(first, last, d);
  if (ec == std::errc() && p == last) return d;
  return s;
}

std::string cell_text(const Cell& c) {
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) return format_real(*d);
  return quote_if_needed(std::get<std::string>(c));
}

}  // namespace

void RunReport::add_meta(std::string key, std::string value) {
  metadata.emplace_back(std::move(key), std::move(value));
}

std::string RunReport::meta(std::string_view key) const {
  for (const auto& [k, v] : metadata) {
    if (k == key) return v;
  }
  return {};
}

std::size_t RunReport::column(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw std::out_of_range("RunReport: no column '" + std::string(name) + "'");
}

double RunReport::real(std::size_t row, std::string_view col) const {
  const Cell& c = rows.at(row).at(column(col));
  if (const auto* i = std::get_if<long long>(&c)) return static_cast<double>(*i);
  return std::get<double>(c);
}

long long RunReport::integer(std::size_t row, std::string_view col) const {
  return std::get<long long>(rows.at(row).at(column(col)));
}

const std::string& RunReport::text(std::size_t row, std::string_view col) const {
  return std::get<std::string>(rows.at(row).at(column(col)));
}

std::string format_real(double x) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw std::runtime_error("format_real: conversion failed");
  std::string s(buf, p);
  if (s.find_first_of(".enai") == std::string::npos) s += ".0";
  return s;
}

std::string to_csv(const RunReport& report) {
  std::ostringstream out;
  for (const auto& [k, v] : report.metadata) {
    if (k.find_first_of("=\n") != std::string::npos || v.find('\n') != std::string::npos) {
      throw std::invalid_argument("metadata key/value contains a reserved character");
    }
    out << "# " << k << '=' << v << '\n';
  }
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    out << (i ? "," : "") << quote_if_needed(report.columns[i]);
  }
  out << '\n';
  for (const auto& row : report.rows) {
    if (row.size() != report.columns.size()) {
      throw std::logic_error("RunReport row width does not match the header");
    }
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
  return out.str();
}

RunReport parse_csv(std::string_view text) {
  RunReport report;
  bool have_header = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    if (!have_header && line.front() == '#') {
      std::string_view body = line.substr(1);
      if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
      const std::size_t eq = body.find('=');
      if (eq == std::string_view::npos) throw std::runtime_error("CSV: malformed metadata line");
      report.add_meta(std::string(body.substr(0, eq)), std::string(body.substr(eq + 1)));
      continue;
    }
    if (!have_header) {
      report.columns = split_record(line);
      have_header = true;
      continue;
    }
    std::vector<std::string> fields = split_record(line);
    if (fields.size() != report.columns.size()) {
      throw std::runtime_error("CSV: row has " + std::to_string(fields.size()) +
                               " fields, header has " + std::to_string(report.columns.size()));
    }
    std::vector<Cell> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_cell(f));
    report.rows.push_back(std::move(row));
  }
  if (!have_header) throw std::runtime_error("CSV: missing header row");
  return report;
}

void write_csv(const RunReport& report, const std::filesystem::path& path) {
  const std::string body = to_csv(report);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << body;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

RunReport read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str());
}

}  // namespace covjam
