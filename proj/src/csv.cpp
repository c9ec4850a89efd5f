#include "lqw/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lqw/errors.hpp"

namespace lqw {

namespace {

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& why) {
  throw ParseError(source + ":" + std::to_string(line) + ": " + why);
}

}  // namespace

std::string CurveTable::comment_value(const std::string& key) const {
  const std::string prefix = key + ": ";
  for (const auto& c : comments) {
    if (c.rfind(prefix, 0) == 0) return c.substr(prefix.size());
  }
  return {};
}

std::string format_probability(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_curve_table(std::ostream& out, const CurveTable& table) {
  for (const auto& c : table.comments) out << "# " << c << '\n';
  out << 't';
  for (const auto& c : table.columns) out << ',' << c;
  out << '\n';
  for (std::size_t r = 0; r < table.steps.size(); ++r) {
    out << table.steps[r];
    for (const auto& s : table.series) out << ',' << format_probability(s[r]);
    out << '\n';
  }
}

void write_curve_table(const std::filesystem::path& path, const CurveTable& table) {
  if (path.empty() || path == "-") {
    write_curve_table(std::cout, table);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_curve_table(out, table);
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

CurveTable read_curve_table(std::istream& in, const std::string& source) {
  CurveTable table;
  std::string line;
  std::size_t number = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (have_header) fail(source, number, "comment after data header");
      std::string body = line.substr(1);
      if (!body.empty() && body[0] == ' ') body.erase(0, 1);
      table.comments.push_back(body);
      continue;
    }
    auto cells = split_commas(line);
    if (!have_header) {
      if (cells.size() < 2 || cells[0] != "t") fail(source, number, "expected header 't,p...'");
      for (std::size_t i = 1; i < cells.size(); ++i) {
        if (cells[i].rfind("p", 0) != 0) fail(source, number, "column '" + cells[i] + "' is not p or p_<label>");
        table.columns.push_back(cells[i]);
      }
      table.series.assign(table.columns.size(), {});
      have_header = true;
      continue;
    }
    if (cells.size() != table.columns.size() + 1) {
      fail(source, number, "expected " + std::to_string(table.columns.size() + 1) + " fields, got " +
                               std::to_string(cells.size()));
    }
    long long step = 0;
    {
      const auto& c = cells[0];
      auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), step);
      if (ec != std::errc() || ptr != c.data() + c.size()) fail(source, number, "bad step '" + c + "'");
      if (!table.steps.empty() && step <= table.steps.back()) {
        fail(source, number, "steps must be strictly increasing");
      }
    }
    table.steps.push_back(step);
    for (std::size_t i = 1; i < cells.size(); ++i) {
      const auto& c = cells[i];
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), value);
      if (ec != std::errc() || ptr != c.data() + c.size() || c.empty()) {
        fail(source, number, "bad probability '" + c + "'");
      }
      table.series[i - 1].push_back(value);
    }
  }
  if (!have_header) fail(source, number, "missing data header");
  return table;
}

CurveTable read_curve_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return read_curve_table(in, path.string());
}

}  // namespace lqw
