#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace lqw {

/// Curve CSV: '#' comment lines (typically "# key: value"), then a header
/// "t,p" or "t,p_<label>,...", then one row per integer step.
struct CurveTable {
  std::vector<std::string> comments;  // without the leading "# "
  std::vector<std::string> columns;   // excludes "t"
  std::vector<long long> steps;
  std::vector<std::vector<double>> series;  // series[column][row]

  /// Value of the first "key: value" comment with this key, or empty.
  std::string comment_value(const std::string& key) const;
};

/// 17 significant digits, '.' separator.
std::string format_probability(double value);

void write_curve_table(std::ostream& out, const CurveTable& table);
/// Writes to `path`, or to stdout when `path` is empty or "-". Throws IoError.
void write_curve_table(const std::filesystem::path& path, const CurveTable& table);

/// `source` names the input in error messages ("file:line: reason").
CurveTable read_curve_table(std::istream& in, const std::string& source);
/// Throws IoError naming the path if it cannot be opened, ParseError if malformed.
CurveTable read_curve_table(const std::filesystem::path& path);

}  // namespace lqw
