#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace covjam {

inline constexpr const char* kVersion = "0.3.0";

using Cell = std::variant<long long, double, std::string>;

/// A CSV table with '#'-prefixed "key=value" metadata lines before the header.
/// Reals are written in shortest round-trip form and always carry a '.' or
/// exponent, so parse(emit(r)) == r exactly.
struct RunReport {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  bool operator==(const RunReport&) const = default;

  void add_meta(std::string key, std::string value);
  /// Empty string if absent.
  std::string meta(std::string_view key) const;

  std::size_t column(std::string_view name) const;
  double real(std::size_t row, std::string_view col) const;
  long long integer(std::size_t row, std::string_view col) const;
  const std::string& text(std::size_t row, std::string_view col) const;
};

std::string format_real(double x);

std::string to_csv(const RunReport& report);
RunReport parse_csv(std::string_view text);

void write_csv(const RunReport& report, const std::filesystem::path& path);
RunReport read_csv(const std::filesystem::path& path);

}  // namespace covjam
