#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace clusvul {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column position by name; throws std::out_of_range if absent.
  std::size_t column(std::string_view name) const;
};

/// 12 significant digits, '.' decimal separator regardless of locale.
std::string format_number(double value);

/// RFC 4180 style: comma separated, CRLF-free ('\n' line ends), fields quoted when
/// they contain a comma, quote or newline.
void write_csv(std::ostream& out, const CsvTable& table);
std::string write_csv(const CsvTable& table);
/// Throws IoError naming the path on failure.
void write_csv_file(const std::string& path, const CsvTable& table);

/// Inverse of write_csv; the first record is the header.
CsvTable parse_csv(std::string_view text);

}  // namespace clusvul
