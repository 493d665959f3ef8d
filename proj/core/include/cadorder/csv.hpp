// Minimal CSV for the harness schemas: header row, comma separator, no
// quoting (every field is an identifier or a number).
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cadorder {

using Rational = mpq_class;

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a header column; throws InputError naming `origin` if absent.
  [[nodiscard]] std::size_t column(std::string_view name, std::string_view origin = "csv") const;
};

CsvTable parse_csv(std::string_view text, std::string_view origin = "csv");
CsvTable read_csv(const std::string& path);
void write_csv(std::ostream& out, const CsvTable& table);
void write_csv_file(const std::string& path, const CsvTable& table);

/// Parses a plain decimal ("12", "-0.25", "3.") exactly.
Rational parse_decimal(std::string_view text);

/// Fixed-point rendering rounded half away from zero.
std::string format_decimal(const Rational& value, unsigned digits);

}  // namespace cadorder
