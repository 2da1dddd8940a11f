#ifndef MOODREC_CSV_HPP
#define MOODREC_CSV_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moodrec/error.hpp"

namespace moodrec {

/// Minimal RFC-4180 reader: quoted fields, doubled quotes, embedded commas
/// and newlines, CRLF line endings. Blank lines are skipped.
class CsvReader {
 public:
  explicit CsvReader(const std::filesystem::path& path);

  // Next record, or nullopt at end of file. Throws ParseError on malformed
  // quoting, naming the line.
  std::optional<std::vector<std::string>> next_row();

  // Physical line on which the most recently returned row started.
  std::size_t line_number() const { return row_line_; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::ifstream in_;
  std::size_t line_ = 0;
  std::size_t row_line_ = 0;
};

// Quote a field if it contains a comma, quote, or newline.
std::string csv_escape(std::string_view field);

// Number parsing with file:line context in the error message.
std::int64_t parse_int64_field(std::string_view text, std::string_view what,
                               const std::filesystem::path& path,
                               std::size_t line);
double parse_double_field(std::string_view text, std::string_view what,
                          const std::filesystem::path& path, std::size_t line);

}  // namespace moodrec

#endif  // MOODREC_CSV_HPP
