#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace r2cv::csv {

/// Parsed numeric table. When has_header is true the first file line held
/// the column names and data rows start at file line 2.
struct CsvTable {
  std::vector<std::string> header;
  bool has_header = false;
  std::vector<std::vector<double>> rows;

  std::size_t width() const noexcept {
    if (has_header) return header.size();
    return rows.empty() ? 0 : rows.front().size();
  }
  std::vector<double> column(std::size_t index) const;
};

/// Resolves a column reference — a header name, or a zero-based index for
/// headerless or positional access — to a column position. Header names win
/// over numeric interpretation. Throws MissingColumn.
std::size_t resolve_column(const CsvTable& table, const std::string& ref);

/// Loads an RFC-4180-style CSV of finite reals (decimal point only).
/// referenced_cols are the column references the caller will use; they
/// drive header detection on the first row: every referenced cell
/// non-numeric means a header, every one numeric means data, and a mix is
/// a parse error. Errors carry 1-based line numbers.
CsvTable load_csv(const std::string& path,
                  const std::vector<std::string>& referenced_cols);

}  // namespace r2cv::csv
