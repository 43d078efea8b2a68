#include "r2cv/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "r2cv/errors.hpp"

namespace r2cv::csv {
namespace {

// Splits one line into fields: commas separate, double quotes group, ""
// inside a quoted field is a literal quote.
std::vector<std::string> split_record(const std::string& line,
                                      std::size_t line_no) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current.push_back(ch);
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (quoted) {
    throw CsvError("line " + std::to_string(line_no) +
                       ": unterminated quoted field",
                   line_no);
  }
  fields.push_back(std::move(current));
  return fields;
}

std::string trimmed(const std::string& field) {
  std::size_t begin = 0;
  std::size_t end = field.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(field[begin])))
    ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(field[end - 1])))
    --end;
  return field.substr(begin, end - begin);
}

// Strict full-token parse of a finite real, decimal point only.
std::optional<double> parse_number(const std::string& field) {
  const std::string token = trimmed(field);
  if (token.empty()) return std::nullopt;
  double value = 0.0;
  const char* first = token.data();
  const char* last = first + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

std::optional<std::size_t> parse_index(const std::string& ref) {
  if (ref.empty()) return std::nullopt;
  std::size_t value = 0;
  const char* first = ref.data();
  const char* last = first + ref.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

// Decides whether the first record is a header by looking only at the cells
// the caller will reference: all non-numeric means header, all numeric means
// data, and a mix cannot be either.
bool detect_header(const std::vector<std::string>& first_record,
                   const std::vector<std::string>& referenced_cols) {
  std::vector<std::size_t> probe;
  for (const std::string& ref : referenced_cols) {
    const auto named = std::find(first_record.begin(), first_record.end(), ref);
    if (named != first_record.end()) {
      probe.push_back(static_cast<std::size_t>(named - first_record.begin()));
      continue;
    }
    if (const auto index = parse_index(ref);
        index && *index < first_record.size()) {
      probe.push_back(*index);
    }
  }
  if (probe.empty()) return false;

  std::size_t numeric = 0;
  for (std::size_t idx : probe) {
    if (parse_number(first_record[idx])) ++numeric;
  }
  if (numeric == 0) return true;
  if (numeric == probe.size()) return false;
  throw CsvError(
      "line 1: referenced columns mix numeric and non-numeric fields", 1);
}

}  // namespace

std::vector<double> CsvTable::column(std::size_t index) const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row[index]);
  return out;
}

std::size_t resolve_column(const CsvTable& table, const std::string& ref) {
  if (table.has_header) {
    for (std::size_t i = 0; i < table.header.size(); ++i) {
      if (table.header[i] == ref) return i;
    }
  }
  if (const auto index = parse_index(ref)) {
    if (*index < table.width()) return *index;
    throw MissingColumn("column index " + ref + " out of range (table has " +
                        std::to_string(table.width()) + " columns)");
  }
  throw MissingColumn("no column named '" + ref + "'");
}

CsvTable load_csv(const std::string& path,
                  const std::vector<std::string>& referenced_cols) {
  std::ifstream in(path);
  if (!in) throw CsvError("cannot open '" + path + "'");

  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  if (in.bad()) throw CsvError("read error on '" + path + "'");
  if (lines.empty()) throw CsvError("'" + path + "': file is empty");

  std::vector<std::vector<std::string>> records;
  records.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    records.push_back(split_record(lines[i], i + 1));
  }
  const std::size_t width = records.front().size();
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].size() != width) {
      throw CsvError("line " + std::to_string(i + 1) + ": expected " +
                         std::to_string(width) + " fields, got " +
                         std::to_string(records[i].size()),
                     i + 1);
    }
  }

  CsvTable table;
  table.has_header = detect_header(records.front(), referenced_cols);
  std::size_t first_data = 0;
  if (table.has_header) {
    table.header = records.front();
    first_data = 1;
  }

  table.rows.reserve(records.size() - first_data);
  for (std::size_t i = first_data; i < records.size(); ++i) {
    std::vector<double> row;
    row.reserve(width);
    for (std::size_t c = 0; c < width; ++c) {
      const auto value = parse_number(records[i][c]);
      if (!value) {
        throw CsvError("line " + std::to_string(i + 1) + ": field " +
                           std::to_string(c + 1) + " ('" + records[i][c] +
                           "') is not a finite number",
                       i + 1);
      }
      row.push_back(*value);
    }
    table.rows.push_back(std::move(row));
  }

  // fail fast if a referenced column cannot be resolved
  for (const std::string& ref : referenced_cols) {
    resolve_column(table, ref);
  }
  return table;
}

}  // namespace r2cv::csv
