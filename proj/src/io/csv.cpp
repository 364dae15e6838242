#include "ldm/io/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "ldm/error.hpp"
#include "ldm/io/artifacts.hpp"

namespace ldm::io {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_number(const std::string& s, int line) {
  if (s == "nan") return std::nan("");
  if (s == "inf") return HUGE_VAL;
  if (s == "-inf") return -HUGE_VAL;
  double v = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw FormatError("csv line " + std::to_string(line) + ": cannot parse '" + s + "' as a number");
  }
  return v;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, p);
}

void write_csv(std::ostream& out, const CsvTable& table) {
  if (!table.schema.empty()) out << "# schema=" << table.schema << "\n";
  for (std::size_t j = 0; j < table.columns.size(); ++j) out << (j ? "," : "") << table.columns[j];
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << format_double(row[j]);
    out << "\n";
  }
}

void write_csv(const std::string& path, const CsvTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  write_csv(out, table);
  if (!out) throw Error("failed writing " + path);
}

CsvTable parse_csv(const std::string& text, const std::string& expected_schema, int max_major) {
  CsvTable t;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header && line.rfind("# schema=", 0) == 0) {
      t.schema = line.substr(9);
      continue;
    }
    if (!header) {
      t.columns = split(line);
      header = true;
      continue;
    }
    const auto cells = split(line);
    if (cells.size() != t.columns.size()) {
      throw FormatError("csv line " + std::to_string(lineno) + ": expected " + std::to_string(t.columns.size()) +
                        " fields, found " + std::to_string(cells.size()));
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) row.push_back(parse_number(c, lineno));
    t.rows.push_back(std::move(row));
  }
  if (!header) throw FormatError("csv has no header row");
  if (!expected_schema.empty()) {
    const auto slash = t.schema.find('/');
    const std::string name = t.schema.substr(0, slash);
    if (name != expected_schema) {
      throw FormatError("csv schema '" + t.schema + "' is not " + expected_schema);
    }
    int major = 0;
    const std::string ver = slash == std::string::npos ? "" : t.schema.substr(slash + 1);
    const auto [p, ec] = std::from_chars(ver.data(), ver.data() + ver.size(), major);
    if (ec != std::errc()) throw FormatError("csv schema '" + t.schema + "' has no major version");
    if (major > max_major) {
      throw FormatError("csv schema " + t.schema + " is newer than supported major " + std::to_string(max_major));
    }
  }
  return t;
}

CsvTable read_csv(const std::string& path, const std::string& expected_schema, int max_major) {
  return parse_csv(read_file(path), expected_schema, max_major);
}

const std::vector<std::string>& diag_columns() {
  static const std::vector<std::string> cols{"t", "energy", "h1_seminorm_sq", "dissipation", "input_power",
                                             "balance_residual"};
  return cols;
}

CsvTable diag_table(const std::vector<DiagRecord>& records) {
  CsvTable t;
  t.schema = "ldm.diag/" + std::to_string(kDiagSchemaMajor);
  t.columns = diag_columns();
  for (const auto& r : records) {
    t.rows.push_back({r.t, r.energy, r.h1_seminorm_sq, r.dissipation, r.input_power, r.balance_residual});
  }
  return t;
}

std::vector<DiagRecord> diag_records(const CsvTable& table) {
  if (table.columns != diag_columns()) throw FormatError("csv columns do not match the diagnostics schema");
  std::vector<DiagRecord> out;
  for (const auto& r : table.rows) out.push_back({r[0], r[1], r[2], r[3], r[4], r[5]});
  return out;
}

CsvTable study_table(const StudyReport& report) {
  return {"ldm.study." + report.kind + "/" + std::to_string(kStudySchemaMajor), report.columns, report.rows};
}

}  // namespace ldm::io
