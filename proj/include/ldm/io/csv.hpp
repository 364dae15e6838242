#pragma once

// CSV tables: an optional "# schema=<name>/<major>" line, a header row, then
// records. Numbers use 17 significant digits so parsing restores every
// double exactly.

#include <iosfwd>
#include <string>
#include <vector>

#include "ldm/experiments.hpp"
#include "ldm/solver.hpp"

namespace ldm::io {

inline constexpr int kDiagSchemaMajor = 1;
inline constexpr int kStudySchemaMajor = 1;

struct CsvTable {
  std::string schema;  ///< e.g. "ldm.diag/1"; empty when absent
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string format_double(double v);

void write_csv(std::ostream& out, const CsvTable& table);
void write_csv(const std::string& path, const CsvTable& table);

/// Throws FormatError on ragged rows or unparsable numbers, and when the
/// schema major exceeds max_major for the named schema.
CsvTable parse_csv(const std::string& text, const std::string& expected_schema = {},
                   int max_major = 0);
CsvTable read_csv(const std::string& path, const std::string& expected_schema = {},
                  int max_major = 0);

const std::vector<std::string>& diag_columns();
CsvTable diag_table(const std::vector<DiagRecord>& records);
std::vector<DiagRecord> diag_records(const CsvTable& table);

/// Raw rows of a study under schema "ldm.study.<kind>/1".
CsvTable study_table(const StudyReport& report);

}  // namespace ldm::io
