#pragma once

// Sectioned key-value run configuration:
//
//   # comment
//   [grid]
//   n = 32
//   [model]
//   kind = leray_deconv
//   delta = 0.5
//
// Keys are addressed as "section.key". Unknown sections or keys are
// rejected. See README.md for the full key list and defaults.

#include <map>
#include <string>
#include <vector>

#include "ldm/solver.hpp"

namespace ldm::io {

struct ConfigEntry {
  std::string value;
  int line = 0;  ///< 0 for command-line overrides
};

/// Flat "section.key" -> value map preserving the source line of each entry.
class ConfigDocument {
 public:
  /// Throws ValidationError("line N: ...") on malformed input.
  static ConfigDocument parse(const std::string& text, const std::string& source = "<config>");
  static ConfigDocument load(const std::string& path);

  /// Applies a "section.key=value" override.
  void set(const std::string& assignment);
  void set(const std::string& key, const std::string& value);

  bool has(const std::string& key) const { return entries_.count(key) != 0; }
  const std::map<std::string, ConfigEntry>& entries() const noexcept { return entries_; }
  const std::string& source() const noexcept { return source_; }

 private:
  std::string source_;
  std::map<std::string, ConfigEntry> entries_;
};

struct RunConfig {
  SolverConfig solver;
  std::string output_dir = "ldm_out";
  bool write_csv = true;
  bool write_snapshots = true;
};

/// Validates keys and values and applies defaults.
RunConfig to_run_config(const ConfigDocument& doc);

/// Canonical text of the effective configuration; parsing it back yields the
/// same RunConfig.
std::string effective_config_text(const RunConfig& config);

/// FNV-1a 64-bit hash as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace ldm::io
