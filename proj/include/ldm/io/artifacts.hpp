#pragma once

// Artifact directories: every file written through ArtifactDir is listed in
// manifest.json with its size and FNV-1a hash, next to the hash of the
// effective configuration.

#include <filesystem>
#include <string>
#include <vector>

namespace ldm::io {

class ArtifactDir {
 public:
  explicit ArtifactDir(std::filesystem::path root);

  const std::filesystem::path& root() const noexcept { return root_; }
  std::filesystem::path path(const std::string& name) const { return root_ / name; }

  /// Registers a file already written under root().
  void record(const std::string& name);
  void write_text(const std::string& name, const std::string& text);

  /// Writes manifest.json.
  void finish(const std::string& config_text, const std::string& command) const;

  const std::vector<std::string>& files() const noexcept { return files_; }

 private:
  std::filesystem::path root_;
  std::vector<std::string> files_;
};

std::string read_file(const std::filesystem::path& path);

}  // namespace ldm::io
