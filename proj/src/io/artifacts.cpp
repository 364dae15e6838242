#include "ldm/io/artifacts.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ldm/error.hpp"
#include "ldm/io/config.hpp"

namespace ldm::io {

ArtifactDir::ArtifactDir(std::filesystem::path root) : root_(std::move(root)) {
  std::error_code ec;
  std::filesystem::create_directories(root_, ec);
  if (ec) throw Error("cannot create output directory " + root_.string() + ": " + ec.message());
}

void ArtifactDir::record(const std::string& name) {
  if (std::find(files_.begin(), files_.end(), name) == files_.end()) files_.push_back(name);
}

void ArtifactDir::write_text(const std::string& name, const std::string& text) {
  std::ofstream out(path(name), std::ios::binary);
  if (!out) throw Error("cannot open " + path(name).string() + " for writing");
  out << text;
  if (!out) throw Error("failed writing " + path(name).string());
  record(name);
}

void ArtifactDir::finish(const std::string& config_text, const std::string& command) const {
  nlohmann::ordered_json m;
  m["format"] = "ldm.manifest/1";
  m["command"] = command;
  m["config_fnv1a"] = fnv1a_hex(config_text);
  m["files"] = nlohmann::ordered_json::array();
  for (const auto& name : files_) {
    const std::string bytes = read_file(path(name));
    m["files"].push_back({{"name", name}, {"bytes", bytes.size()}, {"fnv1a", fnv1a_hex(bytes)}});
  }
  std::ofstream out(path("manifest.json"), std::ios::binary);
  out << m.dump(2) << "\n";
  if (!out) throw Error("failed writing manifest.json");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ldm::io
