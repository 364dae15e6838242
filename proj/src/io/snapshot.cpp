#include "ldm/io/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include "ldm/error.hpp"

namespace ldm::io {

static_assert(std::endian::native == std::endian::little, "snapshot I/O assumes a little-endian host");

namespace {

template <typename T>
void put(std::vector<unsigned char>& out, std::size_t at, T v) {
  std::memcpy(out.data() + at, &v, sizeof v);
}

template <typename T>
T get(const std::vector<unsigned char>& in, std::size_t at) {
  T v;
  std::memcpy(&v, in.data() + at, sizeof v);
  return v;
}

}  // namespace

std::vector<unsigned char> encode_snapshot(const SpectralField& field, const SnapshotMeta& meta) {
  if (field.components() != 3) throw ValidationError("snapshots hold 3-component fields");
  const auto data = field.data();
  std::vector<unsigned char> out(kSnapshotHeaderBytes + data.size() * 16);
  std::memcpy(out.data(), kSnapshotMagic, 8);
  put(out, 8, std::uint32_t(field.n()));
  put(out, 12, field.time());
  put(out, 20, meta.delta);
  put(out, 28, meta.order);
  put(out, 32, meta.model_tag);
  put(out, 36, kSnapshotLayoutVersion);
  std::memcpy(out.data() + kSnapshotHeaderBytes, data.data(), data.size() * 16);
  return out;
}

Snapshot decode_snapshot(const std::vector<unsigned char>& bytes, int expected_n) {
  if (bytes.size() < kSnapshotHeaderBytes) throw FormatError("snapshot shorter than its header");
  if (std::memcmp(bytes.data(), kSnapshotMagic, 8) != 0) throw FormatError("not a snapshot file (bad magic)");
  const auto version = get<std::uint32_t>(bytes, 36);
  if (version > kSnapshotLayoutVersion) {
    throw FormatError("snapshot layout version " + std::to_string(version) + " is newer than supported " +
                      std::to_string(kSnapshotLayoutVersion));
  }
  const auto n = get<std::uint32_t>(bytes, 8);
  if (n < 4 || n % 2 != 0 || n > 4096) throw FormatError("snapshot header has invalid n " + std::to_string(n));
  if (expected_n > 0 && int(n) != expected_n) {
    throw GridMismatchError("snapshot grid n=" + std::to_string(n) + " does not match expected n=" +
                            std::to_string(expected_n));
  }
  const std::size_t payload = std::size_t(3) * n * n * n * 16;
  if (bytes.size() != kSnapshotHeaderBytes + payload) {
    throw FormatError("snapshot payload is " + std::to_string(bytes.size() - kSnapshotHeaderBytes) +
                      " bytes, expected " + std::to_string(payload));
  }
  Snapshot s{SpectralField(Grid::make(int(n)), 3, get<double>(bytes, 12)),
             {get<double>(bytes, 20), get<std::uint32_t>(bytes, 28), get<std::uint32_t>(bytes, 32)}};
  std::memcpy(s.field.data().data(), bytes.data() + kSnapshotHeaderBytes, payload);
  return s;
}

void write_snapshot(const std::string& path, const SpectralField& field, const SnapshotMeta& meta) {
  const auto bytes = encode_snapshot(field, meta);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
  if (!out) throw Error("failed writing " + path);
}

Snapshot read_snapshot(const std::string& path, int expected_n) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_snapshot(bytes, expected_n);
}

}  // namespace ldm::io
