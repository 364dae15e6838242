#pragma once

// Binary snapshot, little-endian:
//
//   offset  size  field
//   0       8     magic "LDSNAP01"
//   8       4     u32 n
//   12      8     f64 t
//   20      8     f64 delta
//   28      4     u32 N (deconvolution order)
//   32      4     u32 model tag (0 = NSE, 1 = Leray-deconvolution)
//   36      4     u32 layout version (1)
//   40      ...   3 * n^3 complex coefficients as (re, im) f64 pairs,
//                 component-major, then lexicographic over (k1, k2, k3) with
//                 each axis ordered 0, 1, ..., n/2-1, -n/2, ..., -1
//
// Payload length is exactly 3 * n^3 * 16 bytes.

#include <cstdint>
#include <string>
#include <vector>

#include "ldm/field.hpp"

namespace ldm::io {

inline constexpr char kSnapshotMagic[8] = {'L', 'D', 'S', 'N', 'A', 'P', '0', '1'};
inline constexpr std::uint32_t kSnapshotLayoutVersion = 1;
inline constexpr std::size_t kSnapshotHeaderBytes = 40;

struct SnapshotMeta {
  double delta = 0.0;
  std::uint32_t order = 0;
  std::uint32_t model_tag = 0;
};

struct Snapshot {
  SpectralField field;
  SnapshotMeta meta;
};

std::vector<unsigned char> encode_snapshot(const SpectralField& field, const SnapshotMeta& meta);

/// Throws FormatError on bad magic, newer layout or truncated payload, and
/// GridMismatchError when expected_n > 0 differs from the stored n.
Snapshot decode_snapshot(const std::vector<unsigned char>& bytes, int expected_n = 0);

void write_snapshot(const std::string& path, const SpectralField& field, const SnapshotMeta& meta);
Snapshot read_snapshot(const std::string& path, int expected_n = 0);

}  // namespace ldm::io
