#pragma once

#include <cstdint>
#include <filesystem>

#include "radgas/field.hpp"

namespace radgas {

/// Self-describing binary field dump.  Header: magic, version, endianness
/// marker, grid shape; payload: raw little-endian doubles, row-major.
/// Round trips are bit-exact.
struct FieldHeader {
  std::uint32_t version = 0;
  int dim = 0;
  int points_per_axis = 0;
  double box_length = 0.0;
  std::uint64_t payload_count = 0;
};

void dump_field(const Field& f, const std::filesystem::path& path);
Field load_field(const std::filesystem::path& path);
/// Reads metadata only, without touching the payload.
FieldHeader read_field_header(const std::filesystem::path& path);

}  // namespace radgas
