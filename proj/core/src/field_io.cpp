#include "radgas/field_io.hpp"

#include <cstring>
#include <fstream>

#include "radgas/errors.hpp"

namespace radgas {

namespace {

constexpr char kMagic[8] = {'R', 'G', 'F', 'I', 'E', 'L', 'D', '\0'};
constexpr std::uint32_t kVersion = 1;
constexpr std::uint32_t kEndianMarker = 0x01020304u;

struct RawHeader {
  char magic[8];
  std::uint32_t version;
  std::uint32_t endian;
  std::uint32_t dim;
  std::uint32_t points;
  double length;
  std::uint64_t count;
};
static_assert(sizeof(RawHeader) == 40);

RawHeader read_raw_header(std::ifstream& in, const std::filesystem::path& path) {
  RawHeader h{};
  in.read(reinterpret_cast<char*>(&h), sizeof(h));
  if (!in) throw IoError("field file truncated before header: " + path.string());
  if (std::memcmp(h.magic, kMagic, sizeof(kMagic)) != 0)
    throw IoError("not a radgas field file: " + path.string());
  if (h.endian != kEndianMarker)
    throw IoError("field file endianness does not match this platform: " + path.string());
  if (h.version != kVersion)
    throw IoError("unsupported field file version " + std::to_string(h.version));
  return h;
}

}  // namespace

void dump_field(const Field& f, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  RawHeader h{};
  std::memcpy(h.magic, kMagic, sizeof(kMagic));
  h.version = kVersion;
  h.endian = kEndianMarker;
  h.dim = static_cast<std::uint32_t>(f.grid.dim());
  h.points = static_cast<std::uint32_t>(f.grid.points_per_axis());
  h.length = f.grid.box_length();
  h.count = f.values.size();
  out.write(reinterpret_cast<const char*>(&h), sizeof(h));
  out.write(reinterpret_cast<const char*>(f.values.data()),
            static_cast<std::streamsize>(f.values.size() * sizeof(double)));
  if (!out) throw IoError("short write to " + path.string());
}

Field load_field(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const RawHeader h = read_raw_header(in, path);
  Grid grid(static_cast<int>(h.dim), static_cast<int>(h.points), h.length);
  if (h.count != grid.total_points())
    throw IoError("field payload count does not match grid shape in " + path.string());
  Field f(grid);
  in.read(reinterpret_cast<char*>(f.values.data()),
          static_cast<std::streamsize>(h.count * sizeof(double)));
  if (!in) throw IoError("field file truncated mid-payload: " + path.string());
  return f;
}

FieldHeader read_field_header(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const RawHeader h = read_raw_header(in, path);
  return FieldHeader{h.version, static_cast<int>(h.dim), static_cast<int>(h.points), h.length,
                     h.count};
}

}  // namespace radgas
