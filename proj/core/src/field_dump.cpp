#include "ferro/field_dump.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

#include "ferro/errors.hpp"
#include "ferro/transforms.hpp"

namespace ferro {

namespace {

// The format is little-endian; this code assumes a little-endian host and
// writes native representations directly.
template <typename T>
void put(std::ostream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& in, const char* what) {
  T v;
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw IoError(std::string("dump truncated while reading ") + what);
  return v;
}

constexpr char kMagic[4] = {'F', 'E', 'R', 'R'};
constexpr std::uint16_t kVersion = 1;

}  // namespace

void write_dump(const FieldDump& dump, const std::string& path) {
  if (dump.n1 <= 0 || dump.n2 <= 0)
    throw IoError("write_dump: bad grid dimensions");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("write_dump: cannot open '" + path + "'");
  out.write(kMagic, 4);
  put<std::uint16_t>(out, kVersion);
  put<std::uint32_t>(out, std::uint32_t(dump.n1));
  put<std::uint32_t>(out, std::uint32_t(dump.n2));
  put<double>(out, dump.length);
  put<double>(out, dump.time);
  put<std::uint32_t>(out, std::uint32_t(dump.fields.size()));
  const std::size_t plane = std::size_t(dump.n1) * std::size_t(dump.n2);
  for (const DumpField& f : dump.fields) {
    if (f.name.size() > 0xffff) throw IoError("write_dump: field name too long");
    if (f.samples.raw().size() !=
        plane * std::size_t(f.samples.components()))
      throw IoError("write_dump: field '" + f.name + "' size mismatch");
    put<std::uint16_t>(out, std::uint16_t(f.name.size()));
    out.write(f.name.data(), std::streamsize(f.name.size()));
    put<std::uint8_t>(out, std::uint8_t(f.samples.components()));
    out.write(reinterpret_cast<const char*>(f.samples.raw().data()),
              std::streamsize(f.samples.raw().size() * sizeof(double)));
  }
  if (!out) throw IoError("write_dump: write failed for '" + path + "'");
}

FieldDump read_dump(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("read_dump: cannot open '" + path + "'");
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0)
    throw IoError("read_dump: bad magic in '" + path + "'");
  const auto version = get<std::uint16_t>(in, "version");
  if (version != kVersion)
    throw IoError("read_dump: unsupported version " + std::to_string(version));
  FieldDump dump;
  dump.n1 = int(get<std::uint32_t>(in, "n1"));
  dump.n2 = int(get<std::uint32_t>(in, "n2"));
  if (dump.n1 <= 0 || dump.n2 <= 0 || dump.n1 > (1 << 20) ||
      dump.n2 > (1 << 20))
    throw IoError("read_dump: implausible grid dimensions");
  dump.length = get<double>(in, "length");
  dump.time = get<double>(in, "time");
  const auto nfields = get<std::uint32_t>(in, "field count");
  const std::size_t plane = std::size_t(dump.n1) * std::size_t(dump.n2);
  const Grid grid(dump.n1, dump.n2, dump.length > 0.0 ? dump.length : 1.0);
  for (std::uint32_t i = 0; i < nfields; ++i) {
    DumpField f;
    const auto name_len = get<std::uint16_t>(in, "name length");
    f.name.resize(name_len);
    in.read(f.name.data(), name_len);
    if (!in) throw IoError("dump truncated while reading a field name");
    const auto comps = get<std::uint8_t>(in, "component count");
    if (comps < 1 || comps > 2)
      throw IoError("read_dump: field '" + f.name +
                    "' has unsupported component count");
    f.samples = PhysicalField(grid, comps);
    in.read(reinterpret_cast<char*>(f.samples.raw().data()),
            std::streamsize(plane * comps * sizeof(double)));
    if (!in)
      throw IoError("dump truncated inside field '" + f.name + "'");
    dump.fields.push_back(std::move(f));
  }
  in.peek();
  if (!in.eof()) throw IoError("read_dump: trailing bytes after last field");
  return dump;
}

FieldDump dump_from_snapshot(const Snapshot& snap) {
  const Grid& g = snap.state.u.grid();
  FieldDump dump;
  dump.n1 = g.n1;
  dump.n2 = g.n2;
  dump.length = g.length;
  dump.time = snap.state.t;
  dump.fields.push_back({"u", inverse_transform(snap.state.u)});
  dump.fields.push_back({"omega", inverse_transform(snap.state.omega)});
  dump.fields.push_back({"m", inverse_transform(snap.state.m)});
  dump.fields.push_back({"h", inverse_transform(snap.h)});
  dump.fields.push_back({"f", inverse_transform(snap.f)});
  return dump;
}

FerroState state_from_dump(const FieldDump& dump) {
  if (!(dump.length > 0.0)) throw IoError("state_from_dump: bad box length");
  const Grid g(dump.n1, dump.n2, dump.length);
  FerroState s = zero_state(g, dump.time);
  bool have_u = false, have_omega = false, have_m = false;
  for (const DumpField& f : dump.fields) {
    if (f.name == "u" && f.samples.components() == 2) {
      s.u = forward_transform(f.samples);
      have_u = true;
    } else if (f.name == "omega" && f.samples.components() == 1) {
      s.omega = forward_transform(f.samples);
      have_omega = true;
    } else if (f.name == "m" && f.samples.components() == 2) {
      s.m = forward_transform(f.samples);
      have_m = true;
    }
  }
  if (!have_u || !have_omega || !have_m)
    throw IoError("state_from_dump: dump lacks u, omega, or m");
  return s;
}

}  // namespace ferro
