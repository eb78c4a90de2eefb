#pragma once

#include <string>
#include <vector>

#include "ferro/field.hpp"
#include "ferro/solver.hpp"

namespace ferro {

// One named physical-sample field inside a dump.
struct DumpField {
  std::string name;
  PhysicalField samples;
};

// Binary snapshot container. Layout, all little-endian:
//   magic "FERR", version u16 = 1, n1 u32, n2 u32, L f64, time f64,
//   nfields u32, then per field: name length u16, UTF-8 name, component
//   count u8, components x n1 x n2 f64 samples row-major (x2 fastest).
struct FieldDump {
  int n1 = 0;
  int n2 = 0;
  double length = 0.0;
  double time = 0.0;
  std::vector<DumpField> fields;
};

void write_dump(const FieldDump& dump, const std::string& path);
FieldDump read_dump(const std::string& path);

// Snapshot <-> dump with fields named u, omega, m, h, f.
FieldDump dump_from_snapshot(const Snapshot& snap);
// Rebuilds the prognostic fields (u, omega, m) on the dump's own grid.
FerroState state_from_dump(const FieldDump& dump);

}  // namespace ferro
