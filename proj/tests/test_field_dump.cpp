#include <cmath>
#include <complex>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "ferro/errors.hpp"
#include "ferro/field_dump.hpp"
#include "ferro/magnetostatics.hpp"
#include "ferro/random_fields.hpp"
#include "ferro/state.hpp"
#include "ferro/transforms.hpp"
#include "support/helpers.hpp"

using namespace ferro;

namespace {

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "ferro_dump_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::vector<char> slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(bool(in));
  return std::vector<char>(std::istreambuf_iterator<char>(in),
                           std::istreambuf_iterator<char>());
}

void spit(const std::filesystem::path& p, const std::vector<char>& bytes) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  REQUIRE(bool(out));
  out.write(bytes.data(), std::streamsize(bytes.size()));
}

FieldDump sample_dump(const Grid& g) {
  FieldDump dump;
  dump.n1 = g.n1;
  dump.n2 = g.n2;
  dump.length = g.length;
  dump.time = 0.75;
  PhysicalField scalar(g, 1);
  PhysicalField vec(g, 2);
  for (int i1 = 0; i1 < g.n1; ++i1)
    for (int i2 = 0; i2 < g.n2; ++i2) {
      scalar.at(0, i1, i2) = 0.1 * i1 - 0.2 * i2;
      vec.at(0, i1, i2) = std::sin(0.3 * i1);
      vec.at(1, i1, i2) = std::cos(0.3 * i2) + 1.5;
    }
  dump.fields.push_back({"phi", std::move(scalar)});
  dump.fields.push_back({"vel", std::move(vec)});
  return dump;
}

}  // namespace

TEST_CASE("field dump round trips metadata and samples exactly") {
  const Grid g(12, 8, 3.5);
  const auto path = scratch_dir() / "roundtrip.dump";
  const FieldDump dump = sample_dump(g);
  write_dump(dump, path.string());
  const FieldDump back = read_dump(path.string());
  CHECK(back.n1 == dump.n1);
  CHECK(back.n2 == dump.n2);
  CHECK(back.length == dump.length);
  CHECK(back.time == dump.time);
  REQUIRE(back.fields.size() == dump.fields.size());
  for (std::size_t f = 0; f < dump.fields.size(); ++f) {
    CHECK(back.fields[f].name == dump.fields[f].name);
    REQUIRE(back.fields[f].samples.components() ==
            dump.fields[f].samples.components());
    const auto& a = dump.fields[f].samples.raw();
    const auto& b = back.fields[f].samples.raw();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  }
}

TEST_CASE("read_dump rejects a corrupted magic") {
  const Grid g(8, 8, 1.0);
  const auto path = scratch_dir() / "magic.dump";
  write_dump(sample_dump(g), path.string());
  auto bytes = slurp(path);
  bytes[0] = 'X';
  spit(path, bytes);
  CHECK_THROWS_WITH_AS(read_dump(path.string()),
                       doctest::Contains("bad magic"), IoError);
}

TEST_CASE("read_dump rejects an unsupported version") {
  const Grid g(8, 8, 1.0);
  const auto path = scratch_dir() / "version.dump";
  write_dump(sample_dump(g), path.string());
  auto bytes = slurp(path);
  const std::uint16_t v = 7;
  std::memcpy(bytes.data() + 4, &v, sizeof(v));
  spit(path, bytes);
  CHECK_THROWS_WITH_AS(read_dump(path.string()),
                       doctest::Contains("unsupported version"), IoError);
}

TEST_CASE("read_dump rejects truncated files") {
  const Grid g(8, 8, 1.0);
  const auto path = scratch_dir() / "truncated.dump";
  write_dump(sample_dump(g), path.string());
  auto bytes = slurp(path);

  SUBCASE("inside the header") {
    bytes.resize(10);
    spit(path, bytes);
    CHECK_THROWS_WITH_AS(read_dump(path.string()),
                         doctest::Contains("truncated"), IoError);
  }
  SUBCASE("inside the sample payload") {
    bytes.resize(bytes.size() - 13);
    spit(path, bytes);
    CHECK_THROWS_WITH_AS(read_dump(path.string()),
                         doctest::Contains("truncated inside field"), IoError);
  }
}

TEST_CASE("read_dump rejects trailing bytes") {
  const Grid g(8, 8, 1.0);
  const auto path = scratch_dir() / "trailing.dump";
  write_dump(sample_dump(g), path.string());
  auto bytes = slurp(path);
  bytes.push_back('\0');
  spit(path, bytes);
  CHECK_THROWS_WITH_AS(read_dump(path.string()),
                       doctest::Contains("trailing bytes"), IoError);
}

TEST_CASE("read_dump rejects implausible grid dimensions") {
  const Grid g(8, 8, 1.0);
  const auto path = scratch_dir() / "dims.dump";
  write_dump(sample_dump(g), path.string());
  auto bytes = slurp(path);
  const std::uint32_t zero = 0;
  std::memcpy(bytes.data() + 6, &zero, sizeof(zero));  // n1 field
  spit(path, bytes);
  CHECK_THROWS_WITH_AS(read_dump(path.string()),
                       doctest::Contains("implausible"), IoError);
}

TEST_CASE("write_dump rejects inconsistent field sizes") {
  const Grid g(8, 8, 1.0);
  const Grid other(16, 16, 1.0);
  FieldDump dump;
  dump.n1 = g.n1;
  dump.n2 = g.n2;
  dump.length = g.length;
  dump.fields.push_back({"phi", PhysicalField(other, 1)});
  const auto path = scratch_dir() / "mismatch.dump";
  CHECK_THROWS_WITH_AS(write_dump(dump, path.string()),
                       doctest::Contains("size mismatch"), IoError);
}

TEST_CASE("snapshot dump round trips the prognostic fields") {
  const Grid g(24, 24, 2.0 * std::numbers::pi);
  std::mt19937_64 rng(402);
  Snapshot snap;
  snap.state.t = 1.25;
  snap.state.u = random_solenoidal(g, 6, 0.8, rng);
  snap.state.omega = random_band_limited(g, 1, 6, 0.5, rng);
  snap.state.m = random_band_limited(g, 2, 6, 0.7, rng);
  snap.h = solve_h(snap.state.m, SpectralField(g, 1)).h;
  snap.g_f = SpectralField(g, 2);
  snap.f = SpectralField(g, 1);
  testutil::add_cos(snap.f, 0, 2, 1, 0.3);

  const auto path = scratch_dir() / "snapshot.dump";
  write_dump(dump_from_snapshot(snap), path.string());
  const FieldDump back = read_dump(path.string());
  REQUIRE(back.fields.size() == 5);
  const FerroState s = state_from_dump(back);
  CHECK(s.t == doctest::Approx(1.25));
  CHECK(testutil::max_coeff_diff(s.u, snap.state.u) < 1e-13);
  CHECK(testutil::max_coeff_diff(s.omega, snap.state.omega) < 1e-13);
  CHECK(testutil::max_coeff_diff(s.m, snap.state.m) < 1e-13);
}

TEST_CASE("state_from_dump requires the prognostic fields") {
  const Grid g(8, 8, 1.0);
  FieldDump dump;
  dump.n1 = g.n1;
  dump.n2 = g.n2;
  dump.length = g.length;
  dump.fields.push_back({"u", PhysicalField(g, 2)});
  dump.fields.push_back({"m", PhysicalField(g, 2)});
  CHECK_THROWS_WITH_AS(state_from_dump(dump),
                       doctest::Contains("lacks u, omega, or m"), IoError);
}
