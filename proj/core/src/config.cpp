#include "ferro/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "ferro/errors.hpp"
#include "ferro/field_dump.hpp"
#include "ferro/random_fields.hpp"
#include "ferro/transforms.hpp"

namespace ferro {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

struct RawEntry {
  std::string value;
  int line = 0;
};

// Accumulates line-numbered problems; the whole list is reported at once.
struct ErrorList {
  std::vector<std::string> messages;
  void add(int line, const std::string& msg) {
    messages.push_back("line " + std::to_string(line) + ": " + msg);
  }
  void raise_if_any() const {
    if (messages.empty()) return;
    std::string joined = "config rejected:";
    for (const std::string& m : messages) joined += "\n  " + m;
    throw ConfigError(joined);
  }
};

bool parse_double_value(const std::string& s, double& out) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  char* end = nullptr;
  out = std::strtod(t.c_str(), &end);
  return end == t.c_str() + t.size() && std::isfinite(out);
}

bool parse_int_value(const std::string& s, long long& out) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  char* end = nullptr;
  out = std::strtoll(t.c_str(), &end, 10);
  return end == t.c_str() + t.size();
}

const char* const kKnownKeys[] = {
    "grid.n1",        "grid.n2",          "grid.length",
    "params.rho0",    "params.k",         "params.eta",
    "params.zeta",    "params.eta_prime", "params.mu0",
    "params.sigma",   "params.tau",       "params.chi0",
    "solver.dt",      "solver.t_end",     "solver.galerkin_n",
    "solver.integrator", "forcing.kind",  "forcing.K",
    "forcing.eta_decay", "forcing.mode",  "init.kind",
    "output.dir",     "output.stride"};

bool known_key(const std::string& k) {
  for (const char* key : kKnownKeys)
    if (k == key) return true;
  return false;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  std::map<std::string, RawEntry> raw;
  ErrorList errors;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      errors.add(line_no, "expected key=value");
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!known_key(key)) {
      errors.add(line_no, "unknown key '" + key + "'");
      continue;
    }
    if (raw.count(key)) {
      errors.add(line_no, "duplicate key '" + key + "'");
      continue;
    }
    raw[key] = RawEntry{value, line_no};
  }

  ExperimentConfig cfg;

  auto take = [&](const char* key) -> const RawEntry* {
    auto it = raw.find(key);
    return it == raw.end() ? nullptr : &it->second;
  };
  auto number = [&](const char* key, double& slot, auto&& check,
                    const char* what) {
    const RawEntry* e = take(key);
    if (!e) return;
    double v;
    if (!parse_double_value(e->value, v)) {
      errors.add(e->line, std::string(key) + " is not a number");
      return;
    }
    if (!check(v)) {
      errors.add(e->line, std::string(key) + " " + what);
      return;
    }
    slot = v;
  };
  auto integer = [&](const char* key, int& slot, auto&& check,
                     const char* what) {
    const RawEntry* e = take(key);
    if (!e) return;
    long long v;
    if (!parse_int_value(e->value, v)) {
      errors.add(e->line, std::string(key) + " is not an integer");
      return;
    }
    if (!check(v)) {
      errors.add(e->line, std::string(key) + " " + what);
      return;
    }
    slot = int(v);
  };

  auto positive = [](double v) { return v > 0.0; };

  integer(
      "grid.n1", cfg.grid.n1,
      [](long long v) { return v >= 8 && v % 2 == 0 && v <= (1 << 16); },
      "must be an even integer >= 8");
  integer(
      "grid.n2", cfg.grid.n2,
      [](long long v) { return v >= 8 && v % 2 == 0 && v <= (1 << 16); },
      "must be an even integer >= 8");
  number("grid.length", cfg.grid.length, positive, "must be > 0");

  number("params.rho0", cfg.params.rho0, positive, "must be > 0");
  number("params.k", cfg.params.k, positive, "must be > 0");
  number("params.eta", cfg.params.eta, positive, "must be > 0");
  number("params.zeta", cfg.params.zeta, positive, "must be > 0");
  number("params.eta_prime", cfg.params.eta_prime, positive, "must be > 0");
  number("params.mu0", cfg.params.mu0, positive, "must be > 0");
  number("params.sigma", cfg.params.sigma, positive, "must be > 0");
  number("params.tau", cfg.params.tau, positive, "must be > 0");
  number("params.chi0", cfg.params.chi0, positive, "must be > 0");

  number("solver.dt", cfg.dt, positive, "must be > 0");
  number(
      "solver.t_end", cfg.t_end, [](double v) { return v >= 0.0; },
      "must be >= 0");
  number(
      "solver.galerkin_n", cfg.galerkin_n, [](double v) { return v >= 0.0; },
      "must be >= 0");
  if (const RawEntry* e = take("solver.integrator")) {
    if (e->value == "etdrk2")
      cfg.integrator = SolverConfig::Integrator::etdrk2;
    else if (e->value == "imex_cn")
      cfg.integrator = SolverConfig::Integrator::imex_cn;
    else
      errors.add(e->line, "solver.integrator must be etdrk2 or imex_cn");
  }

  // Forcing block. The extra keys are tied to the decaying_mode kind.
  bool forcing_is_decaying = false;
  if (const RawEntry* e = take("forcing.kind")) {
    if (e->value == "none") {
      cfg.forcing.kind = ForcingSpec::Kind::none;
    } else if (e->value == "decaying_mode") {
      cfg.forcing.kind = ForcingSpec::Kind::decaying_mode;
      forcing_is_decaying = true;
      if (!take("forcing.K"))
        errors.add(e->line, "forcing.kind=decaying_mode requires forcing.K");
      if (!take("forcing.eta_decay"))
        errors.add(e->line,
                   "forcing.kind=decaying_mode requires forcing.eta_decay");
      if (!take("forcing.mode"))
        errors.add(e->line, "forcing.kind=decaying_mode requires forcing.mode");
    } else if (e->value.rfind("file:", 0) == 0) {
      cfg.forcing.kind = ForcingSpec::Kind::field;
      cfg.forcing_file = e->value.substr(5);
      if (cfg.forcing_file.empty())
        errors.add(e->line, "forcing.kind=file needs a path");
    } else {
      errors.add(e->line,
                 "forcing.kind must be none, decaying_mode, or file:<path>");
    }
  }
  number(
      "forcing.K", cfg.forcing.amplitude, positive, "must be > 0");
  number(
      "forcing.eta_decay", cfg.forcing.eta_decay,
      [](double v) { return v > 0.0 && v < 1.0; }, "must lie in (0, 1)");
  if (const RawEntry* e = take("forcing.mode")) {
    const std::vector<std::string> parts = split(e->value, ',');
    long long k1, k2;
    if (parts.size() != 2 || !parse_int_value(parts[0], k1) ||
        !parse_int_value(parts[1], k2))
      errors.add(e->line, "forcing.mode must be k1,k2");
    else if (k1 == 0 && k2 == 0)
      errors.add(e->line, "forcing.mode must be nonzero");
    else
      cfg.forcing.mode = {int(k1), int(k2)};
  }
  for (const char* key : {"forcing.K", "forcing.eta_decay", "forcing.mode"}) {
    const RawEntry* e = take(key);
    if (e && !forcing_is_decaying)
      errors.add(e->line,
                 std::string(key) + " requires forcing.kind=decaying_mode");
  }

  if (const RawEntry* e = take("init.kind")) {
    const std::string& v = e->value;
    if (v == "zero") {
      cfg.init.kind = InitSpec::Kind::zero;
    } else if (v.rfind("modes:", 0) == 0) {
      cfg.init.kind = InitSpec::Kind::modes;
      for (const std::string& entry : split(v.substr(6), ';')) {
        const std::vector<std::string> f = split(entry, ',');
        InitSpec::Mode m;
        long long k1 = 0, k2 = 0;
        bool ok = (f.size() == 4 || f.size() == 5);
        if (ok) {
          m.field = trim(f[0]);
          ok = (m.field == "u" || m.field == "omega" || m.field == "m1" ||
                m.field == "m2") &&
               parse_int_value(f[1], k1) && parse_int_value(f[2], k2) &&
               parse_double_value(f[3], m.amp);
          if (ok && f.size() == 5) ok = parse_double_value(f[4], m.phase);
          if (ok && k1 == 0 && k2 == 0) ok = false;
        }
        if (!ok) {
          errors.add(e->line,
                     "bad mode entry '" + entry +
                         "' (want field,k1,k2,amp[,phase], nonzero mode)");
          continue;
        }
        m.k1 = int(k1);
        m.k2 = int(k2);
        cfg.init.modes.push_back(m);
      }
      if (cfg.init.modes.empty() && errors.messages.empty())
        errors.add(e->line, "init.kind=modes needs at least one entry");
    } else if (v.rfind("random:", 0) == 0) {
      cfg.init.kind = InitSpec::Kind::random;
      const std::vector<std::string> f = split(v.substr(7), ',');
      long long seed = 0, band = 0;
      double amp = 0.0;
      if (f.size() != 3 || !parse_int_value(f[0], seed) ||
          !parse_int_value(f[1], band) || !parse_double_value(f[2], amp) ||
          band < 1 || !(amp > 0.0) || seed < 0)
        errors.add(e->line,
                   "init.kind=random needs seed,band,amplitude "
                   "(band >= 1, amplitude > 0)");
      else {
        cfg.init.seed = std::uint64_t(seed);
        cfg.init.band = int(band);
        cfg.init.amplitude = amp;
      }
    } else if (v.rfind("file:", 0) == 0) {
      cfg.init.kind = InitSpec::Kind::file;
      cfg.init.path = v.substr(5);
      if (cfg.init.path.empty()) errors.add(e->line, "init.kind=file needs a path");
    } else {
      errors.add(e->line,
                 "init.kind must be zero, modes:<...>, random:<...>, or "
                 "file:<path>");
    }
  }

  if (const RawEntry* e = take("output.dir")) {
    if (e->value.empty())
      errors.add(e->line, "output.dir must not be empty");
    else
      cfg.output.dir = e->value;
  }
  integer(
      "output.stride", cfg.output.stride, [](long long v) { return v >= 1; },
      "must be >= 1");

  errors.raise_if_any();
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const ExperimentConfig& cfg) {
  std::string out;
  auto kv = [&](const std::string& k, const std::string& v) {
    out += k + "=" + v + "\n";
  };
  kv("grid.n1", std::to_string(cfg.grid.n1));
  kv("grid.n2", std::to_string(cfg.grid.n2));
  kv("grid.length", fmt_double(cfg.grid.length));
  kv("params.rho0", fmt_double(cfg.params.rho0));
  kv("params.k", fmt_double(cfg.params.k));
  kv("params.eta", fmt_double(cfg.params.eta));
  kv("params.zeta", fmt_double(cfg.params.zeta));
  kv("params.eta_prime", fmt_double(cfg.params.eta_prime));
  kv("params.mu0", fmt_double(cfg.params.mu0));
  kv("params.sigma", fmt_double(cfg.params.sigma));
  kv("params.tau", fmt_double(cfg.params.tau));
  kv("params.chi0", fmt_double(cfg.params.chi0));
  kv("solver.dt", fmt_double(cfg.dt));
  kv("solver.t_end", fmt_double(cfg.t_end));
  kv("solver.galerkin_n", fmt_double(cfg.galerkin_n));
  kv("solver.integrator",
     cfg.integrator == SolverConfig::Integrator::etdrk2 ? "etdrk2" : "imex_cn");
  switch (cfg.forcing.kind) {
    case ForcingSpec::Kind::none:
      kv("forcing.kind", "none");
      break;
    case ForcingSpec::Kind::decaying_mode:
      kv("forcing.kind", "decaying_mode");
      kv("forcing.K", fmt_double(cfg.forcing.amplitude));
      kv("forcing.eta_decay", fmt_double(cfg.forcing.eta_decay));
      kv("forcing.mode", std::to_string(cfg.forcing.mode[0]) + "," +
                             std::to_string(cfg.forcing.mode[1]));
      break;
    case ForcingSpec::Kind::field:
      kv("forcing.kind", "file:" + cfg.forcing_file);
      break;
  }
  switch (cfg.init.kind) {
    case InitSpec::Kind::zero:
      kv("init.kind", "zero");
      break;
    case InitSpec::Kind::modes: {
      std::string v = "modes:";
      for (std::size_t i = 0; i < cfg.init.modes.size(); ++i) {
        const InitSpec::Mode& m = cfg.init.modes[i];
        if (i) v += ";";
        v += m.field + "," + std::to_string(m.k1) + "," +
             std::to_string(m.k2) + "," + fmt_double(m.amp) + "," +
             fmt_double(m.phase);
      }
      kv("init.kind", v);
      break;
    }
    case InitSpec::Kind::random:
      kv("init.kind", "random:" + std::to_string(cfg.init.seed) + "," +
                          std::to_string(cfg.init.band) + "," +
                          fmt_double(cfg.init.amplitude));
      break;
    case InitSpec::Kind::file:
      kv("init.kind", "file:" + cfg.init.path);
      break;
  }
  kv("output.dir", cfg.output.dir);
  kv("output.stride", std::to_string(cfg.output.stride));
  return out;
}

SolverConfig ExperimentConfig::solver_config() const {
  SolverConfig s;
  s.grid = grid;
  s.params = params;
  s.dt = dt;
  s.t_end = t_end;
  s.galerkin_n = galerkin_n;
  s.snapshot_stride = output.stride;
  s.integrator = integrator;
  return s;
}

ForcingSpec ExperimentConfig::resolved_forcing() const {
  switch (forcing.kind) {
    case ForcingSpec::Kind::none:
      return ForcingSpec::make_none();
    case ForcingSpec::Kind::decaying_mode:
      return ForcingSpec::make_decaying_mode(forcing.amplitude,
                                             forcing.eta_decay, forcing.mode);
    case ForcingSpec::Kind::field: {
      const FieldDump dump = read_dump(forcing_file);
      if (dump.n1 != grid.n1 || dump.n2 != grid.n2 ||
          dump.length != grid.length)
        throw ConfigError("forcing profile grid does not match the config");
      for (const DumpField& f : dump.fields) {
        if (f.name == "f" && f.samples.components() == 1)
          return ForcingSpec::make_field(forward_transform(f.samples));
      }
      throw ConfigError("forcing profile dump lacks a scalar field 'f'");
    }
  }
  throw ConfigError("bad forcing kind");
}

FerroState ExperimentConfig::initial_state() const {
  switch (init.kind) {
    case InitSpec::Kind::zero:
      return zero_state(grid);
    case InitSpec::Kind::modes: {
      FerroState s = zero_state(grid);
      for (const InitSpec::Mode& mode : init.modes) {
        const int half1 = grid.n1 / 2, half2 = grid.n2 / 2;
        if (std::abs(mode.k1) > half1 - 1 || std::abs(mode.k2) > half2 - 1)
          throw ConfigError("init mode not resolvable on this grid");
        const int ip1 = mode.k1 >= 0 ? mode.k1 : mode.k1 + grid.n1;
        const int ip2 = mode.k2 >= 0 ? mode.k2 : mode.k2 + grid.n2;
        const int im1 = -mode.k1 >= 0 ? -mode.k1 : -mode.k1 + grid.n1;
        const int im2 = -mode.k2 >= 0 ? -mode.k2 : -mode.k2 + grid.n2;
        const std::complex<double> half_amp =
            0.5 * mode.amp *
            std::complex<double>{std::cos(mode.phase), std::sin(mode.phase)};
        auto place = [&](SpectralField& f, int c, std::complex<double> w) {
          f.at(c, ip1, ip2) += w;
          f.at(c, im1, im2) += std::conj(w);
        };
        if (mode.field == "u") {
          // Solenoidal direction perp(k)/|k| keeps div u = 0.
          const double norm = std::hypot(double(mode.k1), double(mode.k2));
          place(s.u, 0, half_amp * (-mode.k2 / norm));
          place(s.u, 1, half_amp * (mode.k1 / norm));
        } else if (mode.field == "omega") {
          place(s.omega, 0, half_amp);
        } else if (mode.field == "m1") {
          place(s.m, 0, half_amp);
        } else {
          place(s.m, 1, half_amp);
        }
      }
      return s;
    }
    case InitSpec::Kind::random: {
      std::mt19937_64 rng(init.seed);
      FerroState s = zero_state(grid);
      s.u = random_solenoidal(grid, init.band, init.amplitude, rng);
      s.omega = random_band_limited(grid, 1, init.band, init.amplitude, rng);
      s.m = random_band_limited(grid, 2, init.band, init.amplitude, rng);
      return s;
    }
    case InitSpec::Kind::file: {
      const FieldDump dump = read_dump(init.path);
      if (dump.n1 != grid.n1 || dump.n2 != grid.n2 ||
          dump.length != grid.length)
        throw ConfigError("init dump grid does not match the config");
      FerroState s = state_from_dump(dump);
      s.t = 0.0;
      return s;
    }
  }
  throw ConfigError("bad init kind");
}

}  // namespace ferro
