#include "oamphase/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "oamphase/errors.hpp"

namespace oam::io {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Quote a CSV field only when RFC 4180 requires it.
std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n\r") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path, "cannot open for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError(path, "write failed");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open for reading");
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError(path, "read failed");
  return bytes;
}

ordered_json grid_json(const modes::GridSpec& grid) {
  return ordered_json{{"extent", grid.extent}, {"nx", grid.nx}, {"ny", grid.ny}, {"z", grid.z}};
}

}  // namespace

void write_field_pgm(const modes::ComplexField2D& field, Channel channel, const std::string& path) {
  const modes::GridSpec& grid = field.grid;
  if (grid.nx <= 0 || grid.ny <= 0 || field.samples.size() != static_cast<std::size_t>(grid.nx) * grid.ny)
    throw std::invalid_argument("write_field_pgm: field samples do not match its grid");

  double norm = 0.0;
  if (channel == Channel::intensity) {
    for (const auto& s : field.samples) norm = std::max(norm, std::norm(s));
  }

  std::string bytes;
  bytes += "P5\n" + std::to_string(grid.nx) + " " + std::to_string(grid.ny) + "\n65535\n";
  bytes.reserve(bytes.size() + field.samples.size() * 2);
  for (const auto& s : field.samples) {
    double unit;  // value mapped onto [0, 1]
    if (channel == Channel::intensity) {
      unit = (norm > 0.0) ? std::norm(s) / norm : 0.0;
    } else {
      unit = (std::arg(s) + M_PI) / (2.0 * M_PI);
    }
    auto v = static_cast<std::uint16_t>(std::lround(std::clamp(unit, 0.0, 1.0) * 65535.0));
    bytes += static_cast<char>(v >> 8);  // big-endian, the 16-bit PGM byte order
    bytes += static_cast<char>(v & 0xff);
  }
  write_file(path, bytes);

  ordered_json sidecar{
      {"channel", channel == Channel::intensity ? "intensity" : "phase"},
      {"grid", grid_json(grid)},
      {"normalization", channel == Channel::intensity ? norm : 2.0 * M_PI},
      {"scale",
       channel == Channel::intensity ? "value = 65535 * |field|^2 / normalization"
                                     : "value = 65535 * (arg(field) + pi) / normalization"},
  };
  write_file(path + ".json", sidecar.dump(2) + "\n");
}

void write_scalar_pgm(const std::vector<double>& values, const modes::GridSpec& grid,
                      const std::string& path) {
  if (grid.nx <= 0 || grid.ny <= 0 || values.size() != static_cast<std::size_t>(grid.nx) * grid.ny)
    throw std::invalid_argument("write_scalar_pgm: values do not match the grid");

  double lo = values.front(), hi = values.front();
  for (double v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double span = hi - lo;

  std::string bytes;
  bytes += "P5\n" + std::to_string(grid.nx) + " " + std::to_string(grid.ny) + "\n65535\n";
  bytes.reserve(bytes.size() + values.size() * 2);
  for (double v : values) {
    double unit = (span > 0.0) ? (v - lo) / span : 0.0;
    auto q = static_cast<std::uint16_t>(std::lround(std::clamp(unit, 0.0, 1.0) * 65535.0));
    bytes += static_cast<char>(q >> 8);
    bytes += static_cast<char>(q & 0xff);
  }
  write_file(path, bytes);

  ordered_json sidecar{
      {"channel", "scalar"},
      {"grid", grid_json(grid)},
      {"min", lo},
      {"max", hi},
      {"scale", "value = 65535 * (scalar - min) / (max - min)"},
  };
  write_file(path + ".json", sidecar.dump(2) + "\n");
}

void write_csv(const std::vector<Column>& table, const std::string& path) {
  std::size_t rows = table.empty() ? 0 : table.front().values.size();
  for (const auto& col : table)
    if (col.values.size() != rows)
      throw std::invalid_argument("write_csv: column '" + col.name + "' has mismatched length");

  std::string bytes;
  for (std::size_t c = 0; c < table.size(); ++c) {
    if (c) bytes += ',';
    bytes += csv_field(table[c].name);
  }
  bytes += '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < table.size(); ++c) {
      if (c) bytes += ',';
      bytes += format_double(table[c].values[r]);
    }
    bytes += '\n';
  }
  write_file(path, bytes);
}

void validate(const RunConfig& config) {
  if (!(config.w0 > 0.0)) throw std::invalid_argument("config: w0 must be positive");
  if (!(config.k0 > 0.0)) throw std::invalid_argument("config: k0 must be positive");
  if (config.p < 0) throw std::invalid_argument("config: p must be non-negative");
  if (!(config.theta >= 0.0 && config.theta <= M_PI))
    throw std::invalid_argument("config: theta must lie in [0, pi]");
  if (config.grid.nx < 32 || config.grid.ny < 32)
    throw std::invalid_argument("config: grid resolution must be at least 32");
  if (config.grid.extent < 0.0) throw std::invalid_argument("config: grid extent must not be negative");
  if (!(config.tol_scale > 0.0)) throw std::invalid_argument("config: tolerance scale must be positive");
  if (config.out_prefix.empty()) throw std::invalid_argument("config: output prefix must not be empty");
}

std::string serialize(const RunConfig& config) {
  ordered_json j{
      {"frame", ordered_json{{"w0", config.w0}, {"k0", config.k0}}},
      {"mode", ordered_json{{"l", config.l}, {"p", config.p}}},
      {"point", ordered_json{{"theta", config.theta}, {"phi", config.phi}}},
      {"grid", grid_json(config.grid)},
      {"output", ordered_json{{"prefix", config.out_prefix}}},
      {"tolerances", ordered_json{{"scale", config.tol_scale}}},
      {"seed", config.seed},
  };
  return j.dump(2) + "\n";
}

RunConfig parse_run_config(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
  }
  RunConfig c;
  try {
    c.w0 = j.at("frame").at("w0").get<double>();
    c.k0 = j.at("frame").at("k0").get<double>();
    c.l = j.at("mode").at("l").get<int>();
    c.p = j.at("mode").at("p").get<int>();
    c.theta = j.at("point").at("theta").get<double>();
    c.phi = j.at("point").at("phi").get<double>();
    c.grid.extent = j.at("grid").at("extent").get<double>();
    c.grid.nx = j.at("grid").at("nx").get<int>();
    c.grid.ny = j.at("grid").at("ny").get<int>();
    c.grid.z = j.at("grid").at("z").get<double>();
    c.out_prefix = j.at("output").at("prefix").get<std::string>();
    c.tol_scale = j.at("tolerances").at("scale").get<double>();
    c.seed = j.at("seed").get<unsigned long long>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: missing or mistyped field: ") + e.what());
  }
  validate(c);
  return c;
}

RunConfig load_run_config(const std::string& path) { return parse_run_config(read_file(path)); }

void save_run_config(const RunConfig& config, const std::string& path) {
  write_file(path, serialize(config));
}

std::string serialize(const poincare::SphereState& state) {
  const poincare::OrderNSubspace shell(state.order());
  ordered_json coeffs = ordered_json::array();
  for (int j = 0; j <= shell.N; ++j) {
    coeffs.push_back(ordered_json{{"l", shell.basis[j].l},
                                  {"p", shell.basis[j].p},
                                  {"re", state.coeffs(j).real()},
                                  {"im", state.coeffs(j).imag()}});
  }
  ordered_json j{
      {"l", state.mode.l}, {"p", state.mode.p}, {"theta", state.theta}, {"phi", state.phi},
      {"coeffs", coeffs},
  };
  return j.dump(2) + "\n";
}

std::string serialize(const angmom::AmplitudeSet& set) {
  ordered_json entries = ordered_json::array();
  for (const auto& e : set.entries()) {
    entries.push_back(ordered_json{{"sigma", e.sigma},
                                   {"l", e.l},
                                   {"p", e.p},
                                   {"k0", e.k0},
                                   {"re", e.value.real()},
                                   {"im", e.value.imag()}});
  }
  ordered_json j{
      {"kind", set.kind() == angmom::SetKind::classical ? "classical" : "one_photon"},
      {"entries", entries},
  };
  return j.dump(2) + "\n";
}

angmom::AmplitudeSet parse_amplitude_set(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("amplitude set: invalid JSON: ") + e.what());
  }
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind != "classical" && kind != "one_photon")
      throw std::invalid_argument("amplitude set: kind must be 'classical' or 'one_photon'");
    std::vector<angmom::Amplitude> entries;
    for (const auto& e : j.at("entries")) {
      entries.push_back({e.at("sigma").get<int>(), e.at("l").get<int>(), e.at("p").get<int>(),
                         e.at("k0").get<double>(),
                         {e.at("re").get<double>(), e.at("im").get<double>()}});
    }
    return kind == "classical" ? angmom::AmplitudeSet::classical(std::move(entries))
                               : angmom::AmplitudeSet::one_photon(std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("amplitude set: missing or mistyped field: ") + e.what());
  }
}

angmom::AmplitudeSet load_amplitude_set(const std::string& path) {
  return parse_amplitude_set(read_file(path));
}

}  // namespace oam::io
