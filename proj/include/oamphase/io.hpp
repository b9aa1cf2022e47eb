#pragma once

#include <string>
#include <vector>

#include "oamphase/angmom.hpp"
#include "oamphase/modes.hpp"
#include "oamphase/poincare.hpp"

namespace oam::io {

enum class Channel { intensity, phase };

// Writes a 16-bit binary PGM (P5, big-endian samples) of one channel of the
// field, plus a JSON sidecar at path + ".json" recording the channel, the
// grid, and the normalization constant. Intensity is scaled so the maximum
// maps to 65535; phase maps (-pi, pi] linearly onto [0, 65535]. Output bytes
// are identical across runs for identical input. Throws IoError with the
// path on filesystem failure.
void write_field_pgm(const modes::ComplexField2D& field, Channel channel, const std::string& path);

// Same container/sidecar format for a signed scalar sampled on a grid (e.g. a
// Wigner section): values map linearly from [min, max] onto [0, 65535], and
// the sidecar records min and max so the image is invertible.
void write_scalar_pgm(const std::vector<double>& values, const modes::GridSpec& grid,
                      const std::string& path);

struct Column {
  std::string name;
  std::vector<double> values;
};

// RFC-4180-style CSV: quoted headers where needed, "\n" line ends, values
// printed with 17 significant digits, rows in the given order. All columns
// must share one length (std::invalid_argument otherwise).
void write_csv(const std::vector<Column>& table, const std::string& path);

// Everything a rendering/verification run needs, serializable to JSON with a
// fixed key order so parse -> serialize is byte-identical.
struct RunConfig {
  double w0 = 1.0;
  double k0 = 2.0;
  int l = 0;
  int p = 0;
  double theta = 0.0;
  double phi = 0.0;
  modes::GridSpec grid{/*extent=*/0.0, /*nx=*/256, /*ny=*/256, /*z=*/0.0};  // extent 0 = auto
  std::string out_prefix = "field";
  double tol_scale = 1.0;
  unsigned long long seed = 0;
};

// Throws std::invalid_argument describing the first violated constraint
// (positive frame scalars and tolerance, p >= 0, grid resolution >= 32, ...).
void validate(const RunConfig& config);

std::string serialize(const RunConfig& config);
RunConfig parse_run_config(const std::string& text);

RunConfig load_run_config(const std::string& path);   // IoError on read failure
void save_run_config(const RunConfig& config, const std::string& path);

// Sphere-state JSON: {l, p, theta, phi, coeffs: [{l, p, re, im}, ...]}.
std::string serialize(const poincare::SphereState& state);

// Amplitude-set JSON: {kind, entries: [{sigma, l, p, k0, re, im}, ...]}.
std::string serialize(const angmom::AmplitudeSet& set);
angmom::AmplitudeSet parse_amplitude_set(const std::string& text);
angmom::AmplitudeSet load_amplitude_set(const std::string& path);

}  // namespace oam::io
