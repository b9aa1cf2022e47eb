#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oamphase/modes.hpp"

namespace oam::verify {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double max_residual = 0.0;
  bool pass = true;
};

// Named invariant suites runnable from tests and the CLI: "modes",
// "symplectic", "wigner", "overlap", "angmom". tol_scale multiplies every
// check's default tolerance. Throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, double tol_scale,
                      const modes::BeamFrame& frame);

std::vector<std::string> suite_names();

// JSON {suite, checks: [{name, residual, tol, pass}], max_residual, pass}.
std::string report_json(const SuiteReport& report);

}  // namespace oam::verify
