#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "oamphase/errors.hpp"
#include "oamphase/io.hpp"
#include "oamphase/modes.hpp"
#include "oamphase/phasespace.hpp"
#include "oamphase/poincare.hpp"
#include "oamphase/verify.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

using ordered_json = nlohmann::ordered_json;

oam::modes::BeamFrame checked_frame(double w0, double k0) {
  oam::modes::BeamFrame frame(w0, k0);
  if (frame.paraxiality() < 10.0)
    std::fprintf(stderr, "warning: w0*k0 = %g is below 10; the paraxial model is unreliable here\n",
                 frame.paraxiality());
  return frame;
}

void emit(const ordered_json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw oam::IoError(out_path, "cannot open for writing");
    out << j.dump(2) << "\n";
    if (!out) throw oam::IoError(out_path, "write failed");
  }
}

struct RenderOpts {
  oam::io::RunConfig cfg;
  std::string config_path;
  int grid_n = 256;
  double extent = 0.0;
  double z = 0.0;
};

int run_render(const CLI::App* sub, RenderOpts& o, double angle_scale) {
  oam::io::RunConfig cfg;
  if (!o.config_path.empty()) cfg = oam::io::load_run_config(o.config_path);
  if (sub->count("--w0")) cfg.w0 = o.cfg.w0;
  if (sub->count("--k0")) cfg.k0 = o.cfg.k0;
  if (sub->count("--l")) cfg.l = o.cfg.l;
  if (sub->count("--p")) cfg.p = o.cfg.p;
  if (sub->count("--theta")) cfg.theta = o.cfg.theta * angle_scale;
  if (sub->count("--phi")) cfg.phi = o.cfg.phi * angle_scale;
  if (sub->count("--grid")) cfg.grid.nx = cfg.grid.ny = o.grid_n;
  if (sub->count("--extent")) cfg.grid.extent = o.extent;
  if (sub->count("--z")) cfg.grid.z = o.z;
  if (sub->count("--out")) cfg.out_prefix = o.cfg.out_prefix;
  oam::io::validate(cfg);

  auto frame = checked_frame(cfg.w0, cfg.k0);
  auto state = oam::poincare::rotate({cfg.l, cfg.p}, cfg.theta, cfg.phi, frame);

  oam::modes::GridSpec grid = cfg.grid;
  if (grid.extent == 0.0) {
    double spread = std::sqrt(1.0 + (grid.z / frame.z0()) * (grid.z / frame.z0()));
    grid.extent = 4.0 * frame.w0 * std::sqrt(state.order() + 1.0) * spread;
  }
  if (!oam::poincare::grid_extent_adequate(grid, frame, state.order()))
    std::fprintf(stderr, "warning: grid half-width %g is below 4 w0 sqrt(N+1); the mode is clipped\n",
                 grid.extent);

  auto field = oam::poincare::synthesize_field(state, frame, grid);
  const std::string intensity_path = cfg.out_prefix + "_intensity.pgm";
  const std::string phase_path = cfg.out_prefix + "_phase.pgm";
  oam::io::write_field_pgm(field, oam::io::Channel::intensity, intensity_path);
  oam::io::write_field_pgm(field, oam::io::Channel::phase, phase_path);

  emit(ordered_json{{"mode", ordered_json{{"l", cfg.l}, {"p", cfg.p}}},
                    {"point", ordered_json{{"theta", cfg.theta}, {"phi", cfg.phi}}},
                    {"grid", ordered_json{{"extent", grid.extent}, {"nx", grid.nx}, {"ny", grid.ny}, {"z", grid.z}}},
                    {"intensity", intensity_path},
                    {"phase", phase_path}},
       "");
  return 0;
}

struct RotateOpts {
  double w0 = 1.0, k0 = 2.0;
  int l = 0, p = 0;
  double theta = 0.0, phi = 0.0;
  std::string out;
};

int run_rotate(const RotateOpts& o, double angle_scale) {
  auto frame = checked_frame(o.w0, o.k0);
  auto state = oam::poincare::rotate({o.l, o.p}, o.theta * angle_scale, o.phi * angle_scale, frame);
  std::string json = oam::io::serialize(state);
  if (o.out.empty()) {
    std::cout << json;
  } else {
    std::ofstream out(o.out, std::ios::binary);
    if (!out) throw oam::IoError(o.out, "cannot open for writing");
    out << json;
    if (!out) throw oam::IoError(o.out, "write failed");
  }
  return 0;
}

struct WignerOpts {
  double w0 = 1.0, k0 = 2.0;
  int l = 0, p = 0;
  double theta = 0.0, phi = 0.0, z = 0.0;
  std::string axes = "xpx";
  int grid_n = 128;
  std::string out = "wigner";
};

int run_wigner(const WignerOpts& o, double angle_scale) {
  auto frame = checked_frame(o.w0, o.k0);
  auto state = oam::poincare::rotate({o.l, o.p}, o.theta * angle_scale, o.phi * angle_scale, frame);

  // Square section in scaled units: positions in w0, momenta in w0/z0.
  const double span = 1.5 * std::sqrt(state.order() + 1.0);
  const double xs = frame.w0;
  const double ps = frame.w0 / frame.z0();
  oam::modes::GridSpec grid{span, o.grid_n, o.grid_n, o.z};

  std::vector<double> xcol, ycol, pxcol, pycol, wcol;
  std::vector<double> image(static_cast<std::size_t>(o.grid_n) * o.grid_n);
  for (int iy = 0; iy < o.grid_n; ++iy)
    for (int ix = 0; ix < o.grid_n; ++ix) {
      double u = grid.x_at(ix), v = grid.y_at(iy);
      oam::phasespace::PhaseSpacePoint zeta;
      if (o.axes == "xpx") {
        zeta = {u * xs, 0.0, v * ps, 0.0};
      } else if (o.axes == "xy") {
        zeta = {u * xs, v * xs, 0.0, 0.0};
      } else {
        zeta = {0.0, 0.0, u * ps, v * ps};
      }
      if (o.z != 0.0) zeta = oam::phasespace::galilean_boost(zeta, o.z);
      double w = oam::phasespace::wigner_closed(state, zeta, frame);
      image[static_cast<std::size_t>(iy) * o.grid_n + ix] = w;
      xcol.push_back(zeta.x);
      ycol.push_back(zeta.y);
      pxcol.push_back(zeta.px);
      pycol.push_back(zeta.py);
      wcol.push_back(w);
    }

  const std::string csv_path = o.out + ".csv";
  const std::string pgm_path = o.out + ".pgm";
  oam::io::write_csv({{"x", xcol}, {"y", ycol}, {"px", pxcol}, {"py", pycol}, {"W", wcol}}, csv_path);
  oam::io::write_scalar_pgm(image, grid, pgm_path);

  emit(ordered_json{{"mode", ordered_json{{"l", o.l}, {"p", o.p}}},
                    {"point", ordered_json{{"theta", o.theta * angle_scale}, {"phi", o.phi * angle_scale}}},
                    {"axes", o.axes},
                    {"units", "grid coordinates are x/w0 and px z0/w0; csv columns are physical"},
                    {"span", span},
                    {"z", o.z},
                    {"csv", csv_path},
                    {"pgm", pgm_path}},
       "");
  return 0;
}

struct OverlapOpts {
  double w0 = 1.0, k0 = 2.0;
  int l = 0, p = 0;
  int l2 = 0, p2 = 0;
  double theta1 = 0.0, phi1 = 0.0, theta2 = 0.0, phi2 = 0.0;
  int sweep = 0;
  bool check = false;
  std::string out;
};

int run_overlap(const CLI::App* sub, const OverlapOpts& o, double angle_scale) {
  auto frame = checked_frame(o.w0, o.k0);
  const int l2 = sub->count("--l2") ? o.l2 : o.l;
  const int p2 = sub->count("--p2") ? o.p2 : o.p;
  const double theta1 = o.theta1 * angle_scale, phi1 = o.phi1 * angle_scale;
  const double theta2 = o.theta2 * angle_scale, phi2 = o.phi2 * angle_scale;

  auto a = oam::poincare::rotate({o.l, o.p}, theta1, phi1, frame);

  if (o.sweep > 0) {
    std::vector<double> tcol, taucol, ocol;
    for (int i = 0; i <= o.sweep; ++i) {
      double t = kPi * i / o.sweep;
      auto b = oam::poincare::rotate({l2, p2}, t, phi2, frame);
      tcol.push_back(t);
      taucol.push_back(oam::phasespace::overlap_tau(theta1, phi1, t, phi2));
      ocol.push_back(oam::phasespace::overlap(a, b));
    }
    const std::string csv_path = o.out.empty() ? "overlap_sweep.csv" : o.out;
    oam::io::write_csv({{"theta2", tcol}, {"tau", taucol}, {"overlap", ocol}}, csv_path);
    emit(ordered_json{{"csv", csv_path}, {"points", o.sweep + 1}}, "");
    return 0;
  }

  auto b = oam::poincare::rotate({l2, p2}, theta2, phi2, frame);
  double closed = oam::phasespace::overlap(a, b);
  ordered_json j{
      {"overlap", closed},
      {"tau", oam::phasespace::overlap_tau(theta1, phi1, theta2, phi2)},
  };

  int rc = 0;
  if (o.check) {
    int n_max = std::max(a.order(), b.order());
    double rx = frame.w0 * (2.5 + 1.2 * std::sqrt(n_max + 1.0));
    double rp = rx / frame.z0();
    double lbar = frame.lambda_bar();
    double integral = oam::phasespace::phase_space_integral(
        [&](const oam::phasespace::PhaseSpacePoint& zeta) {
          return oam::phasespace::wigner_closed(a, zeta, frame) *
                 oam::phasespace::wigner_closed(b, zeta, frame);
        },
        rx, rp, 48 + 3 * n_max);
    integral *= (2.0 * kPi * lbar) * (2.0 * kPi * lbar);
    double residual = std::abs(closed - integral);
    bool pass = residual <= 1e-4;
    j["integral"] = integral;
    j["residual"] = residual;
    j["pass"] = pass;
    if (!pass) rc = 1;
  }
  emit(j, o.out);
  return rc;
}

struct AngmomOpts {
  std::string amps_path;
  double lambda = 0.0;
};

int run_angmom(const AngmomOpts& o) {
  auto set = oam::io::load_amplitude_set(o.amps_path);
  const bool classical = set.kind() == oam::angmom::SetKind::classical;

  ordered_json j{
      {"kind", classical ? "classical" : "one_photon"},
      {"weight", set.weight()},
      {"orbital_z", oam::angmom::orbital_z(set)},
      {"spin_z", oam::angmom::spin_z(set)},
  };
  if (classical) {
    j["paraxial_energy"] = oam::angmom::paraxial_energy(set);
    j["oam_per_energy"] = oam::angmom::oam_per_energy(set);
  }

  if (o.lambda > 0.0) {
    // Physical scale: the lowest carrier bin is assigned vacuum wavelength
    // lambda, fixing the wavenumber unit 2 pi / (lambda k0_min).
    constexpr double hbar = 1.054571817e-34;  // J s
    constexpr double c = 299792458.0;         // m / s
    double k0_min = set.entries().front().k0;
    for (const auto& e : set.entries()) k0_min = std::min(k0_min, e.k0);
    const double k_unit = 2.0 * kPi / (o.lambda * k0_min);  // rad/m per file unit
    ordered_json si{
        {"lambda_m", o.lambda},
        {"orbital_z_Js", oam::angmom::orbital_z(set) * hbar},
        {"spin_z_Js", oam::angmom::spin_z(set) * hbar},
        {"photon_energy_J", hbar * c * k_unit * k0_min},
    };
    if (classical) si["oam_per_energy_s"] = oam::angmom::oam_per_energy(set) / (c * k_unit);
    j["si"] = si;
  }

  emit(j, "");
  return 0;
}

struct VerifyOpts {
  std::string suite = "all";
  unsigned long long seed = 0;
  double tol = 1.0;
  double w0 = 1.0, k0 = 2.0;
};

int run_verify(const VerifyOpts& o) {
  auto frame = checked_frame(o.w0, o.k0);
  auto report = oam::verify::run_suite(o.suite, o.seed, o.tol, frame);
  std::cout << oam::verify::report_json(report);
  return report.pass ? 0 : 1;
}

void add_frame_options(CLI::App* sub, double& w0, double& k0) {
  sub->add_option("--w0", w0, "beam waist")->capture_default_str();
  sub->add_option("--k0", k0, "carrier wavenumber")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structured-light phase-space toolkit: Laguerre-Gauss mode spheres, "
               "their rotations, Wigner functions, and angular-momentum bookkeeping"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "oamphase 0.1.0");

  bool degrees = false;
  app.add_flag("--deg", degrees, "interpret angle options as degrees (default: radians)");

  RenderOpts render;
  auto* sub_render = app.add_subcommand("render", "write intensity and phase images of a sphere state");
  add_frame_options(sub_render, render.cfg.w0, render.cfg.k0);
  sub_render->add_option("--l", render.cfg.l, "pole topological charge")->capture_default_str();
  sub_render->add_option("--p", render.cfg.p, "pole radial index")->capture_default_str();
  sub_render->add_option("--theta", render.cfg.theta, "polar sphere angle")->capture_default_str();
  sub_render->add_option("--phi", render.cfg.phi, "azimuthal sphere angle")->capture_default_str();
  sub_render->add_option("--z", render.z, "propagation distance of the sampled plane")->capture_default_str();
  sub_render->add_option("--grid", render.grid_n, "pixels per axis")->capture_default_str();
  sub_render->add_option("--extent", render.extent, "grid half-width (default: auto)");
  sub_render->add_option("--out", render.cfg.out_prefix, "output path prefix")->capture_default_str();
  sub_render->add_option("--config", render.config_path, "JSON run configuration (flags override)");

  RotateOpts rot;
  auto* sub_rotate = app.add_subcommand("rotate", "print the mode coefficients of a sphere state");
  add_frame_options(sub_rotate, rot.w0, rot.k0);
  sub_rotate->add_option("--l", rot.l, "pole topological charge")->capture_default_str();
  sub_rotate->add_option("--p", rot.p, "pole radial index")->capture_default_str();
  sub_rotate->add_option("--theta", rot.theta, "polar sphere angle")->capture_default_str();
  sub_rotate->add_option("--phi", rot.phi, "azimuthal sphere angle")->capture_default_str();
  sub_rotate->add_option("--out", rot.out, "write JSON here instead of stdout");

  WignerOpts wig;
  auto* sub_wigner = app.add_subcommand("wigner", "tabulate a Wigner-function section as CSV and PGM");
  add_frame_options(sub_wigner, wig.w0, wig.k0);
  sub_wigner->add_option("--l", wig.l, "pole topological charge")->capture_default_str();
  sub_wigner->add_option("--p", wig.p, "pole radial index")->capture_default_str();
  sub_wigner->add_option("--theta", wig.theta, "polar sphere angle")->capture_default_str();
  sub_wigner->add_option("--phi", wig.phi, "azimuthal sphere angle")->capture_default_str();
  sub_wigner->add_option("--z", wig.z, "propagation distance of the sampled plane")->capture_default_str();
  sub_wigner->add_option("--axes", wig.axes, "section plane")
      ->check(CLI::IsMember({"xpx", "xy", "pxpy"}))
      ->capture_default_str();
  sub_wigner->add_option("--grid", wig.grid_n, "samples per axis")->capture_default_str();
  sub_wigner->add_option("--out", wig.out, "output path prefix")->capture_default_str();

  OverlapOpts ov;
  auto* sub_overlap = app.add_subcommand("overlap", "overlap probability between two sphere states");
  add_frame_options(sub_overlap, ov.w0, ov.k0);
  sub_overlap->add_option("--l", ov.l, "first pole charge")->capture_default_str();
  sub_overlap->add_option("--p", ov.p, "first pole radial index")->capture_default_str();
  sub_overlap->add_option("--l2", ov.l2, "second pole charge (default: same as --l)");
  sub_overlap->add_option("--p2", ov.p2, "second pole radial index (default: same as --p)");
  sub_overlap->add_option("--theta1", ov.theta1, "first polar angle")->capture_default_str();
  sub_overlap->add_option("--phi1", ov.phi1, "first azimuthal angle")->capture_default_str();
  sub_overlap->add_option("--theta2", ov.theta2, "second polar angle")->capture_default_str();
  sub_overlap->add_option("--phi2", ov.phi2, "second azimuthal angle")->capture_default_str();
  sub_overlap->add_option("--sweep", ov.sweep, "sweep theta2 over [0, pi] in this many steps, write CSV");
  sub_overlap->add_flag("--check", ov.check, "cross-check against the phase-space integral");
  sub_overlap->add_option("--out", ov.out, "output path (JSON, or CSV with --sweep)");

  AngmomOpts am;
  auto* sub_angmom = app.add_subcommand("angmom", "angular-momentum accounting for an amplitude set");
  sub_angmom->add_option("--amps", am.amps_path, "amplitude-set JSON file")->required();
  sub_angmom->add_option("--lambda", am.lambda,
                         "vacuum wavelength in meters of the lowest carrier bin; adds SI outputs");

  VerifyOpts ver;
  auto* sub_verify = app.add_subcommand("verify", "run a named invariant suite and report JSON");
  sub_verify->add_option("--suite", ver.suite, "all, modes, symplectic, wigner, overlap, or angmom")
      ->capture_default_str();
  sub_verify->add_option("--seed", ver.seed, "random-draw seed")->capture_default_str();
  sub_verify->add_option("--tol", ver.tol, "tolerance scale factor")->capture_default_str();
  add_frame_options(sub_verify, ver.w0, ver.k0);

  int rc = 0;
  sub_render->callback([&] { rc = run_render(sub_render, render, degrees ? kPi / 180.0 : 1.0); });
  sub_rotate->callback([&] { rc = run_rotate(rot, degrees ? kPi / 180.0 : 1.0); });
  sub_wigner->callback([&] { rc = run_wigner(wig, degrees ? kPi / 180.0 : 1.0); });
  sub_overlap->callback([&] { rc = run_overlap(sub_overlap, ov, degrees ? kPi / 180.0 : 1.0); });
  sub_angmom->callback([&] { rc = run_angmom(am); });
  sub_verify->callback([&] { rc = run_verify(ver); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const oam::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const oam::ConsistencyError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return rc;
}
