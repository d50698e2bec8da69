// qhj: spectra, momentum-function tabulation, contour-integrated action
// variables, node reports and the verification sweep for the oscillator
// and hydrogen models.  All momentum-function output is in adimensional
// variables with hbar = 1.
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qhj/contour.hpp"
#include "qhj/figure.hpp"
#include "qhj/riccati.hpp"
#include "qhj/systems.hpp"

using json = nlohmann::ordered_json;
using namespace qhj;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kNoConvergence = 2, kVerifyFailed = 3 };

struct RunConfig {
  std::string system = "ho";
  std::vector<int> n;
  int ell = 0;
  int m = 0;
  bool ell_set = false;
  std::vector<double> omega = {1.0, 1.0, 1.0};
  std::string coordinate;  // xi | phi | theta | radial (momentum/nodes)
  std::string grid = "";
  std::string format = "csv";
  double tol = 1e-8;
  std::vector<double> contour;  // cx, cy, rx, ry
  int samples = 32;
  double kappa_shift = 0.0;
  int nmax = 0;
  std::string output;
};

std::string fmt(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  char colon1 = 0, colon2 = 0;
  std::istringstream in(text);
  if (!(in >> g.start >> colon1 >> g.end >> colon2 >> g.points) || colon1 != ':' ||
      colon2 != ':' || !in.eof())
    throw CLI::ValidationError("--grid", "expected start:end:points");
  if (g.points < 2) throw CLI::ValidationError("--grid", "needs at least 2 points");
  if (!(g.start < g.end)) throw CLI::ValidationError("--grid", "start must be below end");
  return g;
}

std::ostream& open_output(const RunConfig& cfg, std::ofstream& file) {
  if (cfg.output.empty()) return std::cout;
  file.open(cfg.output);
  if (!file) throw CLI::ValidationError("--output", "cannot open " + cfg.output);
  return file;
}

void require_concrete_system(const RunConfig& cfg) {
  if (cfg.system != "ho" && cfg.system != "hydrogen")
    throw CLI::ValidationError("--system", "expected ho or hydrogen");
}

HOQuantumNumbers ho_numbers(const RunConfig& cfg) {
  HOQuantumNumbers q;
  if (cfg.n.size() == 1)
    q.n = {cfg.n[0], 0, 0};
  else if (cfg.n.size() == 3)
    q.n = {cfg.n[0], cfg.n[1], cfg.n[2]};
  else
    throw CLI::ValidationError("--n", "oscillator takes one value or a triple");
  if (cfg.omega.size() != 3) throw CLI::ValidationError("--omega", "needs three values");
  q.omega = {cfg.omega[0], cfg.omega[1], cfg.omega[2]};
  validate(q);
  return q;
}

HydrogenQuantumNumbers hydrogen_numbers(const RunConfig& cfg) {
  HydrogenQuantumNumbers q;
  if (cfg.n.size() != 1) throw CLI::ValidationError("--n", "hydrogen takes a single n");
  q.n = cfg.n[0];
  q.ell = cfg.ell;
  q.m = cfg.m;
  validate(q);
  return q;
}

std::optional<Contour> explicit_contour(const RunConfig& cfg) {
  if (cfg.contour.empty()) return std::nullopt;
  if (cfg.contour.size() != 4)
    throw CLI::ValidationError("--contour", "expected cx,cy,rx,ry");
  Contour c{{cfg.contour[0], cfg.contour[1]}, cfg.contour[2], cfg.contour[3], cfg.samples};
  return c;
}

// ---- spectrum --------------------------------------------------------------

int cmd_spectrum(const RunConfig& cfg) {
  require_concrete_system(cfg);
  std::ofstream file;
  std::ostream& out = open_output(cfg, file);
  Spectrum s;
  json meta;
  if (cfg.system == "ho") {
    const HOQuantumNumbers q = ho_numbers(cfg);
    s = ho_spectrum(q);
    meta = {{"system", "ho"},
            {"n", {q.n[0], q.n[1], q.n[2]}},
            {"omega", {q.omega[0], q.omega[1], q.omega[2]}}};
  } else {
    const HydrogenQuantumNumbers q = hydrogen_numbers(cfg);
    s = hydrogen_spectrum(q);
    meta = {{"system", "hydrogen"}, {"n", q.n}, {"ell", q.ell}, {"m", q.m}};
  }
  meta["units"] = "hbar=1";
  if (cfg.format == "json") {
    json j{{"metadata", meta}, {"energy", s.energy}};
    for (const auto& [name, v] : s.actions) j["actions"][name] = v;
    for (const auto& [name, v] : s.angles) j["angles"][name] = v;
    out << j.dump(2) << "\n";
  } else {
    out << "quantity,coordinate,value\n";
    out << "energy,," << fmt(s.energy) << "\n";
    for (const auto& [name, v] : s.actions) out << "action," << name << "," << fmt(v) << "\n";
    for (const auto& [name, v] : s.angles) out << "angle," << name << "," << fmt(v) << "\n";
  }
  return kOk;
}

// ---- momentum --------------------------------------------------------------

struct CoordinateModel {
  std::string name;
  MomentumFunction p;
  WaveFunction u;
};

CoordinateModel pick_coordinate(const RunConfig& cfg) {
  if (cfg.system == "ho") {
    if (cfg.n.size() != 1)
      throw CLI::ValidationError("--n", "momentum/nodes tabulate one axis; give a single n");
    const int n = cfg.n[0];
    if (n < 0) throw CLI::ValidationError("--n", "n must be >= 0");
    return {"xi", ho_momentum(n), ho_wave(n)};
  }
  const HydrogenQuantumNumbers q = hydrogen_numbers(cfg);
  const std::string coord = cfg.coordinate.empty() ? "radial" : cfg.coordinate;
  if (coord == "phi") return {"phi", hydrogen_p_phi(q.m), hydrogen_wave_phi(q.m)};
  if (coord == "theta") return {"theta", hydrogen_p_x(q.ell, q.m), hydrogen_wave_x(q.ell, q.m)};
  if (coord == "radial" || coord == "rho")
    return {"radial", hydrogen_p_rho(q.n, q.ell), hydrogen_wave_rho(q.n, q.ell)};
  throw CLI::ValidationError("--coordinate", "expected phi, theta or radial");
}

int cmd_momentum(const RunConfig& cfg) {
  require_concrete_system(cfg);
  if (cfg.grid.empty()) throw CLI::ValidationError("--grid", "momentum needs a grid");
  const GridSpec grid = parse_grid(cfg.grid);
  const CoordinateModel model = pick_coordinate(cfg);
  std::vector<FigureRow> rows;
  try {
    rows = momentum_figure(model.p, model.u, grid);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("--grid", e.what());
  }
  std::ofstream file;
  std::ostream& out = open_output(cfg, file);
  if (cfg.format == "json") {
    json meta{{"system", cfg.system}, {"coordinate", model.name}, {"units", "hbar=1"}};
    if (cfg.system == "ho")
      meta["n"] = cfg.n[0];
    else
      meta["n"] = cfg.n[0], meta["ell"] = cfg.ell, meta["m"] = cfg.m;
    json jrows = json::array();
    for (const FigureRow& r : rows) {
      json row{{"q", r.q}};
      row["re_p"] = r.re_p ? json(*r.re_p) : json(nullptr);
      row["im_p"] = r.im_p ? json(*r.im_p) : json(nullptr);
      row["u"] = r.u;
      row["is_near_pole"] = r.is_near_pole;
      jrows.push_back(row);
    }
    out << json{{"metadata", meta}, {"rows", jrows}}.dump(2) << "\n";
  } else {
    out << "q,re_p,im_p,u,is_near_pole\n";
    for (const FigureRow& r : rows) {
      out << fmt(r.q) << "," << (r.re_p ? fmt(*r.re_p) : "") << ","
          << (r.im_p ? fmt(*r.im_p) : "") << "," << fmt(r.u) << ","
          << (r.is_near_pole ? "true" : "false") << "\n";
    }
  }
  return kOk;
}

// ---- action ----------------------------------------------------------------

int cmd_action(const RunConfig& cfg) {
  require_concrete_system(cfg);
  std::vector<std::pair<std::string, ActionResult>> results;
  const std::optional<Contour> user_contour = explicit_contour(cfg);
  auto run = [&](const std::string& name, const MomentumFunction& p) {
    results.emplace_back(name, user_contour ? action_variable(p, *user_contour, cfg.tol)
                                            : action_variable(p, cfg.tol));
  };
  if (cfg.system == "ho") {
    const HOQuantumNumbers q = ho_numbers(cfg);
    const char* names[] = {"x", "y", "z"};
    const size_t axes = cfg.n.size() == 1 ? 1 : 3;
    for (size_t ax = 0; ax < axes; ++ax) run(names[ax], ho_momentum(q.n[ax]));
  } else {
    const HydrogenQuantumNumbers q = hydrogen_numbers(cfg);
    run("phi", hydrogen_p_phi(q.m));
    run("theta", hydrogen_p_x(q.ell, q.m));
    run("r", hydrogen_p_rho(q.n, q.ell));
  }
  bool all_converged = true;
  for (const auto& [name, r] : results) all_converged = all_converged && r.converged;

  std::ofstream file;
  std::ostream& out = open_output(cfg, file);
  if (cfg.format == "json" || !all_converged) {
    json j;
    j["units"] = "hbar=1";
    j["tolerance"] = cfg.tol;
    for (const auto& [name, r] : results) {
      j["results"][name] = {{"J_over_hbar_re", r.J_over_hbar.real()},
                            {"J_over_hbar_im", r.J_over_hbar.imag()},
                            {"target", r.target},
                            {"deviation", r.deviation},
                            {"samples_used", r.samples_used},
                            {"converged", r.converged}};
    }
    if (!all_converged) j["error"] = "quadrature failed to reach the requested tolerance";
    out << j.dump(2) << "\n";
  } else {
    out << "coordinate,J_over_hbar,J_over_hbar_im,target,deviation,samples_used,converged\n";
    for (const auto& [name, r] : results)
      out << name << "," << fmt(r.J_over_hbar.real()) << "," << fmt(r.J_over_hbar.imag())
          << "," << r.target << "," << fmt(r.deviation) << "," << r.samples_used << ","
          << (r.converged ? "true" : "false") << "\n";
  }
  return all_converged ? kOk : kNoConvergence;
}

// ---- nodes -----------------------------------------------------------------

int cmd_nodes(const RunConfig& cfg) {
  require_concrete_system(cfg);
  std::vector<std::pair<std::string, NodeReport>> reports;
  if (cfg.system == "ho") {
    const HOQuantumNumbers q = ho_numbers(cfg);
    const char* names[] = {"x", "y", "z"};
    const size_t axes = cfg.n.size() == 1 ? 1 : 3;
    for (size_t ax = 0; ax < axes; ++ax)
      reports.emplace_back(names[ax], nodes_and_antinodes(ho_momentum(q.n[ax])));
  } else {
    const HydrogenQuantumNumbers q = hydrogen_numbers(cfg);
    reports.emplace_back("phi", nodes_and_antinodes(hydrogen_p_phi(q.m)));
    reports.emplace_back("theta", nodes_and_antinodes(hydrogen_p_x(q.ell, q.m)));
    reports.emplace_back("radial", nodes_and_antinodes(hydrogen_p_rho(q.n, q.ell)));
  }
  std::ofstream file;
  std::ostream& out = open_output(cfg, file);
  if (cfg.format == "json") {
    json j{{"units", "hbar=1"}};
    for (const auto& [name, r] : reports) {
      j["coordinates"][name] = {{"nodes", r.nodes},
                                {"antinodes", r.antinodes},
                                {"node_count", r.nodes.size()},
                                {"antinode_count", r.antinodes.size()},
                                {"counts_consistent", r.counts_consistent}};
    }
    out << j.dump(2) << "\n";
  } else {
    out << "coordinate,kind,position\n";
    for (const auto& [name, r] : reports) {
      for (double v : r.nodes) out << name << ",node," << fmt(v) << "\n";
      for (double v : r.antinodes) out << name << ",antinode," << fmt(v) << "\n";
    }
  }
  return kOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyCheck {
  std::string name;
  bool pass = true;
  double worst = 0.0;
};

void sweep_hydrogen(int nmax, const std::function<void(const MomentumFunction&)>& fn) {
  for (int n = 1; n <= nmax; ++n)
    for (int ell = 0; ell < n; ++ell) {
      fn(hydrogen_p_rho(n, ell));
      for (int m = -ell; m <= ell; ++m) {
        fn(hydrogen_p_x(ell, m));
        fn(hydrogen_p_phi(m));
      }
    }
}

std::vector<double> pole_avoiding_grid(const MomentumFunction& p, double lo, double hi) {
  std::vector<double> grid;
  for (int i = 0; i < 81; ++i) {
    const double q = lo + (hi - lo) * i / 80.0;
    bool ok = true;
    for (const Pole& pole : p.poles)
      if (std::abs(Complex(q, 0.0) - pole.location) < 0.05) ok = false;
    if (ok) grid.push_back(q);
  }
  return grid;
}

RiccatiCoefficients shifted_coefficients(const MomentumFunction& p, double shift) {
  if (p.label == "xi") return ho_riccati(2.0 * p.action_target + 1.0 + shift);
  if (p.label == "phi")
    return hydrogen_phi_riccati(double(p.action_target) * p.action_target + shift);
  if (p.label == "x") {
    const int ell = p.action_target;
    const int m_abs = ell - int(std::count_if(p.poles.begin(), p.poles.end(), [](const Pole& q) {
                        return q.kind == PoleKind::Node;
                      }));
    return hydrogen_x_riccati(double(ell) * (ell + 1) + shift, m_abs);
  }
  // rho: action target is n-1
  const int n = p.action_target + 1;
  int ell = 0;
  for (const Pole& pole : p.poles)
    if (pole.kind == PoleKind::Origin) ell = int(std::round(std::abs(pole.residue)));
  return hydrogen_rho_riccati(double(n) + shift, ell);
}

int cmd_verify(const RunConfig& cfg) {
  const bool do_ho = cfg.system == "ho" || cfg.system == "all";
  const bool do_hy = cfg.system == "hydrogen" || cfg.system == "all";
  const int ho_nmax = cfg.nmax > 0 ? cfg.nmax : 10;
  const int hy_nmax = cfg.nmax > 0 ? cfg.nmax : 6;

  std::vector<MomentumFunction> models;
  if (do_ho)
    for (int n = 0; n <= ho_nmax; ++n) models.push_back(ho_momentum(n));
  if (do_hy) sweep_hydrogen(hy_nmax, [&](const MomentumFunction& p) { models.push_back(p); });

  std::vector<VerifyCheck> checks;

  {
    VerifyCheck c{"riccati residual < 1e-7" +
                  std::string(cfg.kappa_shift != 0.0 ? " (kappa shifted)" : "")};
    for (const MomentumFunction& p : models) {
      double lo = -6.0, hi = 6.0;
      if (p.label == "x") lo = -0.97, hi = 0.97;
      if (p.label == "rho") lo = 0.2, hi = 25.0;
      if (p.label == "phi") lo = 0.0, hi = 6.0;
      const auto coeffs =
          cfg.kappa_shift != 0.0 ? shifted_coefficients(p, cfg.kappa_shift) : p.riccati;
      const double sup = riccati_residual(coeffs, p, pole_avoiding_grid(p, lo, hi)).sup_norm;
      c.worst = std::max(c.worst, sup);
      if (sup >= 1e-7) c.pass = false;
    }
    checks.push_back(c);
  }
  {
    VerifyCheck c{"oracle equivalence < 1e-9"};
    std::mt19937 rng(12345);
    for (const MomentumFunction& p : models) {
      if (p.identically_zero) continue;
      WaveFunction u;
      double lo = -6.0, hi = 6.0;
      if (p.label == "xi") u = ho_wave(p.action_target);
      if (p.label == "phi") u = hydrogen_wave_phi(p.action_target), lo = 0.0, hi = 6.28;
      if (p.label == "x") {
        const int ell = p.action_target;
        int interior = 0;
        for (const Pole& pole : p.poles) interior += pole.kind == PoleKind::Node;
        u = hydrogen_wave_x(ell, ell - interior);
        lo = -0.97, hi = 0.97;
      }
      if (p.label == "rho") {
        int ell = 0;
        for (const Pole& pole : p.poles)
          if (pole.kind == PoleKind::Origin) ell = int(std::round(std::abs(pole.residue)));
        u = hydrogen_wave_rho(p.action_target + 1, ell);
        lo = 0.1, hi = 30.0;
      }
      std::uniform_real_distribution<double> dist(lo, hi);
      int done = 0;
      while (done < 200) {
        const double q = dist(rng);
        bool ok = true;
        for (const Pole& pole : p.poles)
          if (std::abs(Complex(q, 0.0) - pole.location) < 0.05) ok = false;
        if (!ok) continue;
        ++done;
        const Complex closed = p.evaluate(Complex(q, 0.0));
        const Complex oracle = log_derivative_oracle(u.value, u.derivative, p.riccati.R, q);
        const double err = std::abs(closed - oracle) / std::max(1.0, std::abs(closed));
        c.worst = std::max(c.worst, err);
        if (err > 1e-9) c.pass = false;
      }
    }
    checks.push_back(c);
  }
  {
    VerifyCheck c{"residue law (declared vs integrated) < 1e-9"};
    for (const MomentumFunction& p : models) {
      for (const Pole& pole : p.poles) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const Pole& other : p.poles)
          if (&other != &pole)
            nearest = std::min(nearest, std::abs(other.location - pole.location));
        const double radius = std::min(0.25, 0.33 * nearest);
        const Complex integrated = residue_at(p.evaluate, pole.location, radius);
        const double err = std::abs(integrated - pole.residue);
        c.worst = std::max(c.worst, err);
        if (err > 1e-9) c.pass = false;
      }
    }
    checks.push_back(c);
  }
  {
    VerifyCheck c{"action quantization deviation < tol"};
    for (const MomentumFunction& p : models) {
      const ActionResult r = action_variable(p, cfg.tol);
      c.worst = std::max(c.worst, r.deviation);
      if (!r.converged) c.pass = false;
    }
    checks.push_back(c);
  }
  {
    VerifyCheck c{"node/anti-node counts consistent"};
    for (const MomentumFunction& p : models) {
      const NodeReport r = nodes_and_antinodes(p);
      if (!r.counts_consistent) c.pass = false;
    }
    checks.push_back(c);
  }

  bool all = true;
  for (const VerifyCheck& c : checks) all = all && c.pass;

  std::ofstream file;
  std::ostream& out = open_output(cfg, file);
  if (cfg.format == "json") {
    json j{{"models_checked", models.size()}, {"all_pass", all}};
    for (const VerifyCheck& c : checks)
      j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"worst", c.worst}});
    out << j.dump(2) << "\n";
  } else {
    for (const VerifyCheck& c : checks)
      out << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (worst " << fmt(c.worst)
          << ")\n";
    out << (all ? "PASS" : "FAIL") << "  " << models.size() << " momentum functions checked\n";
  }
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum Hamilton-Jacobi toolkit: momentum functions, action variables and nodes"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&cfg](CLI::App* sub, bool with_grid) {
    sub->add_option("--system", cfg.system, "ho or hydrogen")
        ->check(CLI::IsMember({"ho", "hydrogen", "all"}));
    sub->add_option("--n", cfg.n, "quantum number(s); oscillator accepts a triple")
        ->delimiter(',');
    sub->add_option("--ell", cfg.ell, "orbital quantum number (hydrogen)");
    sub->add_option("--m", cfg.m, "magnetic quantum number (hydrogen)");
    sub->add_option("--omega", cfg.omega, "oscillator frequencies")->delimiter(',');
    if (with_grid) sub->add_option("--grid", cfg.grid, "tabulation grid start:end:points");
    sub->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--tol", cfg.tol, "quantization tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--contour", cfg.contour, "explicit contour cx,cy,rx,ry")->delimiter(',');
    sub->add_option("--samples", cfg.samples, "initial quadrature samples (power of two)");
    sub->add_option("--output", cfg.output, "write to file instead of stdout");
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "energy, action and angle variables");
  add_common(spectrum, false);
  CLI::App* momentum = app.add_subcommand("momentum", "tabulate p and u on a grid");
  add_common(momentum, true);
  momentum->add_option("--coordinate", cfg.coordinate, "phi, theta or radial (hydrogen)");
  CLI::App* action = app.add_subcommand("action", "contour-integrated action variables");
  add_common(action, false);
  CLI::App* nodes = app.add_subcommand("nodes", "node and anti-node report");
  add_common(nodes, false);
  nodes->add_option("--coordinate", cfg.coordinate, "phi, theta or radial (hydrogen)");
  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
  add_common(verify, false);
  verify->add_option("--nmax", cfg.nmax, "sweep bound (default ho 10, hydrogen 6)");
  verify->add_option("--kappa-shift", cfg.kappa_shift,
                     "detune the quantized Riccati parameter (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(cfg);
    if (momentum->parsed()) return cmd_momentum(cfg);
    if (action->parsed()) return cmd_action(cfg);
    if (nodes->parsed()) return cmd_nodes(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    json diag{{"error", e.what()}};
    std::cerr << diag.dump(2) << "\n";
    return kNoConvergence;
  }
  return kUsage;
}
