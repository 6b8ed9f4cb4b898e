// command-line front end: single solves, parameter scans, closed-form oracle
// queries, spectroscopic labels, wavefunction profiles, and assumption checks.
// Exit codes: 0 success, 1 usage/validation error, 2 non-convergence or a
// failed check. All output is deterministic: identical invocations produce
// identical bytes.
#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "zgkn/omega_system.hpp"
#include "zgkn/oracles.hpp"
#include "zgkn/params.hpp"
#include "zgkn/solver.hpp"
#include "zgkn/theta_system.hpp"
#include "zgkn/wavefunction.hpp"

namespace {

using ojson = nlohmann::ordered_json;
using namespace zgkn;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_failed = 2;

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

int write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::fputs(text.c_str(), stdout);
    return exit_ok;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open output path: " << path << "\n";
    return exit_usage;
  }
  f << text;
  if (!f) {
    std::cerr << "write failed: " << path << "\n";
    return exit_usage;
  }
  return exit_ok;
}

// bounded worker pool; results are stored by job index by the body, so the
// emitted order never depends on scheduling. ZGKN_WORKERS overrides the size.
template <typename Fn>
void run_pool(std::size_t jobs, Fn&& body) {
  long w = 0;
  if (const char* env = std::getenv("ZGKN_WORKERS"); env && *env) w = std::strtol(env, nullptr, 10);
  if (w <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    w = hw ? std::min<long>(hw, 8) : 1;
  }
  w = std::min(w, static_cast<long>(jobs));
  if (w <= 1) {
    for (std::size_t i = 0; i < jobs; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (long t = 0; t < w; ++t)
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < jobs; i = next++) body(i);
    });
  for (auto& th : threads) th.join();
}

ojson bound_state_record(const BoundState& bs) {
  ojson j;
  j["converged"] = bs.converged;
  j["E"] = bs.E;
  j["lambda"] = bs.lambda;
  j["a"] = bs.params.a;
  j["gamma"] = bs.params.gamma;
  j["kappa"] = bs.params.kappa;
  j["n_theta"] = bs.target.n_theta;
  j["n_omega"] = bs.target.n_omega;
  j["label"] = bs.label.text;
  j["iterations"] = bs.iterations;
  j["residual_E"] = bs.residual_E;
  j["residual_lambda"] = bs.residual_lambda;
  j["contraction_ratio"] = bs.contraction_ratio;
  j["in_guaranteed_region"] = bs.in_guaranteed_region;
  if (!bs.error.empty()) j["error"] = bs.error;
  return j;
}

struct SolveFlags {
  double a = 0.1, gamma = 0, Z = 0, kappa = 0.5;
  int n_theta = 0, n_omega = 0;
  double tol = 1e-8;
  int max_iter = 40;
  std::string out;
  std::string config; // consumed before parsing; see merge_config_args
  bool gamma_given = false, z_given = false;
};

// plain key=value config support: the file's pairs become trailing flags for
// the active subcommand unless the command line already pins them. {gamma, Z}
// and {state, kappa/ntheta/nomega} act as override groups, so an explicit flag
// retargets what the file fixed instead of colliding with it.
bool merge_config_args(std::vector<std::string>& args, std::string& err) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& t = args[i];
    if (t == "--config" && i + 1 < args.size())
      path = args[i + 1];
    else if (t.rfind("--config=", 0) == 0)
      path = t.substr(9);
  }
  if (path.empty()) return true;
  std::ifstream f(path);
  if (!f) {
    err = "cannot read config file: " + path;
    return false;
  }

  auto trim = [](const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };

  std::vector<std::string> given{"config"};
  for (const std::string& t : args)
    if (t.rfind("--", 0) == 0) {
      std::string body = t.substr(2);
      std::size_t eq = body.find('=');
      given.push_back(eq == std::string::npos ? body : body.substr(0, eq));
    }
  auto has = [&given](const char* k) {
    return std::find(given.begin(), given.end(), k) != given.end();
  };
  if (has("gamma") || has("Z")) {
    given.emplace_back("gamma");
    given.emplace_back("Z");
  }
  if (has("state")) {
    given.emplace_back("kappa");
    given.emplace_back("ntheta");
    given.emplace_back("nomega");
  } else if (has("kappa") || has("ntheta") || has("nomega")) {
    given.emplace_back("state");
  }

  // later duplicate keys win, except 'state' which is repeatable and accumulates
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#' || s[0] == ';') continue;
    std::size_t eq = s.find('=');
    std::string key = eq == std::string::npos ? std::string() : trim(s.substr(0, eq));
    if (key.empty()) {
      err = path + ":" + std::to_string(lineno) + ": expected key=value";
      return false;
    }
    std::string value = trim(s.substr(eq + 1));
    if (key != "state") {
      auto it = std::find_if(entries.begin(), entries.end(),
                             [&key](const auto& p) { return p.first == key; });
      if (it != entries.end()) {
        it->second = value;
        continue;
      }
    }
    entries.emplace_back(key, value);
  }
  for (const auto& [key, value] : entries) {
    if (has(key.c_str())) continue;
    args.push_back("--" + key);
    args.push_back(value);
  }
  return true;
}

// resolve --gamma/--Z; returns false (usage error) when neither was supplied
bool resolve_coupling(const SolveFlags& f, double& gamma) {
  if (!f.gamma_given && !f.z_given) {
    std::cerr << "one of --gamma or --Z is required\n";
    return false;
  }
  gamma = f.z_given ? gamma_from_Z(f.Z) : f.gamma;
  return true;
}

void add_solve_flags(CLI::App* cmd, SolveFlags& f, bool require_core) {
  auto* a = cmd->add_option("--a", f.a, "ring radius");
  auto* g = cmd->add_option("--gamma", f.gamma, "coupling constant, negative");
  auto* z = cmd->add_option("--Z", f.Z, "charge number; sets gamma = -Z*alpha");
  g->excludes(z);
  z->excludes(g);
  auto* k = cmd->add_option("--kappa", f.kappa, "half-odd-integer angular projection");
  auto* nt = cmd->add_option("--ntheta", f.n_theta, "angular winding index");
  auto* no = cmd->add_option("--nomega", f.n_omega, "radial winding index");
  if (require_core) {
    a->required();
    k->required();
    nt->required();
    no->required();
  }
  cmd->add_option("--tol", f.tol, "fixed-point tolerance");
  cmd->add_option("--max-iter", f.max_iter, "alternating-iteration cap");
  cmd->add_option("--out", f.out, "write output to this path instead of stdout");
  cmd->add_option("--config", f.config, "plain key=value file merged under explicit flags");
  cmd->callback([&f, g, z] {
    f.gamma_given = g->count() > 0;
    f.z_given = z->count() > 0;
  });
}

int run_solve(const SolveFlags& f) {
  double gamma = 0;
  if (!resolve_coupling(f, gamma)) return exit_usage;
  ModelParams p{f.a, gamma, f.kappa};
  WindingTarget t{f.n_theta, f.n_omega};
  ValidationReport rep = validate(p, t);
  if (!rep.accepted) {
    std::cerr << "invalid parameters: " << rep.reason << "\n";
    return exit_usage;
  }
  if (!rep.in_guaranteed_region) std::cerr << "note: " << rep.reason << "\n";
  BoundState bs = solve_pair(p, t, f.tol, f.max_iter);
  int rc = write_text(f.out, bound_state_record(bs).dump(2) + "\n");
  if (rc != exit_ok) return rc;
  return bs.converged ? exit_ok : exit_failed;
}

struct ScanFlags {
  SolveFlags base;
  std::string sweep;
  double from = 0, to = 0;
  int steps = 0;
  std::vector<std::string> states;
  std::string format = "csv";
};

struct ScanRow {
  double sweep_value = 0;
  double E = 0, lambda = 0;
  bool converged = false;
  std::string label;
};

int run_scan(const ScanFlags& f, bool a_given, bool target_flags_given) {
  if (f.sweep != "a" && f.sweep != "gamma" && f.sweep != "Z") {
    std::cerr << "--sweep must be one of: a, gamma, Z\n";
    return exit_usage;
  }
  if (f.steps < 2) {
    std::cerr << "--steps must be at least 2\n";
    return exit_usage;
  }
  if (f.format != "csv" && f.format != "json") {
    std::cerr << "--format must be csv or json\n";
    return exit_usage;
  }
  if (f.sweep == "a" && a_given) {
    std::cerr << "--a conflicts with --sweep a\n";
    return exit_usage;
  }
  if ((f.sweep == "gamma" || f.sweep == "Z") && (f.base.gamma_given || f.base.z_given)) {
    std::cerr << "--gamma/--Z conflict with sweeping the coupling\n";
    return exit_usage;
  }
  if (!f.states.empty() && target_flags_given) {
    std::cerr << "--state conflicts with --kappa/--ntheta/--nomega\n";
    return exit_usage;
  }

  ModelParams base{f.base.a, -0.3, f.base.kappa};
  if (f.sweep == "a") {
    base.a = 0.05; // placeholder, overwritten per row
    if (!resolve_coupling(f.base, base.gamma)) return exit_usage;
  }

  struct Target {
    WindingTarget t;
    double kappa;
    std::string label;
  };
  std::vector<Target> targets;
  auto push_target = [&targets](double kappa, int nt, int no) -> bool {
    Target tg{{nt, no}, kappa, ""};
    try {
      tg.label = spectroscopic_label(tg.t, kappa).text;
    } catch (const std::exception& e) {
      std::cerr << "invalid state (kappa=" << kappa << ", ntheta=" << nt << ", nomega=" << no
                << "): " << e.what() << "\n";
      return false;
    }
    targets.push_back(tg);
    return true;
  };
  if (f.states.empty()) {
    if (!push_target(f.base.kappa, f.base.n_theta, f.base.n_omega)) return exit_usage;
  } else {
    for (const std::string& s : f.states) {
      double kappa = 0;
      int nt = 0, no = 0;
      if (std::sscanf(s.c_str(), "%lf:%d:%d", &kappa, &nt, &no) != 3) {
        std::cerr << "bad --state '" << s << "': expected kappa:ntheta:nomega\n";
        return exit_usage;
      }
      if (!push_target(kappa, nt, no)) return exit_usage;
    }
  }

  const std::size_t n_rows = static_cast<std::size_t>(f.steps) * targets.size();
  std::vector<ScanRow> rows(n_rows);
  run_pool(n_rows, [&](std::size_t j) {
    const std::size_t i = j / targets.size();
    const Target& tg = targets[j % targets.size()];
    double t = static_cast<double>(i) / (f.steps - 1);
    double v = f.from * (1.0 - t) + f.to * t; // exact at both endpoints
    ModelParams p = base;
    p.kappa = tg.kappa;
    if (f.sweep == "a")
      p.a = v;
    else if (f.sweep == "gamma")
      p.gamma = v;
    else
      p.gamma = gamma_from_Z(v);
    ScanRow& r = rows[j];
    r.sweep_value = v;
    r.label = tg.label;
    try {
      if (!validate(p, tg.t).accepted) return; // row stays converged=false
      BoundState bs = solve_pair(p, tg.t, f.base.tol, f.base.max_iter);
      r.converged = bs.converged;
      r.E = bs.E;
      r.lambda = bs.lambda;
    } catch (const std::exception&) {
      r.converged = false;
    }
  });

  std::string text;
  if (f.format == "csv") {
    text = "sweep_value,E,lambda,converged,label\n";
    for (const ScanRow& r : rows) {
      text += fmt12(r.sweep_value);
      text += ',';
      text += fmt12(r.E);
      text += ',';
      text += fmt12(r.lambda);
      text += ',';
      text += r.converged ? "true" : "false";
      text += ',';
      text += csv_field(r.label);
      text += '\n';
    }
  } else {
    for (const ScanRow& r : rows) {
      ojson j;
      j["sweep_value"] = r.sweep_value;
      j["E"] = r.E;
      j["lambda"] = r.lambda;
      j["converged"] = r.converged;
      j["label"] = r.label;
      text += j.dump() + "\n";
    }
  }
  int rc = write_text(f.base.out, text);
  if (rc != exit_ok) return rc;
  bool any = std::any_of(rows.begin(), rows.end(), [](const ScanRow& r) { return r.converged; });
  return any ? exit_ok : exit_failed;
}

struct WaveFlags {
  SolveFlags base;
  int n_r = 801, n_ang = 801;
  double r_max = 0;
};

int run_wavefunction(const WaveFlags& f) {
  double gamma = 0;
  if (!resolve_coupling(f.base, gamma)) return exit_usage;
  ModelParams p{f.base.a, gamma, f.base.kappa};
  WindingTarget t{f.base.n_theta, f.base.n_omega};
  ValidationReport rep = validate(p, t);
  if (!rep.accepted) {
    std::cerr << "invalid parameters: " << rep.reason << "\n";
    return exit_usage;
  }
  if (!rep.in_guaranteed_region) std::cerr << "note: " << rep.reason << "\n";
  BoundState bs = solve_pair(p, t, f.base.tol, f.base.max_iter);
  if (!bs.converged) {
    std::cerr << "solve failed: " << bs.error << "\n";
    return exit_failed;
  }
  WaveProfile wp = wave_profile(bs, f.n_r, f.n_ang, f.r_max);
  if (!wp.ok) {
    std::cerr << "profile failed: " << wp.error << "\n";
    return exit_failed;
  }

  std::string text;
  text += "# E=" + fmt12(bs.E) + "\n";
  text += "# lambda=" + fmt12(bs.lambda) + "\n";
  text += "# kappa=" + fmt12(p.kappa) + "\n";
  text += "# gamma=" + fmt12(p.gamma) + "\n";
  text += "# a=" + fmt12(p.a) + "\n";
  text += "# n_theta=" + std::to_string(t.n_theta) + "\n";
  text += "# n_omega=" + std::to_string(t.n_omega) + "\n";
  text += "# label=" + bs.label.text + "\n";
  // normalization constant divided out of the raw amplitude product R^2 S^2
  text += "# norm=" + fmt12(wp.radial.norm * wp.angular.norm) + "\n";
  text += "# peak_r=" + fmt12(wp.peak_r) + "\n";
  text += "# peak_density=" + fmt12(wp.peak_density) + "\n";
  text += "r,R,Omega,theta,S,Theta,density\n";
  const std::size_t nr = wp.radial.r.size(), na = wp.angular.theta.size();
  const std::size_t n = std::max(nr, na);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < nr) {
      text += fmt12(wp.radial.r[i]);
      text += ',';
      text += fmt12(wp.radial.amp[i]);
      text += ',';
      text += fmt12(wp.radial.phase[i]);
      text += ',';
    } else {
      text += ",,,";
    }
    if (i < na) {
      text += fmt12(wp.angular.theta[i]);
      text += ',';
      text += fmt12(wp.angular.amp[i]);
      text += ',';
      text += fmt12(wp.angular.phase[i]);
      text += ',';
    } else {
      text += ",,,";
    }
    if (i < nr) text += fmt12(wp.density[i]);
    text += '\n';
  }
  return write_text(f.base.out, text);
}

ojson assumption_json(const AssumptionReport& r) {
  ojson j;
  j["axis_speed_ok"] = r.axis_speed_ok;
  j["boundary_equilibria_ok"] = r.boundary_equilibria_ok;
  j["domain_ordering_ok"] = r.domain_ordering_ok;
  j["parameter_monotone_ok"] = r.parameter_monotone_ok;
  j["all_ok"] = r.all_ok;
  j["note"] = r.heteroclinic_note;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

struct CheckFlags {
  SolveFlags base;
  double E = 0.5, lambda = -1.0;
  int grid = 201;
};

int run_check(const CheckFlags& f) {
  double gamma = -0.3;
  if (f.base.gamma_given || f.base.z_given) {
    if (!resolve_coupling(f.base, gamma)) return exit_usage;
  }
  ModelParams p{f.base.a, gamma, f.base.kappa};
  ValidationReport rep = validate(p, {0, 0});
  if (!rep.accepted) {
    std::cerr << "invalid parameters: " << rep.reason << "\n";
    return exit_usage;
  }
  if (!(f.E > 0 && f.E < 1)) {
    std::cerr << "--E must lie in (0, 1)\n";
    return exit_usage;
  }
  ThetaContext tctx{p, f.E};
  AssumptionReport angular = check_assumptions(theta_field(tctx), f.grid, f.grid);
  OmegaContext octx{p, f.lambda};
  AssumptionReport radial = check_assumptions(omega_field(octx), f.grid, f.grid);
  BarrierReport barrier = barrier_check(octx, f.E);

  ojson j;
  j["a"] = p.a;
  j["gamma"] = p.gamma;
  j["kappa"] = p.kappa;
  j["E"] = f.E;
  j["lambda"] = f.lambda;
  j["in_guaranteed_region"] = rep.in_guaranteed_region;
  j["angular"] = assumption_json(angular);
  j["radial"] = assumption_json(radial);
  ojson b;
  b["line_y"] = barrier.line_y;
  b["max_gdot"] = barrier.max_gdot;
  b["argmax_xi"] = barrier.argmax_xi;
  b["grid"] = barrier.grid;
  b["negative"] = barrier.negative;
  b["lambda_admissible"] = barrier.lambda_admissible;
  j["barrier"] = b;
  bool ok = angular.all_ok && radial.all_ok && barrier.negative;
  j["all_ok"] = ok;
  int rc = write_text(f.base.out, j.dump(2) + "\n");
  if (rc != exit_ok) return rc;
  return ok ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"bound states of the ring-singularity Dirac problem via cylinder connectors"};
  app.require_subcommand(1);

  SolveFlags solve_flags;
  auto* cmd_solve = app.add_subcommand("solve", "solve one (kappa, ntheta, nomega) bound state");
  add_solve_flags(cmd_solve, solve_flags, true);

  ScanFlags scan_flags;
  auto* cmd_scan = app.add_subcommand("scan", "sweep one parameter, one row per (value, state)");
  add_solve_flags(cmd_scan, scan_flags.base, false);
  cmd_scan->add_option("--sweep", scan_flags.sweep, "swept parameter: a, gamma, or Z")->required();
  cmd_scan->add_option("--from", scan_flags.from, "sweep start")->required();
  cmd_scan->add_option("--to", scan_flags.to, "sweep end")->required();
  cmd_scan->add_option("--steps", scan_flags.steps, "sample count, >= 2")->required();
  cmd_scan->add_option("--state", scan_flags.states,
                       "kappa:ntheta:nomega triple, repeatable for multi-state scans");
  cmd_scan->add_option("--format", scan_flags.format, "csv (default) or json");

  auto* cmd_oracle = app.add_subcommand("oracle", "closed-form reference values");
  cmd_oracle->require_subcommand(1);
  struct {
    int M = 0, k = -1;
    double gamma = -0.5;
  } som;
  auto* cmd_som = cmd_oracle->add_subcommand("sommerfeld", "fine-structure energy E(M, k, gamma)");
  cmd_som->add_option("--M", som.M, "radial node count, >= 0")->required();
  cmd_som->add_option("--k", som.k, "angular integer, nonzero")->required();
  cmd_som->add_option("--gamma", som.gamma, "coupling, |gamma| < |k|")->required();
  struct {
    double kappa = 0.5, a = 0.1, E = 0.5;
    int N = 1;
  } bsw;
  auto* cmd_bsw = cmd_oracle->add_subcommand("bsw", "small-ring series for the angular eigenvalue");
  cmd_bsw->add_option("--kappa", bsw.kappa)->required();
  cmd_bsw->add_option("--N", bsw.N, "nonzero level index")->required();
  cmd_bsw->add_option("--a", bsw.a)->required();
  cmd_bsw->add_option("--E", bsw.E)->required();
  struct {
    int N = 1;
    double kappa = 0.5;
  } kq;
  auto* cmd_k = cmd_oracle->add_subcommand("k", "integer angular eigenvalue at a = 0");
  cmd_k->add_option("--N", kq.N, "nonzero level index")->required();
  cmd_k->add_option("--kappa", kq.kappa)->required();

  struct {
    double kappa = 0.5;
    int n_theta = 0, n_omega = 0;
  } lab;
  auto* cmd_label = app.add_subcommand("label", "spectroscopic label of a winding target");
  cmd_label->add_option("--kappa", lab.kappa)->required();
  cmd_label->add_option("--ntheta", lab.n_theta)->required();
  cmd_label->add_option("--nomega", lab.n_omega)->required();

  WaveFlags wave_flags;
  auto* cmd_wave = app.add_subcommand("wavefunction", "solve and emit the profile table");
  add_solve_flags(cmd_wave, wave_flags.base, true);
  cmd_wave->add_option("--nr", wave_flags.n_r, "radial sample count")
      ->check(CLI::Range(5, 100000000));
  cmd_wave->add_option("--nang", wave_flags.n_ang, "angular sample count")
      ->check(CLI::Range(5, 100000000));
  cmd_wave->add_option("--rmax", wave_flags.r_max, "radial extent (default: tail-derived)");

  CheckFlags check_flags;
  auto* cmd_check = app.add_subcommand("check", "audit flow assumptions and the phase barrier");
  add_solve_flags(cmd_check, check_flags.base, false);
  cmd_check->add_option("--E", check_flags.E, "energy for the angular field and barrier");
  cmd_check->add_option("--lambda", check_flags.lambda, "eigenvalue for the radial field");
  // below ~16 cells the root bracketing around each boundary circle can alias
  // the two equilibria into none and report a spurious assumption failure
  cmd_check->add_option("--grid", check_flags.grid, "audit grid per axis")
      ->check(CLI::Range(16, 100000000));

  std::vector<std::string> args(argv + 1, argv + argc);
  std::string cfg_err;
  if (!merge_config_args(args, cfg_err)) {
    std::cerr << cfg_err << "\n";
    return exit_usage;
  }
  std::reverse(args.begin(), args.end()); // CLI11 consumes the vector back to front
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (cmd_solve->parsed()) return run_solve(solve_flags);
    if (cmd_scan->parsed()) {
      bool a_given = cmd_scan->count("--a") > 0;
      bool target_given = cmd_scan->count("--kappa") > 0 || cmd_scan->count("--ntheta") > 0 ||
                          cmd_scan->count("--nomega") > 0;
      return run_scan(scan_flags, a_given, target_given);
    }
    if (cmd_som->parsed()) {
      std::printf("%s\n", fmt12(sommerfeld_energy({som.M, som.k, som.gamma})).c_str());
      return exit_ok;
    }
    if (cmd_bsw->parsed()) {
      std::printf("%s\n", fmt12(bsw_lambda(bsw.kappa, bsw.N, bsw.a, bsw.E)).c_str());
      return exit_ok;
    }
    if (cmd_k->parsed()) {
      std::printf("%d\n", a0_angular_k(kq.N, kq.kappa));
      return exit_ok;
    }
    if (cmd_label->parsed()) {
      SpectroLabel L = spectroscopic_label({lab.n_theta, lab.n_omega}, lab.kappa);
      ojson j;
      j["text"] = L.text;
      j["n"] = L.n;
      j["ell"] = L.ell;
      j["j"] = L.j;
      j["m_j"] = L.m_j;
      j["k"] = L.k;
      j["M"] = L.M;
      j["N"] = L.N;
      std::printf("%s\n", j.dump(2).c_str());
      return exit_ok;
    }
    if (cmd_wave->parsed()) return run_wavefunction(wave_flags);
    if (cmd_check->parsed()) return run_check(check_flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
