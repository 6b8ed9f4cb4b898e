// end-to-end acceptance gate: each numbered criterion exercises the full
// pipeline against closed-form references, proven brackets, or qualitative
// structure, and prints a single PASS/FAIL verdict line. Run with the
// criterion number as the only argument, or with no argument for all ten.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "zgkn/omega_system.hpp"
#include "zgkn/oracles.hpp"
#include "zgkn/params.hpp"
#include "zgkn/solver.hpp"
#include "zgkn/theta_system.hpp"
#include "zgkn/wavefunction.hpp"

using namespace zgkn;

namespace {

bool expect(bool cond, const std::string& what) {
  if (!cond) std::printf("  fail: %s\n", what.c_str());
  return cond;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1: the spectrum collapses onto the hydrogenic fine-structure level as the
// ring shrinks, monotonically in a
bool criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  const double gamma = -0.5;
  const double exact = sommerfeld_energy({0, -1, gamma});
  bool ok = true;
  std::vector<double> errs;
  for (double a : {1e-2, 1e-3, 1e-4}) {
    BoundState bs = solve_pair({a, gamma, 0.5}, {0, 0});
    ok &= expect(bs.converged, "ground state converges at a=" + std::to_string(a));
    errs.push_back(std::abs(bs.E - exact));
    std::printf("  a=%g  E=%.10f  |E-ref|=%.3e\n", a, bs.E, errs.back());
  }
  ok &= expect(errs[1] < errs[0] && errs[2] < errs[1], "energy error strictly decreasing in a");
  ok &= expect(errs[2] < 1e-2, "energy error < 1e-2 at a=1e-4");
  double secs = seconds_since(t0);
  std::printf("  runtime %.2f s\n", secs);
  ok &= expect(secs < 30.0, "runtime < 30 s");
  return ok;
}

// 2: the accidental s/p degeneracy is restored as a -> 0 and broken at finite a
bool criterion2() {
  const double gamma = -0.3;
  const double oracle = sommerfeld_energy({1, -1, gamma});
  BoundState s_small = solve_pair({1e-4, gamma, 0.5}, {0, 1});
  BoundState p_small = solve_pair({1e-4, gamma, -0.5}, {-1, 1});
  bool ok = expect(s_small.converged && p_small.converged, "both levels converge at a=1e-4");
  ok &= expect(s_small.label.text == "2s1/2" && p_small.label.text == "2p1/2",
               "levels carry the expected labels");
  std::printf("  a=1e-4  E(2s1/2)=%.10f  E(2p1/2)=%.10f  ref=%.10f\n", s_small.E, p_small.E,
              oracle);
  ok &= expect(std::abs(s_small.E - p_small.E) < 1e-3, "levels agree within 1e-3 at a=1e-4");
  ok &= expect(std::abs(s_small.E - oracle) < 1e-3, "2s1/2 within 1e-3 of the closed form");
  ok &= expect(std::abs(p_small.E - oracle) < 1e-3, "2p1/2 within 1e-3 of the closed form");

  BoundState s_big = solve_pair({0.05, gamma, 0.5}, {0, 1});
  BoundState p_big = solve_pair({0.05, gamma, -0.5}, {-1, 1});
  ok &= expect(s_big.converged && p_big.converged, "both levels converge at a=0.05");
  double split = std::abs(s_big.E - p_big.E);
  std::printf("  a=0.05  split=%.3e\n", split);
  ok &= expect(split > 1e-7, "degeneracy split exceeds 10x the solver tolerance at a=0.05");
  return ok;
}

// 3: angular eigenvalues against the integer limit and the small-a series
bool criterion3() {
  bool ok = true;
  double worst_small = 0.0, worst_series = 0.0;
  for (double kappa : {0.5, -0.5, 1.5, -1.5, 2.5, -2.5}) {
    for (int N : {-3, -2, -1, 1, 2, 3}) {
      int n = winding_from_dictionary_N(N);
      ConnectorResult tiny = find_lambda({{1e-6, -0.5, kappa}, 0.5}, n);
      ok &= expect(tiny.converged, "angular connector at a=1e-6 (N=" + std::to_string(N) +
                                       ", kappa=" + std::to_string(kappa) + ")");
      double d_small = std::abs(tiny.mu_star - a0_angular_k(N, kappa));
      worst_small = std::max(worst_small, d_small);

      ConnectorResult ring = find_lambda({{0.1, -0.5, kappa}, 0.5}, n);
      ok &= expect(ring.converged, "angular connector at a=0.1 (N=" + std::to_string(N) +
                                       ", kappa=" + std::to_string(kappa) + ")");
      double d_series = std::abs(ring.mu_star - bsw_lambda(kappa, N, 0.1, 0.5));
      worst_series = std::max(worst_series, d_series);
    }
  }
  std::printf("  worst |lambda - k| at a=1e-6: %.3e   worst series gap at a=0.1: %.3e\n",
              worst_small, worst_series);
  ok &= expect(worst_small <= 1e-4, "integer limit matched within 1e-4 at a=1e-6");
  ok &= expect(worst_series <= 1e-2, "second-order series matched within 1e-2 at a=0.1");
  return ok;
}

// 4: solved eigenvalues sit inside their proven brackets with the proven order
bool criterion4() {
  const ModelParams p{0.05, -0.4, 0.5};
  const double tol = 1e-8;
  bool ok = true;
  double prev_lambda = HUGE_VAL;
  for (int n = 0; n <= 2; ++n) {
    BoundState bs = solve_pair(p, {n, 0});
    ok &= expect(bs.converged, "level n_theta=" + std::to_string(n) + " converges");
    auto [lo, hi] = lambda_bracket_raw({p, bs.E}, n);
    std::printf("  n_theta=%d  lambda=%.8f  bracket=[%.6f, %.6f]\n", n, bs.lambda, lo, hi);
    ok &= expect(bs.lambda >= lo - tol && bs.lambda <= hi + tol,
                 "lambda inside its bracket at n_theta=" + std::to_string(n));
    ok &= expect(bs.lambda <= prev_lambda + tol, "lambda nonincreasing in n_theta");
    prev_lambda = bs.lambda;
  }
  BoundState mirrored = solve_pair({0.05, -0.4, -0.5}, {-1, 1});
  ok &= expect(mirrored.converged, "negative-family level converges");
  auto [mlo, mhi] = lambda_bracket_raw({mirrored.params, mirrored.E}, -1);
  ok &= expect(mirrored.lambda >= mlo - tol && mirrored.lambda <= mhi + tol,
               "negative-family lambda inside its bracket");

  double prev_E = -HUGE_VAL;
  for (int m = 0; m <= 2; ++m) {
    BoundState bs = solve_pair(p, {0, m});
    ok &= expect(bs.converged, "level n_omega=" + std::to_string(m) + " converges");
    std::printf("  n_omega=%d  E=%.10f\n", m, bs.E);
    ok &= expect(bs.E >= prev_E - tol, "E nondecreasing in n_omega");
    prev_E = bs.E;
  }
  return ok;
}

// 5: the two connector maps are Lipschitz with the proven slopes, so the
// alternating iteration contracts
bool criterion5() {
  const ModelParams p{0.1, -0.3, 0.5};
  const double delta = 1e-4, inner = 1e-11;
  bool ok = true;
  for (double E : {0.4, 0.6, 0.8}) {
    ConnectorResult c0 = find_lambda({p, E}, 0, inner);
    ConnectorResult c1 = find_lambda({p, E + delta}, 0, inner);
    ok &= expect(c0.converged && c1.converged, "angular probes converge");
    double slope = std::abs(c1.mu_star - c0.mu_star) / delta;
    std::printf("  |dlambda/dE| at E=%.1f: %.4f (bound %.2f)\n", E, slope, p.a);
    ok &= expect(slope < p.a, "|dlambda/dE| < a at E=" + std::to_string(E));
  }
  for (double lam : {-1.3, -1.1, -0.95}) {
    ConnectorResult c0 = find_E({p, lam}, 0, inner);
    ConnectorResult c1 = find_E({p, lam + delta}, 0, inner);
    ok &= expect(c0.converged && c1.converged, "radial probes converge");
    double slope = std::abs(c1.mu_star - c0.mu_star) / delta;
    std::printf("  |dE/dlambda| at lambda=%.2f: %.4f (bound %.1f)\n", lam, slope, 1.0 / p.a);
    ok &= expect(slope < 1.0 / p.a, "|dE/dlambda| < 1/a at lambda=" + std::to_string(lam));
  }
  double ratio = contraction_probe(p, {0, 0}, 0.9, delta);
  std::printf("  contraction ratio %.5f\n", ratio);
  ok &= expect(ratio < 1.0, "round-trip contraction ratio < 1");
  return ok;
}

// 6: the one-way phase line blocks upward recrossing throughout the region
bool criterion6() {
  bool ok = true;
  int checked = 0;
  double worst = -HUGE_VAL;
  for (double a : {0.02, 0.07, 0.12, 0.17, 0.22}) {
    for (double gamma : {-0.45, -0.35, -0.25, -0.15, -0.05}) {
      struct Family {
        double kappa;
        WindingTarget target;
      } families[] = {{0.5, {0, 0}}, {-0.5, {-1, 1}}};
      for (const auto& fam : families) {
        BoundState bs = solve_pair({a, gamma, fam.kappa}, fam.target);
        ok &= expect(bs.converged, "state converges at a=" + std::to_string(a) +
                                       ", gamma=" + std::to_string(gamma) +
                                       ", kappa=" + std::to_string(fam.kappa));
        if (!bs.converged) continue;
        BarrierReport rep = barrier_check({bs.params, bs.lambda}, bs.E);
        worst = std::max(worst, rep.max_gdot);
        ok &= expect(rep.negative && rep.max_gdot < 0.0,
                     "barrier line strictly one-way at a=" + std::to_string(a) +
                         ", gamma=" + std::to_string(gamma) +
                         ", kappa=" + std::to_string(fam.kappa));
        ++checked;
      }
    }
  }
  std::printf("  %d barrier lines audited, largest phase speed on a line: %.4e\n", checked,
              worst);
  ok &= expect(checked == 50, "all 50 grid points audited");
  return ok;
}

// 7: the closed-form connector profiles solve their limiting flows, and the
// phase-denominator root counts match the node law exactly
bool criterion7() {
  bool ok = true;
  const double h = 1e-3;
  double worst_ang = 0.0;
  struct AngularCase {
    int N;
    double kappa;
  } acases[] = {{1, 0.5}, {2, 0.5}, {3, 1.5}, {-1, -0.5}, {-2, -1.5}};
  for (const auto& c : acases) {
    double lambda = a0_angular_k(c.N, c.kappa);
    ThetaContext ctx{{0.0, -0.5, c.kappa}, 0.5}; // ring-free flow
    for (double th : {0.4, 0.9, 1.5707963267948966, 2.2, 2.7}) {
      auto f = [&](double x) { return jacobi_theta_connector(c.N, c.kappa, x); };
      double fd = (f(th - 2 * h) - 8 * f(th - h) + 8 * f(th + h) - f(th + 2 * h)) / (12 * h);
      double rhs = theta_rhs({th, f(th)}, ctx, lambda)[1] / std::sin(th);
      worst_ang = std::max(worst_ang, std::abs(fd - rhs));
    }
  }
  std::printf("  worst angular profile residual: %.3e\n", worst_ang);
  ok &= expect(worst_ang < 1e-8, "angular closed forms solve the ring-free flow to 1e-8");

  double worst_rad = 0.0;
  SommerfeldIndex rcases[] = {{1, -1, -0.3}, {2, 1, -0.3}, {0, -2, -0.3}};
  for (const auto& idx : rcases) {
    double E = gordon_energy(idx);
    OmegaContext ctx{{0.0, idx.gamma, 0.5}, static_cast<double>(idx.k)};
    for (double r : {0.5, 1.5, 3.0, 6.0}) {
      auto f = [&](double x) { return gordon_omega_profile(idx, x); };
      double fd = (f(r - 2 * h) - 8 * f(r - h) + 8 * f(r + h) - f(r + 2 * h)) / (12 * h);
      double rhs = omega_rhs_r({r, f(r)}, ctx, E);
      worst_rad = std::max(worst_rad, std::abs(fd - rhs));
    }
  }
  std::printf("  worst radial profile residual: %.3e\n", worst_rad);
  ok &= expect(worst_rad < 1e-8, "radial closed forms solve the ring-free flow to 1e-8");

  for (int k = -4; k <= 4; ++k) {
    if (k == 0) continue;
    for (int M = (k > 0 ? 1 : 0); M <= 6; ++M) {
      int want = k < 0 ? M : M - 1;
      int got = count_denominator_roots({M, k, -0.3});
      ok &= expect(got == want, "root count for M=" + std::to_string(M) +
                                    ", k=" + std::to_string(k) + " is " + std::to_string(want) +
                                    " (got " + std::to_string(got) + ")");
    }
  }
  return ok;
}

// 8: converged connectors land on the predicted terminal lifts
bool criterion8() {
  bool ok = true;
  struct AngularCase {
    int n_theta;
    double kappa;
  } acases[] = {{0, 0.5}, {1, 0.5}, {2, 0.5}, {0, -0.5}, {-1, -0.5}, {0, 1.5}, {-1, 1.5}};
  for (const auto& c : acases) {
    ThetaContext tctx{{1e-4, -0.5, c.kappa}, 0.5};
    ConnectorResult res = find_lambda(tctx, c.n_theta);
    ok &= expect(res.converged, "angular connector (n_theta=" + std::to_string(c.n_theta) +
                                    ", kappa=" + std::to_string(c.kappa) + ") converges");
    if (!res.converged) continue;
    double closed = jacobi_theta_final(dictionary_N(c.n_theta), c.kappa);
    ok &= expect(std::abs(res.terminal_lift - closed) <= 1e-3,
                 "angular terminal lift matches the closed form (n_theta=" +
                     std::to_string(c.n_theta) + ", kappa=" + std::to_string(c.kappa) + ")");
    // the bisected parameter sits within tol of the connector but not on it, so
    // the orbit eventually peels off to one of the two flanking sinks; landing
    // on the target lift or the next one over is exactly the bisection dichotomy
    ok &= expect(res.orbit.classified, "angular orbit reaches a terminal band");
    if (res.orbit.classified) {
      int w = winding_of(res.orbit, theta_field(tctx));
      ok &= expect(w == c.n_theta || w == c.n_theta + 1,
                   "angular orbit tracks the connector to the far saddle (n_theta=" +
                       std::to_string(c.n_theta) + ", kappa=" + std::to_string(c.kappa) + ")");
    }
  }
  for (int M = 0; M <= 2; ++M) {
    OmegaContext octx{{1e-4, -0.5, 0.5}, -1.0};
    ConnectorResult res = find_E(octx, M);
    ok &= expect(res.converged, "radial connector M=" + std::to_string(M) + " converges");
    if (!res.converged) continue;
    double closed = -2.0 * M_PI * M - std::acos(res.mu_star);
    std::printf("  M=%d terminal lift %.8f vs law %.8f\n", M, res.terminal_lift, closed);
    ok &= expect(std::abs(res.terminal_lift - closed) <= 1e-3,
                 "radial terminal lift follows the endpoint law at M=" + std::to_string(M));
    ok &= expect(res.orbit.classified, "radial orbit reaches a terminal band");
    if (res.orbit.classified) {
      int w = winding_of(res.orbit, omega_field(octx));
      ok &= expect(w == M || w == M + 1,
                   "radial orbit tracks the connector to the far saddle at M=" +
                       std::to_string(M));
    }
  }
  return ok;
}

// 9: the strongly coupled ground-state curve converges across the scan window
// and develops an interior extremum
bool criterion9() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  const int n = 41;
  std::vector<double> energies;
  for (int i = 0; i < n; ++i) {
    double zalpha = 1.0 + 0.6 * i / (n - 1);
    BoundState bs = solve_pair({0.05, -zalpha, 0.5}, {0, 0});
    ok &= expect(bs.converged, "scan point Zalpha=" + std::to_string(zalpha) + " converges");
    energies.push_back(bs.E);
  }
  int extrema = 0;
  for (int i = 1; i + 1 < n; ++i)
    if ((energies[i] - energies[i - 1]) * (energies[i + 1] - energies[i]) < 0.0) ++extrema;
  double secs = seconds_since(t0);
  std::printf("  E range [%.6f, %.6f], %d interior extrema, runtime %.1f s\n",
              *std::min_element(energies.begin(), energies.end()),
              *std::max_element(energies.begin(), energies.end()), extrema, secs);
  ok &= expect(extrema >= 1, "energy curve has an interior local extremum");
  ok &= expect(secs < 600.0, "runtime < 10 min");
  return ok;
}

// 10: the reconstructed density peaks at the hydrogenic radius, is stable
// under grid refinement, and contracts toward the ring as the charge grows
bool criterion10() {
  bool ok = true;
  BoundState b1 = solve_pair({1e-4, gamma_from_Z(1), 0.5}, {0, 0});
  ok &= expect(b1.converged, "Z=1 ground state converges");
  WaveProfile w1 = wave_profile(b1);
  ok &= expect(w1.ok, "Z=1 profile assembles: " + w1.error);
  if (!w1.ok) return false;
  double rho = std::sqrt(1.0 - b1.params.gamma * b1.params.gamma);
  double eta = std::sqrt(1.0 - b1.E * b1.E);
  std::printf("  Z=1 peak r=%.4f vs rho/eta=%.4f\n", w1.peak_r, rho / eta);
  ok &= expect(std::abs(w1.peak_r - rho / eta) <= 0.05 * rho / eta,
               "density peak within 5% of the hydrogenic radius");

  RadialSamples rc = radial_profile(b1, 801), rf = radial_profile(b1, 1601);
  AngularSamples ac = angular_profile(b1, 801), af = angular_profile(b1, 1601);
  ok &= expect(rc.ok && rf.ok && ac.ok && af.ok, "refined profiles assemble");
  double dr = std::abs(rf.norm / rc.norm - 1.0), da = std::abs(af.norm / ac.norm - 1.0);
  std::printf("  norm drift under doubling: radial %.2e, angular %.2e\n", dr, da);
  ok &= expect(dr <= 1e-6 && da <= 1e-6, "normalization stable to 1e-6 under grid doubling");

  double prev_peak = HUGE_VAL;
  for (double Z : {1.0, 20.0, 40.0}) {
    BoundState bs = solve_pair({1e-4, gamma_from_Z(Z), 0.5}, {0, 0});
    ok &= expect(bs.converged, "Z=" + std::to_string(Z) + " converges");
    WaveProfile w = wave_profile(bs);
    ok &= expect(w.ok, "Z=" + std::to_string(Z) + " profile assembles");
    if (!w.ok) continue;
    std::printf("  Z=%.0f peak r=%.4f\n", Z, w.peak_r);
    ok &= expect(w.peak_r < prev_peak, "peak location decreasing in Z");
    prev_peak = w.peak_r;
  }
  return ok;
}

} // namespace

int main(int argc, char** argv) {
  bool (*criteria[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                          criterion6, criterion7, criterion8, criterion9, criterion10};
  if (argc > 1) {
    int id = std::atoi(argv[1]);
    if (id < 1 || id > 10) {
      std::fprintf(stderr, "usage: %s [criterion 1-10]\n", argv[0]);
      return 2;
    }
    bool ok = criteria[id - 1]();
    std::printf("criterion %d: %s\n", id, ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
  }
  int failures = 0;
  for (int id = 1; id <= 10; ++id) {
    bool ok = criteria[id - 1]();
    std::printf("criterion %d: %s\n", id, ok ? "PASS" : "FAIL");
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
