#include "zgkn/omega_system.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zgkn/ode.hpp"

namespace zgkn {

std::array<double, 2> omega_rhs_tau(const std::array<double, 2>& state, const OmegaContext& ctx,
                                    double E) {
  const double a = ctx.params.a, gamma = ctx.params.gamma, kappa = ctx.params.kappa;
  const double lambda = ctx.lambda;
  const double sx = std::sin(state[0]), cx = std::cos(state[0]);
  const double sy = std::sin(state[1]), cy = std::cos(state[1]);
  return {cx * cx, 2.0 * a * sx * cy + 2.0 * lambda * cx * sy + 2.0 * gamma * sx * cx +
                       2.0 * kappa * cx * cx - 2.0 * a * E};
}

double omega_rhs_r(const std::array<double, 2>& state, const OmegaContext& ctx, double E) {
  const double a = ctx.params.a, gamma = ctx.params.gamma, kappa = ctx.params.kappa;
  const double lambda = ctx.lambda;
  const double r = state[0];
  const double w = std::sqrt(r * r + a * a); // cylindrical radius on the double sheet
  const double sy = std::sin(state[1]), cy = std::cos(state[1]);
  return 2.0 * (r / w) * cy + 2.0 * (lambda / w) * sy + 2.0 * (a * kappa + gamma * r) / (w * w) -
         2.0 * E;
}

OmegaSaddleNodes saddle_node_data(const OmegaContext& ctx, double E) {
  if (!(E > 0.0 && E < 1.0)) throw std::invalid_argument("E must lie in (0, 1)");
  const double a = ctx.params.a;
  const double eta = std::sqrt((1.0 - E) * (1.0 + E));
  const double ac = std::acos(E);
  OmegaSaddleNodes s;
  s.s_minus = {-M_PI / 2, -M_PI + ac};
  s.n_minus = {-M_PI / 2, -M_PI - ac};
  s.s_plus = {M_PI / 2, -ac};
  s.n_plus = {M_PI / 2, ac};
  s.eig_zero = 0.0;
  s.eig_contracting = -2.0 * a * eta;
  s.center_slope_minus = (-ctx.params.gamma - ctx.lambda * eta) / (a * eta);
  s.center_slope_plus = (ctx.params.gamma - ctx.lambda * eta) / (a * eta);
  return s;
}

namespace {

// radial extent covering the slow Coulomb-like tail; eta = sqrt(1 - E^2)
double radial_extent(double E) {
  const double eta = std::sqrt(std::max(1.0 - E * E, 1e-300));
  return std::max(50.0, 50.0 / eta);
}

Orbit run_radial(const OmegaContext& ctx, double E, double y0, double r0, double r1) {
  Orbit orbit;
  // the lift is the only state component; r is the integration variable
  auto rhs_t = [&](double t, const std::array<double, 1>& y) -> std::array<double, 1> {
    return {omega_rhs_r({t, y[0]}, ctx, E)};
  };
  OdeOptions opt;
  opt.rel_tol = 1e-10;
  opt.abs_tol = 1e-12;
  opt.max_delta = 1.0; // keep lift jumps well under pi for unambiguous unrolling
  auto sol = integrate_dp45<1>(rhs_t, r0, r1, {y0}, opt, [](double, const std::array<double, 1>&) {
    return false;
  });
  const double a = ctx.params.a;
  orbit.samples.reserve(sol.points.size());
  for (const auto& p : sol.points)
    orbit.samples.push_back({p.t, std::atan(p.t / a), p.y[0]});
  orbit.ok = sol.ok;
  if (!sol.ok) orbit.error = sol.error;
  return orbit;
}

} // namespace

CylinderField omega_field(const OmegaContext& ctx) {
  CylinderField field;
  field.x_minus = -M_PI / 2;
  field.x_plus = M_PI / 2;
  field.y_base = -3.0 * M_PI / 2; // both saddle-node pairs sit inside [-3pi/2, pi/2)
  field.f = [](double x) { return std::cos(x) * std::cos(x); };
  field.g = [ctx](double x, double y, double mu) {
    // mu is the energy E
    return omega_rhs_tau({x, y}, ctx, mu)[1];
  };
  field.equilibria = [ctx](double mu) {
    OmegaSaddleNodes s = saddle_node_data(ctx, mu);
    Equilibria eq;
    eq.s_minus = s.s_minus[1];
    eq.n_minus = s.n_minus[1];
    eq.s_plus = s.s_plus[1];
    eq.n_plus = s.n_plus[1];
    return eq;
  };
  field.mu = 0.5;
  field.orientation = +1; // winding grows with E
  // the physical-variable form integrates r over [-R, R]; the terminal sample
  // then sits atan(a/R) short of the boundary, which exceeds the default band
  field.terminal_band = 1.05 * std::atan(ctx.params.a / 50.0);
  field.heteroclinic_note =
      "no interior limit sets: radial flow crosses the cylinder monotonically in r";

  field.forward_runner = [ctx](double E) {
    OmegaSaddleNodes s = saddle_node_data(ctx, E);
    const double R = radial_extent(E);
    const double dxi = std::atan(ctx.params.a / R);
    // center-manifold asymptote at the left saddle-node, converted to r = -R
    Orbit orbit = run_radial(ctx, E, s.s_minus[1] + s.center_slope_minus * dxi, -R, R);
    return orbit;
  };
  field.backward_runner = [ctx](double E, int winding) {
    OmegaSaddleNodes s = saddle_node_data(ctx, E);
    const double R = radial_extent(E);
    const double dxi = std::atan(ctx.params.a / R);
    const double launch = s.s_plus[1] - 2.0 * M_PI * winding - s.center_slope_plus * dxi;
    Orbit orbit = run_radial(ctx, E, launch, R, -R);
    std::reverse(orbit.samples.begin(), orbit.samples.end());
    orbit.backward = true;
    orbit.start_shift = winding;
    return orbit;
  };
  return field;
}

ConnectorResult find_E(const OmegaContext& ctx, int n_omega, double tol) {
  ConnectorResult result;
  if (n_omega < 0) {
    result.error = "inadmissible radial winding: must be >= 0";
    return result;
  }
  if (ctx.lambda > 0 && n_omega == 0) {
    result.error = "inadmissible radial winding: the phase barrier forbids 0 when lambda > 0";
    return result;
  }
  CylinderField field = omega_field(ctx);
  return find_connector(field, n_omega, {1e-6, 1.0 - 1e-6}, tol);
}

BarrierReport barrier_check(const OmegaContext& ctx, double E, int grid) {
  if (grid < 2) throw std::invalid_argument("grid must have at least 2 points");
  BarrierReport report;
  report.grid = grid;
  report.line_y = ctx.lambda < 0 ? M_PI / 2 : -M_PI / 2;
  const double K = 0.5 + std::abs(ctx.params.kappa);
  if (ctx.lambda < 0)
    report.lambda_admissible = ctx.params.kappa > 0 ? (ctx.lambda <= ctx.params.a - K)
                                                    : (ctx.lambda <= -K - ctx.params.a);
  else
    report.lambda_admissible = ctx.lambda >= K - ctx.params.a;
  report.max_gdot = -HUGE_VAL;
  for (int i = 0; i < grid; ++i) {
    const double xi = -M_PI / 2 + M_PI * i / (grid - 1);
    const double gdot = omega_rhs_tau({xi, report.line_y}, ctx, E)[1];
    if (gdot > report.max_gdot) {
      report.max_gdot = gdot;
      report.argmax_xi = xi;
    }
  }
  report.negative = report.max_gdot < 0.0;
  return report;
}

} // namespace zgkn
