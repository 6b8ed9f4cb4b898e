#include "zgkn/theta_system.hpp"

#include <cmath>
#include <stdexcept>

namespace zgkn {

std::array<double, 2> theta_rhs(const std::array<double, 2>& state, const ThetaContext& ctx,
                                double lambda) {
  const double a = ctx.params.a, E = ctx.E, kappa = ctx.params.kappa;
  const double st = std::sin(state[0]), ct = std::cos(state[0]);
  const double sT = std::sin(state[1]), cT = std::cos(state[1]);
  return {st, -2.0 * a * st * ct * cT + 2.0 * a * E * st * st * sT - 2.0 * kappa * sT +
                  2.0 * lambda * st};
}

ThetaSaddles saddle_data(const ThetaContext& ctx, double lambda) {
  const double kappa = ctx.params.kappa;
  if (std::abs(kappa) < 0.25) throw std::invalid_argument("kappa must be a nonzero half-integer");
  ThetaSaddles s;
  s.eig_unstable = 1.0;
  s.eig_stable = -2.0 * std::abs(kappa);
  if (kappa > 0) {
    s.domain_base = -M_PI;
    s.s_minus = {0.0, 0.0};
    s.n_minus_y = -M_PI;
    s.s_plus = {M_PI, -M_PI};
    s.n_plus_y = 0.0;
    s.tangent_slope = (lambda - ctx.params.a) / (0.5 + kappa);
  } else {
    s.domain_base = 0.0;
    s.s_minus = {0.0, M_PI};
    s.n_minus_y = 0.0;
    s.s_plus = {M_PI, 0.0};
    s.n_plus_y = M_PI;
    s.tangent_slope = (lambda + ctx.params.a) / (0.5 - kappa);
  }
  const double norm = std::sqrt(1.0 + s.tangent_slope * s.tangent_slope);
  s.unstable_tangent = {1.0 / norm, s.tangent_slope / norm};
  return s;
}

std::pair<double, double> lambda_bracket_raw(const ThetaContext& ctx, int n_theta) {
  // stated for kappa > 0; kappa < 0 follows from the reflection
  // lambda_{-N}(-kappa, E) = -lambda_N(kappa, -E), which keeps the n >= 0
  // interval and widens the n <= -1 one by 2K
  const double a = ctx.params.a, kappa = ctx.params.kappa;
  const double K = 0.5 + std::abs(kappa);
  if (n_theta >= 0) {
    // K - a <= -lambda <= (2 n + 1) K + 2a
    return {-((2.0 * n_theta + 1.0) * K + 2.0 * a), -(K - a)};
  }
  double lo = K - a;
  double hi = kappa > 0 ? -(2.0 * n_theta + 1.0) * K + 2.0 * a
                        : (1.0 - 2.0 * n_theta) * K + 2.0 * a;
  return {lo, hi};
}

std::pair<double, double> lambda_bracket(const ThetaContext& ctx, int n_theta) {
  auto raw = lambda_bracket_raw(ctx, n_theta);
  // widen past the closed interval so the bisection predicate can flip; the
  // winding is monotone in lambda, so overshooting the ends is harmless
  double pad = std::max(0.05 * (raw.second - raw.first), 1e-9);
  return {raw.first - pad, raw.second + pad};
}

CylinderField theta_field(const ThetaContext& ctx) {
  CylinderField field;
  field.x_minus = 0.0;
  field.x_plus = M_PI;
  field.f = [](double x) { return std::sin(x); };
  field.g = [ctx](double x, double y, double mu) {
    // mu is the search parameter lambda
    return theta_rhs({x, y}, ctx, mu)[1];
  };
  ThetaSaddles s = saddle_data(ctx, -1.0);
  field.y_base = s.domain_base;
  field.equilibria = [ctx](double) {
    // boundary equilibria do not move with lambda
    ThetaSaddles sd = saddle_data(ctx, 0.0);
    Equilibria eq;
    eq.s_minus = sd.s_minus[1];
    eq.n_minus = sd.n_minus_y;
    eq.s_plus = sd.s_plus[1];
    eq.n_plus = sd.n_plus_y;
    return eq;
  };
  field.mu = -1.0;
  field.orientation = -1; // winding grows as lambda decreases
  // the terminal saddle separates nearby orbits at rate 2|kappa|; shrink the
  // classification band until the amplification (1/band)^(2|kappa|) resolves
  // parameter differences at the bisection tolerance. 1e-9 is the floor: the
  // integrated polar angle stalls in ~1e-10 step-control noise near the pole.
  field.terminal_band =
      std::min(1e-3, std::pow(1e-9, 1.0 / (2.0 * std::abs(ctx.params.kappa))));
  field.heteroclinic_note =
      "no interior limit sets: angular flow is gradient-like across the cylinder";
  return field;
}

ConnectorResult find_lambda(const ThetaContext& ctx, int n_theta, double tol) {
  return find_lambda_in(ctx, n_theta, lambda_bracket(ctx, n_theta), tol);
}

ConnectorResult find_lambda_in(const ThetaContext& ctx, int n_theta,
                               std::pair<double, double> bracket, double tol) {
  CylinderField field = theta_field(ctx);
  return find_connector(field, n_theta, bracket, tol);
}

} // namespace zgkn
