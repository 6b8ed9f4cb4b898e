#include "zgkn/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zgkn/omega_system.hpp"
#include "zgkn/oracles.hpp"
#include "zgkn/theta_system.hpp"

namespace zgkn {

namespace {

constexpr double inner_tol_default = 1e-9;
constexpr double e_floor = 1e-6, e_ceil = 1.0 - 1e-6;

double clip_energy(double E) { return std::min(e_ceil, std::max(e_floor, E)); }

// one angular connector solve with a single doubled-bracket retry
ConnectorResult angular_solve(const ModelParams& params, double E, int n_theta,
                              double inner_tol) {
  ThetaContext ctx{params, E};
  ConnectorResult lam = find_lambda(ctx, n_theta, inner_tol);
  if (lam.converged) return lam;
  auto bracket = lambda_bracket(ctx, n_theta);
  double center = 0.5 * (bracket.first + bracket.second);
  double half = bracket.second - center;
  ConnectorResult retry =
      find_lambda_in(ctx, n_theta, {center - 2.0 * half, center + 2.0 * half}, inner_tol);
  return retry.converged ? retry : lam;
}

} // namespace

BoundState solve_pair(const ModelParams& params, const WindingTarget& target, double tol,
                      int max_iter) {
  BoundState out;
  out.params = params;
  out.target = target;
  ValidationReport check = validate(params, target);
  out.in_guaranteed_region = check.in_guaranteed_region;
  if (!check.accepted) {
    out.error = check.reason;
    return out;
  }
  out.label = spectroscopic_label(target, params.kappa);

  // seed from the flat-space level when the coupling is subcritical
  double E = 0.5;
  if (params.gamma * params.gamma < double(out.label.k) * out.label.k)
    E = sommerfeld_energy({target.n_omega, out.label.k, params.gamma});
  E = clip_energy(E);

  double lambda = 0.0;
  double prev_dE = 0.0;
  for (int iter = 1; iter <= max_iter; ++iter) {
    ConnectorResult lam = angular_solve(params, E, target.n_theta, inner_tol_default);
    if (!lam.converged) {
      out.error = "angular connector failed: " + lam.error;
      out.iterations = iter;
      return out;
    }
    out.final_dlambda = iter == 1 ? 0.0 : std::abs(lam.mu_star - lambda);
    lambda = lam.mu_star;

    OmegaContext octx{params, lambda};
    ConnectorResult en = find_E(octx, target.n_omega, inner_tol_default);
    if (!en.converged) {
      out.error = "radial connector failed: " + en.error;
      out.iterations = iter;
      return out;
    }
    double new_E = clip_energy(en.mu_star);
    out.final_dE = std::abs(new_E - E);
    E = new_E;
    out.iterations = iter;
    if (prev_dE > 0.0 && out.final_dE > 0.0) out.contraction_ratio = out.final_dE / prev_dE;
    prev_dE = out.final_dE;
    if (iter >= 2 && out.final_dE <= tol) {
      out.converged = true;
      break;
    }
  }
  out.E = E;
  out.lambda = lambda;
  if (!out.converged) {
    out.error = "alternating iteration did not reach tolerance";
    return out;
  }

  // honest self-consistency residuals: run one more full cycle and record the drift
  ConnectorResult lam = angular_solve(params, E, target.n_theta, inner_tol_default);
  if (lam.converged) {
    out.residual_lambda = std::abs(lam.mu_star - lambda);
    OmegaContext octx{params, lam.mu_star};
    ConnectorResult en = find_E(octx, target.n_omega, inner_tol_default);
    if (en.converged) out.residual_E = std::abs(clip_energy(en.mu_star) - E);
  }
  return out;
}

double contraction_probe(const ModelParams& params, const WindingTarget& target, double E_probe,
                         double delta, double inner_tol) {
  if (delta == 0.0) throw std::invalid_argument("contraction_probe: delta must be nonzero");
  auto round_trip = [&](double E) {
    if (!(E > 0.0 && E < 1.0))
      throw std::invalid_argument("contraction_probe: energy outside (0, 1)");
    ConnectorResult lam = angular_solve(params, E, target.n_theta, inner_tol);
    if (!lam.converged)
      throw std::runtime_error("contraction_probe: angular connector failed: " + lam.error);
    OmegaContext octx{params, lam.mu_star};
    ConnectorResult en = find_E(octx, target.n_omega, inner_tol);
    if (!en.converged)
      throw std::runtime_error("contraction_probe: radial connector failed: " + en.error);
    return en.mu_star;
  };
  double base = round_trip(E_probe);
  double shifted = round_trip(E_probe + delta);
  return std::abs(shifted - base) / std::abs(delta);
}

} // namespace zgkn
