#pragma once
#include <array>
#include <utility>

#include "zgkn/cylinder.hpp"
#include "zgkn/params.hpp"

namespace zgkn {

// polar-angle flow on [0, pi] x S^1 (tau-parameterized to regularize the poles):
//   theta' = sin(theta)
//   Theta' = -2a sin(theta)cos(theta)cos(Theta) + 2aE sin^2(theta) sin(Theta)
//            - 2 kappa sin(Theta) + 2 lambda sin(theta)
struct ThetaContext {
  ModelParams params;
  double E = 0.5; // energy parameter entering the angular flow, in [0, 1]
};

std::array<double, 2> theta_rhs(const std::array<double, 2>& state, const ThetaContext& ctx,
                                double lambda);

struct ThetaSaddles {
  std::array<double, 2> s_minus{}, s_plus{};
  double n_minus_y = 0, n_plus_y = 0;
  double domain_base = 0;                  // -pi for kappa > 0, 0 for kappa < 0
  double eig_unstable = 0, eig_stable = 0; // {1, -2|kappa|} at the left saddle
  double tangent_slope = 0;                // b of the unstable eigendirection (1, b)
  std::array<double, 2> unstable_tangent{};
};

// throws std::invalid_argument when kappa = 0
ThetaSaddles saddle_data(const ThetaContext& ctx, double lambda);

// closed interval containing the winding-n_theta connector value of lambda
std::pair<double, double> lambda_bracket_raw(const ThetaContext& ctx, int n_theta);
// the same interval widened by 5% of its width on each end (search bracket)
std::pair<double, double> lambda_bracket(const ThetaContext& ctx, int n_theta);

CylinderField theta_field(const ThetaContext& ctx);

ConnectorResult find_lambda(const ThetaContext& ctx, int n_theta, double tol = 1e-9);
ConnectorResult find_lambda_in(const ThetaContext& ctx, int n_theta,
                               std::pair<double, double> bracket, double tol);

} // namespace zgkn
