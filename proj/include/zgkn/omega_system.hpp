#pragma once
#include <array>
#include <utility>
#include <vector>

#include "zgkn/cylinder.hpp"
#include "zgkn/params.hpp"

namespace zgkn {

// radial flow compactified through xi = atan(r/a), xi in (-pi/2, pi/2):
//   xi'    = cos^2(xi)                                   (tau = r/a)
//   Omega' = 2a sin(xi)cos(Omega) + 2 lambda cos(xi)sin(Omega)
//            + 2 gamma sin(xi)cos(xi) + 2 kappa cos^2(xi) - 2aE
struct OmegaContext {
  ModelParams params;
  double lambda = -1.0;
};

std::array<double, 2> omega_rhs_tau(const std::array<double, 2>& state, const OmegaContext& ctx,
                                    double E);
// the same field in the physical radial variable r (state = {r, Omega}):
// returns dOmega/dr, related to the tau form by rhs_tau = a * rhs_r
double omega_rhs_r(const std::array<double, 2>& state, const OmegaContext& ctx, double E);

struct OmegaSaddleNodes {
  std::array<double, 2> s_minus{}, n_minus{}, s_plus{}, n_plus{};
  double eig_zero = 0;        // degenerate eigenvalue along the boundary circle
  double eig_contracting = 0; // -2a sqrt(1-E^2)
  double center_slope_minus = 0, center_slope_plus = 0;
};

// throws std::invalid_argument when E is outside (0, 1)
OmegaSaddleNodes saddle_node_data(const OmegaContext& ctx, double E);

CylinderField omega_field(const OmegaContext& ctx);

// bisection for the level-n_omega radial connector over the full admissible
// energy window (1e-6, 1-1e-6); the winding always straddles the target there
ConnectorResult find_E(const OmegaContext& ctx, int n_omega, double tol = 1e-9);

// sign audit of Omega' along the one-way line Omega = +pi/2 (lambda < 0) or
// -pi/2 (lambda > 0): Omega' < 0 there makes it a downward-only membrane
struct BarrierReport {
  double line_y = 0;
  double max_gdot = 0; // maximum of Omega' along the line (should be negative)
  double argmax_xi = 0;
  int grid = 0;
  bool negative = false;
  bool lambda_admissible = false; // |lambda| large enough for the sign to be guaranteed
};

BarrierReport barrier_check(const OmegaContext& ctx, double E, int grid = 2001);

} // namespace zgkn
