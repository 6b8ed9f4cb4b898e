#pragma once
#include <string>

#include "zgkn/cylinder.hpp"
#include "zgkn/params.hpp"

namespace zgkn {

// fixed point of the alternating connector iteration:
//   lambda_{k+1} = angular connector at E_k, E_{k+1} = radial connector at lambda_{k+1}
struct BoundState {
  bool converged = false;
  double E = 0, lambda = 0;
  ModelParams params;
  WindingTarget target;
  SpectroLabel label;
  int iterations = 0;
  double final_dE = 0, final_dlambda = 0;
  double residual_E = 0, residual_lambda = 0; // recomputed one-sided residuals
  double contraction_ratio = 0;               // |delta_{k+1}| / |delta_k| estimate
  bool in_guaranteed_region = false;
  std::string error;
};

BoundState solve_pair(const ModelParams& params, const WindingTarget& target, double tol = 1e-8,
                      int max_iter = 40);

// finite-difference slope of the round-trip map phi(E) = radial connector
// energy at the angular connector eigenvalue lambda*(E); returns
// |phi(E_probe + delta) - phi(E_probe)| / delta, which must be < 1 for the
// alternating iteration to contract
double contraction_probe(const ModelParams& params, const WindingTarget& target, double E_probe,
                         double delta, double inner_tol = 1e-11);

} // namespace zgkn
