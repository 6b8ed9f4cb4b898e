#pragma once
#include <array>
#include <vector>

#include "zgkn/params.hpp"

namespace zgkn {

// closed-form references used to cross-check the dynamical solver.
// N below is the signed level index (nonzero integer) of the angular
// connector family, related to the winding target by dictionary_N().

// hydrogenic fine-structure energy level: radial node count M >= 0,
// angular integer k != 0, coupling gamma < 0 with gamma^2 < k^2
struct SommerfeldIndex {
  int M = 0;
  int k = -1;
  double gamma = -0.5;
};
double sommerfeld_energy(const SommerfeldIndex& idx);

// a = 0 angular eigenvalue is the integer k = -sgn(N)(|N| + |kappa| - 1/2)
int a0_angular_k(int N, double kappa);

// standard Jacobi polynomial P_n^{(alpha,beta)}(x) via the three-term recurrence
double jacobi_polynomial(int n, double alpha, double beta, double x);

// exact angular connector profile at a = 0 (any E): the lifted phase
// Theta(theta) of the level-N connector, theta in [0, pi]
double jacobi_theta_connector(int N, double kappa, double theta);
// exact terminal value Theta(pi) of the same profile
double jacobi_theta_final(int N, double kappa);
// amplitude pair (S1, S2) of the exact angular eigenfunction, unnormalized
std::array<double, 2> jacobi_spinor(int N, double kappa, double theta);

// terminating confluent hypergeometric 1F1(-M; b; x), M >= 0 integer
double hyp1f1_terminating(int M, double b, double x);

// exact radial connector profile at a = 0 (Coulomb-type potential), lifted:
// Omega(r) for r >= 0
double gordon_omega_profile(const SommerfeldIndex& idx, double r);
// limits of the same profile
double gordon_omega_at_zero(const SommerfeldIndex& idx);
double gordon_omega_at_infinity(const SommerfeldIndex& idx);
// roots of the phase-branch denominator on (0, infinity); their count is
// M for k < 0 and M - 1 for k > 0 whenever |gamma| < 1/2
std::vector<double> gordon_denominator_roots(const SommerfeldIndex& idx);
int count_denominator_roots(const SommerfeldIndex& idx);
// energy parameter of the closed-form profile (equals sommerfeld_energy)
double gordon_energy(const SommerfeldIndex& idx);

// small-a double power series for the angular eigenvalue of level N:
// lambda ~ k + c10 alpha + c01 beta + c20 alpha^2 + c02 beta^2 with
// alpha = a(E+1), beta = a(E-1)
double bsw_lambda(double kappa, int N, double a, double E);

} // namespace zgkn
