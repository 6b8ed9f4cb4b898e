#pragma once
#include <vector>

#include "zgkn/cylinder.hpp"
#include "zgkn/solver.hpp"

namespace zgkn {

// reconstructed amplitude profiles along the two connector orbits

struct RadialSamples {
  std::vector<double> r, ln_amp, amp, phase; // amp = R(r), phase = Omega(r)
  double norm = 0;                           // integral of R^2 dr before rescaling
  bool ok = false;
  std::string error;
};

struct AngularSamples {
  std::vector<double> theta, ln_amp, amp, phase; // amp = S(theta), phase = Theta(theta)
  double norm = 0;                               // integral of S^2 sin(theta) dtheta
  double pole_exponent = 0;                      // S ~ C theta^|kappa| at both poles
  bool ok = false;
  std::string error;
};

struct WaveProfile {
  RadialSamples radial;
  AngularSamples angular;
  std::vector<double> density; // 2 R(r)^2 S(pi/2)^2 on the radial grid
  double peak_r = 0;           // parabolic-refined argmax of the density
  double peak_density = 0;
  bool ok = false;
  std::string error;
};

// cumulative quadrature of the amplitude equations along converged connector
// orbits; the orbits must span the integration range. The radial amplitude
// stitches the unstable-manifold (forward) orbit on the left sheet to the
// stable-manifold (backward) orbit on the right, joined at the ring, because
// the bisected orbit departs the far saddle once the parameter residual
// amplifies.
RadialSamples integrate_lnR(const BoundState& state, const Orbit& forward, const Orbit& backward,
                            int n_r = 801, double r_max = 0);
AngularSamples integrate_lnS(const BoundState& state, const Orbit& orbit, int n_theta = 801);
// combine normalized radial and angular profiles into the equatorial density
WaveProfile assemble_density(const RadialSamples& radial, const AngularSamples& angular);

// amplitude along the radial connector orbit, resampled to n_r points on a
// sinh-stretched grid reaching r_max (<= 0 picks 50/sqrt(1-E^2))
RadialSamples radial_profile(const BoundState& state, int n_r = 801, double r_max = 0);
// amplitude along the angular connector orbit on a uniform grid in theta
AngularSamples angular_profile(const BoundState& state, int n_theta = 801);

WaveProfile wave_profile(const BoundState& state, int n_r = 801, int n_theta = 801,
                         double r_max = 0);

} // namespace zgkn
