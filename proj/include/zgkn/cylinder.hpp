#pragma once
#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace zgkn {

// Engine for autonomous planar flows on a finite cylinder [x_minus, x_plus] x S^1:
//   x' = f(x) with f = 0 on the boundaries and f > 0 inside,
//   y' = g(x, y, mu) with exactly two equilibria on each boundary circle.
// Orbits are computed on the universal cover (y unrolled to the real line).

enum class TerminalType { none, saddle, sink };

struct OrbitSample {
  double tau; // integration parameter (system-specific; the radial form uses r)
  double x;
  double y; // lifted angle
};

struct Orbit {
  std::vector<OrbitSample> samples;
  bool ok = false;
  std::string error;
  bool classified = false;
  TerminalType terminal = TerminalType::none;
  int lift_shift = 0;      // terminal lift = equilibrium - 2*pi*lift_shift
  double terminal_gap = 0; // |y_end - snapped lift|
  bool backward = false;   // integrated right-to-left (stable-manifold orbit)
  int start_shift = 0;     // lift sheet of the launch saddle, backward orbits only
};

struct Equilibria {
  double s_minus = 0, n_minus = 0; // angles on x = x_minus, fundamental domain values
  double s_plus = 0, n_plus = 0;   // angles on x = x_plus
};

struct CylinderField {
  double x_minus = 0, x_plus = 0;
  double y_base = 0; // fundamental domain [y_base, y_base + 2*pi)
  std::function<double(double)> f;
  std::function<double(double, double, double)> g; // g(x, y, mu)
  std::function<Equilibria(double)> equilibria;    // at parameter mu
  double mu = 0;
  int orientation = +1; // +1: winding nondecreasing in mu; -1: in -mu
  double launch_offset = 1e-6;
  double terminal_band = 1e-3; // classify when within this of x_plus
  double span = 60.0;          // default integration span in tau
  // optional per-parameter orbit constructors; when absent the engine integrates
  // (f, g) in tau from a finite-difference linearization of the boundary saddles
  std::function<Orbit(double mu)> forward_runner;
  std::function<Orbit(double mu, int winding)> backward_runner;
  std::string heteroclinic_note; // attestation for the no-interior-limit-sets assumption
};

struct ConnectorResult {
  bool converged = false;
  double mu_star = 0;
  Orbit orbit; // orbit at mu_star
  int winding = 0;
  std::pair<double, double> bracket{0, 0}; // final bisection bracket, ascending
  int iterations = 0;
  double terminal_lift = 0; // saddle lift s_plus - 2*pi*winding hit by the connector
  std::string error;
};

struct AssumptionReport {
  bool axis_speed_ok = false;         // f zero on boundaries, positive inside
  bool boundary_equilibria_ok = false; // two roots per boundary with the right dg/dy signs
  bool domain_ordering_ok = false;     // equilibria inside the fundamental domain, expected order
  bool parameter_monotone_ok = false;  // dg/d(normalized mu) <= 0 on a sample grid
  std::string heteroclinic_note;
  bool all_ok = false;
  std::string detail;
};

// forward orbit of the unstable manifold of a left-boundary saddle; classification
// snaps the terminal angle to the nearest right-boundary equilibrium lift.
// Throws std::invalid_argument when offset <= 0 (the saddle itself is a fixed point).
Orbit integrate_unstable(const CylinderField& field, std::array<double, 2> start_saddle,
                         std::array<double, 2> direction, double offset, double span);

// backward orbit of the stable manifold into the right saddle on lift sheet -winding
Orbit integrate_stable_backward(const CylinderField& field, int winding);

void classify_terminal(Orbit& orbit, const CylinderField& field);

// terminal lift shift of a classified orbit; backward orbits report start_shift - lift_shift
// so that the two sides of a connector agree. Throws std::runtime_error when unclassified.
int winding_of(const Orbit& orbit, const CylinderField& field);

// bisection for the parameter where the terminal lift jumps past winding target_winding
ConnectorResult find_connector(const CylinderField& field, int target_winding,
                               std::pair<double, double> bracket, double tol);

// integral of (stable minus unstable) orbit angles over their x-overlap; zero at a connector
double signed_area(const CylinderField& field, double mu, int target_winding);

AssumptionReport check_assumptions(const CylinderField& field, int grid_x, int grid_y);

} // namespace zgkn
