#include "zgkn/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zgkn/ode.hpp"
#include "zgkn/omega_system.hpp"
#include "zgkn/theta_system.hpp"

namespace zgkn {

double simpson_uniform(const std::vector<double>& values, double h) {
  if (values.size() < 3 || values.size() % 2 == 0)
    throw std::invalid_argument("simpson_uniform: need an odd sample count >= 3");
  double sum = 0.0;
  for (std::size_t i = 0; i + 2 < values.size(); i += 2)
    sum += (h / 3.0) * (values[i] + 4.0 * values[i + 1] + values[i + 2]);
  return sum;
}

namespace {

// node of a phase orbit annotated with the log-amplitude slope
struct AmpNode {
  double x;      // abscissa of the amplitude equation (r or theta)
  double phase;  // lifted phase angle
  double dphase; // d(phase)/dx
  double slope;  // d(ln amp)/dx
  double dslope; // d(slope)/dx along the orbit
  double ln_amp; // cumulative integral of slope
};

// trapezoid with endpoint-derivative correction, exact for cubics:
// integral over [x0, x1] of s(x) ~ h (s0 + s1)/2 + h^2 (s0' - s1')/12
void accumulate(std::vector<AmpNode>& nodes) {
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const AmpNode& p = nodes[i - 1];
    AmpNode& q = nodes[i];
    double h = q.x - p.x;
    q.ln_amp = p.ln_amp + 0.5 * h * (p.slope + q.slope) + h * h * (p.dslope - q.dslope) / 12.0;
  }
}

// cubic Hermite interpolation of (value, derivative) data at a query abscissa
double hermite_scalar(double x0, double v0, double d0, double x1, double v1, double d1,
                      double x) {
  double h = x1 - x0;
  double s = (x - x0) / h;
  double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
  double h10 = s * (1 - s) * (1 - s);
  double h01 = s * s * (3 - 2 * s);
  double h11 = s * s * (s - 1);
  return h00 * v0 + h10 * h * d0 + h01 * v1 + h11 * h * d1;
}

struct NodeField {
  double AmpNode::* value;
  double AmpNode::* deriv;
};

double resample(const std::vector<AmpNode>& nodes, NodeField field, double x) {
  std::size_t lo = 0, hi = nodes.size() - 1;
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (nodes[mid].x <= x)
      lo = mid;
    else
      hi = mid;
  }
  const AmpNode& p = nodes[lo];
  const AmpNode& q = nodes[hi];
  return hermite_scalar(p.x, p.*(field.value), p.*(field.deriv), q.x, q.*(field.value),
                        q.*(field.deriv), x);
}

constexpr NodeField amp_field{&AmpNode::ln_amp, &AmpNode::slope};
constexpr NodeField phase_field{&AmpNode::phase, &AmpNode::dphase};

} // namespace

RadialSamples integrate_lnR(const BoundState& state, const Orbit& forward, const Orbit& backward,
                            int n_r, double r_max) {
  RadialSamples out;
  if (!state.converged) {
    out.error = "bound state not converged";
    return out;
  }
  if (n_r < 5) {
    out.error = "radial grid too short";
    return out;
  }
  if (!forward.ok || forward.samples.size() < 2 || !backward.ok || backward.samples.size() < 2) {
    out.error = "radial orbit unavailable";
    return out;
  }
  const double a = state.params.a, lambda = state.lambda;
  const double E = state.E;
  const double eta = std::sqrt((1.0 - E) * (1.0 + E));
  double extent = r_max > 0 ? r_max : 50.0 / eta;
  // the runners size their span from the same 50/eta target but through a
  // different floating-point route; clamp the default so a last-ulp mismatch
  // cannot reject an orbit that covers the range for every practical purpose
  if (r_max <= 0)
    extent = std::min({extent, -forward.samples.front().tau, backward.samples.back().tau});
  if (forward.samples.front().tau > -extent || backward.samples.back().tau < extent ||
      forward.samples.back().tau < 0.0 || backward.samples.front().tau > 0.0) {
    out.error = "radial orbit does not span the requested range";
    return out;
  }

  // the bisected parameter sits within tol of the exact connector, not on it, so
  // each orbit eventually departs the far saddle as the residual amplifies. The
  // unstable-manifold orbit is exact on the left sheet and the stable-manifold
  // orbit on the right, so stitch them at the ring (r = 0) where both errors are
  // exponentially small.
  std::vector<AmpNode> nodes;
  nodes.reserve(forward.samples.size() + backward.samples.size());
  OmegaContext octx{state.params, lambda};
  auto push_node = [&](const OrbitSample& s) {
    AmpNode n;
    n.x = s.tau; // radial orbits are parameterized by r itself
    n.phase = s.y;
    n.dphase = omega_rhs_r({n.x, n.phase}, octx, E);
    double w2 = n.x * n.x + a * a;
    double w = std::sqrt(w2);
    double sy = std::sin(n.phase), cy = std::cos(n.phase);
    n.slope = (n.x * sy - lambda * cy) / w;
    // total derivative along the orbit: explicit r-dependence plus phase motion
    double df_dr = sy / w - (n.x * sy - lambda * cy) * n.x / (w2 * w);
    double df_dphase = (n.x * cy + lambda * sy) / w;
    n.dslope = df_dr + df_dphase * n.dphase;
    n.ln_amp = 0.0;
    nodes.push_back(n);
  };
  for (const auto& s : forward.samples)
    if (s.tau <= 0.0) push_node(s);
  for (const auto& s : backward.samples)
    if (s.tau > nodes.back().x) push_node(s);
  accumulate(nodes);

  if (n_r % 2 == 0) ++n_r; // odd count for the closed Simpson rule
  const double r_c = std::max(a, 1e-3); // sinh stretching scale
  const double U = std::asinh(extent / r_c);
  out.r.resize(n_r);
  out.ln_amp.resize(n_r);
  out.amp.resize(n_r);
  out.phase.resize(n_r);
  std::vector<double> density_u(n_r);
  double max_ln = -HUGE_VAL;
  const double hu = 2.0 * U / (n_r - 1);
  for (int i = 0; i < n_r; ++i) {
    double u = -U + hu * i;
    double r = r_c * std::sinh(u);
    out.r[i] = r;
    out.ln_amp[i] = resample(nodes, amp_field, r);
    out.phase[i] = resample(nodes, phase_field, r);
    max_ln = std::max(max_ln, out.ln_amp[i]);
  }
  for (int i = 0; i < n_r; ++i) {
    double u = -U + hu * i;
    double amp = std::exp(out.ln_amp[i] - max_ln);
    density_u[i] = amp * amp * r_c * std::cosh(u); // R^2 dr = R^2 r_c cosh(u) du
  }
  double raw = simpson_uniform(density_u, hu);
  out.norm = raw * std::exp(2.0 * max_ln);
  double shift = max_ln + 0.5 * std::log(raw); // subtracting normalizes integral of R^2 to 1
  for (int i = 0; i < n_r; ++i) {
    out.ln_amp[i] -= shift;
    out.amp[i] = std::exp(out.ln_amp[i]);
  }
  out.ok = true;
  return out;
}

AngularSamples integrate_lnS(const BoundState& state, const Orbit& orbit, int n_theta) {
  AngularSamples out;
  if (!state.converged) {
    out.error = "bound state not converged";
    return out;
  }
  if (n_theta < 5) {
    out.error = "angular grid too short";
    return out;
  }
  if (!orbit.ok || orbit.samples.size() < 2) {
    out.error = "angular orbit unavailable";
    return out;
  }
  const double a = state.params.a, kappa = state.params.kappa, E = state.E;
  const double ak = std::abs(kappa);
  const double theta_min = 1e-3;
  if (orbit.samples.front().x > theta_min || orbit.samples.back().x < M_PI - theta_min) {
    out.error = "angular orbit does not span the requested range";
    return out;
  }

  ThetaContext tctx{state.params, E};
  std::vector<AmpNode> nodes;
  nodes.reserve(orbit.samples.size());
  for (const auto& s : orbit.samples) {
    AmpNode n;
    n.x = s.x;
    n.phase = s.y;
    double st = std::sin(n.x), ct = std::cos(n.x);
    double sT = std::sin(n.phase), cT = std::cos(n.phase);
    n.dphase = theta_rhs({n.x, n.phase}, tctx, state.lambda)[1] / st; // dTheta/dtheta
    double q = a * E * st - kappa / st;
    n.slope = -a * ct * sT - q * cT;
    double dq = a * E * ct + kappa * ct / (st * st);
    n.dslope = a * st * sT - dq * cT + (-a * ct * cT + q * sT) * n.dphase;
    n.ln_amp = 0.0;
    nodes.push_back(n);
  }
  accumulate(nodes);

  if (n_theta % 2 == 0) ++n_theta; // odd count keeps the equator as the center sample
  out.theta.resize(n_theta);
  out.ln_amp.resize(n_theta);
  out.amp.resize(n_theta);
  out.phase.resize(n_theta);
  out.pole_exponent = ak;
  const double h = (M_PI - 2.0 * theta_min) / (n_theta - 1);
  double max_ln = -HUGE_VAL;
  for (int i = 0; i < n_theta; ++i) {
    double th = theta_min + h * i;
    out.theta[i] = th;
    out.ln_amp[i] = resample(nodes, amp_field, th);
    out.phase[i] = resample(nodes, phase_field, th);
    max_ln = std::max(max_ln, out.ln_amp[i]);
  }
  std::vector<double> density(n_theta);
  for (int i = 0; i < n_theta; ++i) {
    double amp = std::exp(out.ln_amp[i] - max_ln);
    density[i] = amp * amp * std::sin(out.theta[i]);
  }
  double raw = simpson_uniform(density, h);
  // close the pole gaps with the leading S ~ C theta^|kappa| asymptote:
  // integral of C^2 theta^(2k) sin(theta) over [0, theta_min], sin expanded to cubic order
  auto pole_piece = [&](double ln_amp_edge) {
    double c2 = std::exp(2.0 * (ln_amp_edge - max_ln)) / std::pow(theta_min, 2.0 * ak);
    double p = 2.0 * ak;
    return c2 * (std::pow(theta_min, p + 2.0) / (p + 2.0) -
                 std::pow(theta_min, p + 4.0) / (6.0 * (p + 4.0)));
  };
  raw += pole_piece(out.ln_amp.front()) + pole_piece(out.ln_amp.back());
  out.norm = raw * std::exp(2.0 * max_ln);
  double shift = max_ln + 0.5 * std::log(raw);
  for (int i = 0; i < n_theta; ++i) {
    out.ln_amp[i] -= shift;
    out.amp[i] = std::exp(out.ln_amp[i]);
  }
  out.ok = true;
  return out;
}

WaveProfile assemble_density(const RadialSamples& radial, const AngularSamples& angular) {
  WaveProfile out;
  out.radial = radial;
  out.angular = angular;
  if (!radial.ok || !angular.ok) {
    out.error = radial.ok ? angular.error : radial.error;
    return out;
  }
  // equatorial slice: the angular grid is symmetric with an odd count, so the
  // center sample sits exactly on the equator
  double s_eq = angular.amp[(angular.amp.size() - 1) / 2];
  out.density.resize(radial.r.size());
  for (std::size_t i = 0; i < radial.r.size(); ++i)
    out.density[i] = 2.0 * radial.amp[i] * radial.amp[i] * s_eq * s_eq;
  std::size_t best = 0;
  for (std::size_t i = 1; i < out.density.size(); ++i)
    if (out.density[i] > out.density[best]) best = i;
  out.peak_r = radial.r[best];
  out.peak_density = out.density[best];
  if (best > 0 && best + 1 < out.density.size()) {
    // parabolic vertex through three non-uniformly spaced points
    double x0 = radial.r[best - 1], x1 = radial.r[best], x2 = radial.r[best + 1];
    double y0 = out.density[best - 1], y1 = out.density[best], y2 = out.density[best + 1];
    double d01 = (y1 - y0) / (x1 - x0), d12 = (y2 - y1) / (x2 - x1);
    double curv = (d12 - d01) / (x2 - x0);
    if (curv < 0) {
      double vertex = 0.5 * (x0 + x1 - d01 / curv);
      if (vertex > x0 && vertex < x2) {
        out.peak_r = vertex;
        // evaluate the interpolating parabola exactly at the vertex
        double l0 = (vertex - x1) * (vertex - x2) / ((x0 - x1) * (x0 - x2));
        double l1 = (vertex - x0) * (vertex - x2) / ((x1 - x0) * (x1 - x2));
        double l2 = (vertex - x0) * (vertex - x1) / ((x2 - x0) * (x2 - x1));
        out.peak_density = l0 * y0 + l1 * y1 + l2 * y2;
      }
    }
  }
  out.ok = true;
  return out;
}

RadialSamples radial_profile(const BoundState& state, int n_r, double r_max) {
  RadialSamples out;
  if (!state.converged) {
    out.error = "bound state not converged";
    return out;
  }
  OmegaContext octx{state.params, state.lambda};
  CylinderField field = omega_field(octx);
  Orbit fwd = field.forward_runner(state.E);
  Orbit bwd = field.backward_runner(state.E, state.target.n_omega);
  return integrate_lnR(state, fwd, bwd, n_r, r_max);
}

AngularSamples angular_profile(const BoundState& state, int n_theta) {
  AngularSamples out;
  if (!state.converged) {
    out.error = "bound state not converged";
    return out;
  }
  ThetaContext tctx{state.params, state.E};
  CylinderField field = theta_field(tctx);
  field.mu = state.lambda;
  ThetaSaddles saddles = saddle_data(tctx, state.lambda);
  Orbit orbit = integrate_unstable(field, saddles.s_minus, saddles.unstable_tangent,
                                   field.launch_offset, field.span);
  return integrate_lnS(state, orbit, n_theta);
}

WaveProfile wave_profile(const BoundState& state, int n_r, int n_theta, double r_max) {
  return assemble_density(radial_profile(state, n_r, r_max), angular_profile(state, n_theta));
}

} // namespace zgkn
