#include "zgkn/cylinder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zgkn/ode.hpp"

namespace zgkn {

namespace {

constexpr double two_pi = 2.0 * M_PI;

double fd_fprime(const CylinderField& field, double x) {
  double h = 1e-6;
  return (field.f(x + h) - field.f(x - h)) / (2.0 * h);
}

double fd_gx(const CylinderField& field, double x, double y) {
  double h = 1e-6;
  return (field.g(x + h, y, field.mu) - field.g(x - h, y, field.mu)) / (2.0 * h);
}

double fd_gy(const CylinderField& field, double x, double y) {
  double h = 1e-6;
  return (field.g(x, y + h, field.mu) - field.g(x, y - h, field.mu)) / (2.0 * h);
}

Orbit run_flow(const CylinderField& field, std::array<double, 2> y0, double tau_end,
               bool backward) {
  OdeOptions opt;
  opt.rel_tol = 1e-10;
  opt.abs_tol = 1e-12;
  opt.max_delta = 1.0; // keep lifted-angle jumps well below pi between samples
  auto rhs = [&field](double, const std::array<double, 2>& s) -> std::array<double, 2> {
    return {field.f(s[0]), field.g(s[0], s[1], field.mu)};
  };
  auto stop = backward
                  ? std::function<bool(double, const std::array<double, 2>&)>(
                        [&field](double, const std::array<double, 2>& s) {
                          return s[0] <= field.x_minus + field.terminal_band;
                        })
                  : std::function<bool(double, const std::array<double, 2>&)>(
                        [&field](double, const std::array<double, 2>& s) {
                          return s[0] >= field.x_plus - field.terminal_band;
                        });
  auto sol = integrate_dp45<2>(rhs, 0.0, tau_end, y0, opt, stop);
  Orbit orbit;
  orbit.ok = sol.ok;
  orbit.error = sol.error;
  orbit.backward = backward;
  orbit.samples.reserve(sol.points.size());
  for (const auto& p : sol.points) orbit.samples.push_back({p.t, p.y[0], p.y[1]});
  if (!sol.stopped && orbit.ok) {
    orbit.ok = false;
    orbit.error = "orbit did not reach the terminal band";
  }
  if (backward) std::reverse(orbit.samples.begin(), orbit.samples.end());
  return orbit;
}

// unstable eigendirection (1, b) of the left saddle: b = g_x / (f' - g_y)
std::array<double, 2> left_tangent(const CylinderField& field, double x, double y) {
  double fp = fd_fprime(field, x);
  double gy = fd_gy(field, x, y);
  double gx = fd_gx(field, x, y);
  return {1.0, gx / (fp - gy)};
}

} // namespace

Orbit integrate_unstable(const CylinderField& field, std::array<double, 2> start_saddle,
                         std::array<double, 2> direction, double offset, double span) {
  if (!(offset > 0.0))
    throw std::invalid_argument("integrate_unstable: offset must be positive");
  double norm = std::hypot(direction[0], direction[1]);
  std::array<double, 2> y0{start_saddle[0] + offset * direction[0] / norm,
                           start_saddle[1] + offset * direction[1] / norm};
  return run_flow(field, y0, span, false);
}

Orbit integrate_stable_backward(const CylinderField& field, int winding) {
  Equilibria eq = field.equilibria(field.mu);
  double y_start = eq.s_plus - two_pi * winding;
  // stable eigendirection of the right saddle, pointing into the interior
  double fp = fd_fprime(field, field.x_plus);
  double gy = fd_gy(field, field.x_plus, eq.s_plus);
  double gx = fd_gx(field, field.x_plus, eq.s_plus);
  double b = gx / (fp - gy);
  double norm = std::hypot(1.0, b);
  std::array<double, 2> y0{field.x_plus - field.launch_offset / norm,
                           y_start - field.launch_offset * b / norm};
  Orbit orbit = run_flow(field, y0, -field.span, true);
  orbit.start_shift = winding;
  return orbit;
}

void classify_terminal(Orbit& orbit, const CylinderField& field) {
  orbit.classified = false;
  orbit.terminal = TerminalType::none;
  if (!orbit.ok || orbit.samples.empty()) return;
  const OrbitSample& end = orbit.backward ? orbit.samples.front() : orbit.samples.back();
  double band_edge = orbit.backward ? field.x_minus + 1.5 * field.terminal_band
                                    : field.x_plus - 1.5 * field.terminal_band;
  if (orbit.backward ? (end.x > band_edge) : (end.x < band_edge)) return;
  Equilibria eq = field.equilibria(field.mu);
  double saddle = orbit.backward ? eq.s_minus : eq.s_plus;
  double sink = orbit.backward ? eq.n_minus : eq.n_plus;
  int k_saddle = static_cast<int>(std::llround((saddle - end.y) / two_pi));
  int k_sink = static_cast<int>(std::llround((sink - end.y) / two_pi));
  double gap_saddle = std::abs(saddle - two_pi * k_saddle - end.y);
  double gap_sink = std::abs(sink - two_pi * k_sink - end.y);
  if (gap_saddle <= gap_sink) {
    orbit.terminal = TerminalType::saddle;
    orbit.lift_shift = k_saddle;
    orbit.terminal_gap = gap_saddle;
  } else {
    orbit.terminal = TerminalType::sink;
    orbit.lift_shift = k_sink;
    orbit.terminal_gap = gap_sink;
  }
  orbit.classified = true;
}

int winding_of(const Orbit& orbit, const CylinderField&) {
  if (!orbit.classified)
    throw std::runtime_error("winding_of: orbit terminal not classified");
  return orbit.backward ? orbit.start_shift - orbit.lift_shift : orbit.lift_shift;
}

namespace {

Orbit forward_at(const CylinderField& field, double mu) {
  CylinderField local = field;
  local.mu = mu;
  Orbit orbit;
  if (field.forward_runner) {
    orbit = field.forward_runner(mu);
  } else {
    Equilibria eq = local.equilibria(mu);
    auto dir = left_tangent(local, local.x_minus, eq.s_minus);
    orbit = integrate_unstable(local, {local.x_minus, eq.s_minus}, dir, local.launch_offset,
                               local.span);
  }
  if (!orbit.classified) classify_terminal(orbit, local);
  return orbit;
}

Orbit backward_at(const CylinderField& field, double mu, int winding) {
  CylinderField local = field;
  local.mu = mu;
  Orbit orbit;
  if (field.backward_runner)
    orbit = field.backward_runner(mu, winding);
  else
    orbit = integrate_stable_backward(local, winding);
  if (!orbit.classified) classify_terminal(orbit, local);
  return orbit;
}

} // namespace

ConnectorResult find_connector(const CylinderField& field, int target_winding,
                               std::pair<double, double> bracket, double tol) {
  ConnectorResult res;
  const double o = field.orientation >= 0 ? 1.0 : -1.0;
  double nu_lo = std::min(o * bracket.first, o * bracket.second);
  double nu_hi = std::max(o * bracket.first, o * bracket.second);
  auto past = [&](double nu) -> int { // 1: winding beyond target, 0: not yet, -1: failed
    Orbit orbit = forward_at(field, o * nu);
    if (!orbit.ok || !orbit.classified) {
      res.error = orbit.error.empty() ? "orbit classification failed" : orbit.error;
      return -1;
    }
    return winding_of(orbit, field) >= target_winding + 1 ? 1 : 0;
  };
  int at_lo = past(nu_lo);
  if (at_lo < 0) return res;
  int at_hi = past(nu_hi);
  if (at_hi < 0) return res;
  if (at_lo != 0 || at_hi != 1) {
    res.error = "bracket does not straddle the connector";
    res.bracket = {std::min(o * nu_lo, o * nu_hi), std::max(o * nu_lo, o * nu_hi)};
    return res;
  }
  int budget = static_cast<int>(std::ceil(std::log2(std::max(2.0, (nu_hi - nu_lo) / tol)))) + 8;
  int iter = 0;
  while (nu_hi - nu_lo > tol && iter < budget) {
    double mid = 0.5 * (nu_lo + nu_hi);
    int side = past(mid);
    if (side < 0) return res;
    if (side == 1)
      nu_hi = mid;
    else
      nu_lo = mid;
    ++iter;
  }
  double nu_star = 0.5 * (nu_lo + nu_hi);
  res.mu_star = o * nu_star;
  res.orbit = forward_at(field, res.mu_star);
  res.winding = target_winding;
  res.iterations = iter;
  res.bracket = {std::min(o * nu_lo, o * nu_hi), std::max(o * nu_lo, o * nu_hi)};
  Equilibria eq = field.equilibria(res.mu_star);
  res.terminal_lift = eq.s_plus - two_pi * target_winding;
  res.converged = res.orbit.ok && res.orbit.classified;
  if (!res.converged && res.error.empty())
    res.error = res.orbit.error.empty() ? "final orbit failed" : res.orbit.error;
  return res;
}

double signed_area(const CylinderField& field, double mu, int target_winding) {
  Orbit fwd = forward_at(field, mu);
  Orbit bwd = backward_at(field, mu, target_winding);
  if (!fwd.ok || !bwd.ok || fwd.samples.size() < 2 || bwd.samples.size() < 2)
    return std::nan("");
  double xa = std::max(fwd.samples.front().x, bwd.samples.front().x);
  double xb = std::min(fwd.samples.back().x, bwd.samples.back().x);
  if (!(xb > xa)) return std::nan("");
  // piecewise-linear resample of both lifted angles onto a shared grid
  auto resample = [](const Orbit& orbit, double x) {
    const auto& s = orbit.samples;
    std::size_t lo = 0, hi = s.size() - 1;
    while (hi - lo > 1) {
      std::size_t mid = (lo + hi) / 2;
      if (s[mid].x <= x)
        lo = mid;
      else
        hi = mid;
    }
    double t = (x - s[lo].x) / (s[hi].x - s[lo].x);
    return s[lo].y + t * (s[hi].y - s[lo].y);
  };
  const int n = 2001;
  std::vector<double> diff(n);
  double h = (xb - xa) / (n - 1);
  for (int i = 0; i < n; ++i) {
    double x = xa + h * i;
    diff[i] = resample(bwd, x) - resample(fwd, x);
  }
  double area = 0.0;
  for (int i = 0; i + 2 < n; i += 2) area += (h / 3.0) * (diff[i] + 4.0 * diff[i + 1] + diff[i + 2]);
  return area;
}

AssumptionReport check_assumptions(const CylinderField& field, int grid_x, int grid_y) {
  AssumptionReport rep;
  std::string detail;
  const double width = field.x_plus - field.x_minus;

  // (a) x-speed vanishes on the boundary circles and is positive inside
  bool axis_ok = std::abs(field.f(field.x_minus)) < 1e-9 && std::abs(field.f(field.x_plus)) < 1e-9;
  for (int i = 1; i < grid_x && axis_ok; ++i) {
    double x = field.x_minus + width * i / grid_x;
    if (x >= field.x_plus) break;
    if (!(field.f(x) > 0.0)) {
      axis_ok = false;
      detail += "f not positive at interior x; ";
    }
  }
  rep.axis_speed_ok = axis_ok;
  if (!axis_ok && detail.empty()) detail += "f does not vanish on a boundary; ";

  // (b) each boundary circle carries exactly two equilibria with the expected
  // stability pattern: left saddle g_y < 0 and node g_y > 0, right circle swapped
  Equilibria eq = field.equilibria(field.mu);
  auto circle_roots = [&](double xb) {
    std::vector<double> roots;
    // start half a cell below the domain base so a root sitting exactly on the
    // seam produces a sign change inside the first cell instead of vanishing
    double y0 = field.y_base - M_PI / grid_y;
    double prev_y = y0, prev_g = field.g(xb, prev_y, field.mu);
    for (int i = 1; i <= grid_y; ++i) {
      double y = y0 + two_pi * i / grid_y;
      double gy = field.g(xb, y, field.mu);
      if (prev_g == 0.0)
        roots.push_back(prev_y);
      else if (gy != 0.0 && std::signbit(gy) != std::signbit(prev_g)) {
        double a = prev_y, b = y, ga = prev_g;
        for (int it = 0; it < 100; ++it) {
          double m = 0.5 * (a + b);
          double gm = field.g(xb, m, field.mu);
          if (gm == 0.0) {
            a = b = m;
            break;
          }
          if (std::signbit(gm) == std::signbit(ga)) {
            a = m;
            ga = gm;
          } else
            b = m;
        }
        roots.push_back(0.5 * (a + b));
      }
      prev_y = y;
      prev_g = gy;
    }
    return roots;
  };
  auto gy_at = [&](double xb, double y) {
    double h = 1e-6;
    return (field.g(xb, y + h, field.mu) - field.g(xb, y - h, field.mu)) / (2.0 * h);
  };
  auto near = [](double a, double b) {
    double d = std::fmod(std::abs(a - b), two_pi);
    return std::min(d, two_pi - d) < 1e-6;
  };
  bool eq_ok = true;
  {
    auto left = circle_roots(field.x_minus);
    auto right = circle_roots(field.x_plus);
    if (left.size() != 2 || right.size() != 2) {
      eq_ok = false;
      detail += "boundary circle does not carry exactly two equilibria; ";
    } else {
      for (double y : left) {
        if (near(y, eq.s_minus) && !(gy_at(field.x_minus, y) < 0)) eq_ok = false;
        if (near(y, eq.n_minus) && !(gy_at(field.x_minus, y) > 0)) eq_ok = false;
      }
      for (double y : right) {
        if (near(y, eq.s_plus) && !(gy_at(field.x_plus, y) > 0)) eq_ok = false;
        if (near(y, eq.n_plus) && !(gy_at(field.x_plus, y) < 0)) eq_ok = false;
      }
      if (!eq_ok) detail += "boundary equilibrium has the wrong transverse stability; ";
    }
  }
  rep.boundary_equilibria_ok = eq_ok;

  // (c) equilibria sit in the fundamental domain in the expected order
  auto in_domain = [&](double y) {
    return y >= field.y_base - 1e-9 && y < field.y_base + two_pi + 1e-9;
  };
  bool ord_ok = in_domain(eq.s_minus) && in_domain(eq.n_minus) && in_domain(eq.s_plus) &&
                in_domain(eq.n_plus) && eq.n_minus <= eq.s_minus && eq.s_plus <= eq.n_plus;
  rep.domain_ordering_ok = ord_ok;
  if (!ord_ok) detail += "equilibria leave the fundamental domain or break the order; ";

  // (d) the angular drive is monotone in the normalized parameter
  bool mono_ok = true;
  double hmu = 1e-6;
  for (int i = 1; i < grid_x && mono_ok; ++i) {
    double x = field.x_minus + width * i / grid_x;
    for (int j = 0; j < grid_y && mono_ok; ++j) {
      double y = field.y_base + two_pi * j / grid_y;
      double up = field.g(x, y, field.mu + field.orientation * hmu);
      double dn = field.g(x, y, field.mu - field.orientation * hmu);
      if ((up - dn) / (2.0 * hmu) > 1e-9) {
        mono_ok = false;
        detail += "angular drive increases with the normalized parameter; ";
      }
    }
  }
  rep.parameter_monotone_ok = mono_ok;

  rep.heteroclinic_note = field.heteroclinic_note;
  rep.all_ok = rep.axis_speed_ok && rep.boundary_equilibria_ok && rep.domain_ordering_ok &&
               rep.parameter_monotone_ok;
  rep.detail = detail;
  return rep;
}

} // namespace zgkn
