#pragma once
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace zgkn {

struct OdeOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_step = 0.0;   // 0: uncapped
  double init_step = 1e-4;
  std::size_t max_steps = 4000000;
  double max_delta = 0.0;  // 0: uncapped; else reject steps moving any component further than this
};

template <std::size_t D>
struct OdePoint {
  double t;
  std::array<double, D> y;
  std::array<double, D> dy;
};

template <std::size_t D>
struct OdeSolution {
  std::vector<OdePoint<D>> points;
  bool ok = true;
  bool stopped = false; // stop predicate fired before reaching t1
  std::string error;
};

// Dormand-Prince embedded 4(5) pair with FSAL. Integrates y' = f(t, y) from t0
// toward t1 (either direction); stop(t, y) checked on accepted samples.
template <std::size_t D, class F, class Stop>
OdeSolution<D> integrate_dp45(F&& f, double t0, double t1, std::array<double, D> y0,
                              const OdeOptions& opt, Stop&& stop) {
  using State = std::array<double, D>;
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                          e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                          e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

  OdeSolution<D> sol;
  const double dir = (t1 >= t0) ? 1.0 : -1.0;
  const double span = std::abs(t1 - t0);
  if (span == 0.0) {
    sol.points.push_back({t0, y0, f(t0, y0)});
    return sol;
  }
  double h = std::min(std::abs(opt.init_step), span) * dir;
  if (opt.max_step > 0.0 && std::abs(h) > opt.max_step) h = opt.max_step * dir;

  double t = t0;
  State y = y0;
  State k1 = f(t, y);
  sol.points.push_back({t, y, k1});
  if (stop(t, y)) {
    sol.stopped = true;
    return sol;
  }

  auto finite = [](const State& v) {
    for (double x : v)
      if (!std::isfinite(x)) return false;
    return true;
  };

  for (std::size_t step = 0; step < opt.max_steps; ++step) {
    if ((t - t1) * dir >= 0.0) return sol; // reached the far end
    if ((t + h - t1) * dir > 0.0) h = t1 - t;
    if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(t))) {
      sol.ok = false;
      sol.error = "step size underflow";
      return sol;
    }

    State y2, y3, y4, y5s, y6, y7;
    for (std::size_t i = 0; i < D; ++i) y2[i] = y[i] + h * a21 * k1[i];
    State k2 = f(t + c2 * h, y2);
    for (std::size_t i = 0; i < D; ++i) y3[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    State k3 = f(t + c3 * h, y3);
    for (std::size_t i = 0; i < D; ++i) y4[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    State k4 = f(t + c4 * h, y4);
    for (std::size_t i = 0; i < D; ++i)
      y5s[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    State k5 = f(t + c5 * h, y5s);
    for (std::size_t i = 0; i < D; ++i)
      y6[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    State k6 = f(t + h, y6);
    for (std::size_t i = 0; i < D; ++i)
      y7[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    State k7 = f(t + h, y7);

    if (!finite(y7) || !finite(k7)) {
      sol.ok = false;
      sol.error = "non-finite state";
      return sol;
    }

    double err = 0.0;
    for (std::size_t i = 0; i < D; ++i) {
      double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      double sc = opt.abs_tol + opt.rel_tol * std::max(std::abs(y[i]), std::abs(y7[i]));
      err += (ei / sc) * (ei / sc);
    }
    err = std::sqrt(err / static_cast<double>(D));

    bool too_far = false;
    if (opt.max_delta > 0.0)
      for (std::size_t i = 0; i < D; ++i)
        if (std::abs(y7[i] - y[i]) > opt.max_delta) too_far = true;

    if (err <= 1.0 && !too_far) {
      t += h;
      y = y7;
      k1 = k7; // FSAL
      sol.points.push_back({t, y, k1});
      if (stop(t, y)) {
        sol.stopped = true;
        return sol;
      }
      double fac = (err == 0.0) ? 5.0 : 0.9 * std::pow(err, -0.2);
      fac = std::min(5.0, std::max(0.2, fac));
      h *= fac;
    } else if (too_far) {
      h *= 0.5;
    } else {
      double fac = 0.9 * std::pow(err, -0.2);
      fac = std::min(0.9, std::max(0.1, fac));
      h *= fac;
    }
    if (opt.max_step > 0.0 && std::abs(h) > opt.max_step) h = opt.max_step * dir;
  }
  sol.ok = false;
  sol.error = "step budget exhausted";
  return sol;
}

// cubic Hermite value on [p0.t, p1.t]
template <std::size_t D>
std::array<double, D> hermite_eval(const OdePoint<D>& p0, const OdePoint<D>& p1, double t) {
  const double h = p1.t - p0.t;
  const double s = (t - p0.t) / h;
  const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
  const double h10 = s * (1 - s) * (1 - s);
  const double h01 = s * s * (3 - 2 * s);
  const double h11 = s * s * (s - 1);
  std::array<double, D> out{};
  for (std::size_t i = 0; i < D; ++i)
    out[i] = h00 * p0.y[i] + h10 * h * p0.dy[i] + h01 * p1.y[i] + h11 * h * p1.dy[i];
  return out;
}

// composite Simpson on a uniform grid; values.size() must be odd and >= 3
double simpson_uniform(const std::vector<double>& values, double h);

} // namespace zgkn
