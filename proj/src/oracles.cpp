#include "zgkn/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace zgkn {

namespace {

int sgn(int n) { return n > 0 ? 1 : -1; }

void require_level(int N) {
  if (N == 0) throw std::invalid_argument("level index N must be nonzero");
}

// cancellation-free internals of the Coulomb-type closed form.
// rho = sqrt(k^2 - gamma^2), s = M + rho, T = sqrt(s^2 + gamma^2);
// then E = s/T, eta = -gamma/T, and the series ratio mu = -(T + k)/(M + 2 rho)
struct GordonCore {
  double rho, s, T, E, eta, mu, w; // w = sqrt((1-E)/(1+E)) = sqrt((T-s)/(T+s))
};

GordonCore gordon_core(const SommerfeldIndex& idx) {
  if (idx.k == 0) throw std::invalid_argument("k must be nonzero");
  if (idx.M < 0) throw std::invalid_argument("M must be >= 0");
  if (idx.k > 0 && idx.M == 0) throw std::invalid_argument("k > 0 requires M >= 1");
  if (!(std::abs(idx.gamma) < std::abs(double(idx.k))))
    throw std::invalid_argument("|gamma| must be below |k|");
  GordonCore c;
  c.rho = std::sqrt(double(idx.k) * idx.k - idx.gamma * idx.gamma);
  c.s = idx.M + c.rho;
  c.T = std::sqrt(c.s * c.s + idx.gamma * idx.gamma);
  c.E = c.s / c.T;
  c.eta = -idx.gamma / c.T;
  c.mu = -(c.T + idx.k) / (idx.M + 2.0 * c.rho);
  c.w = std::sqrt((c.T - c.s) / (c.T + c.s));
  return c;
}

// numerator/denominator combinations of the phase ratio at x = 2 eta r
double gordon_num(const GordonCore& c, int M, double x) {
  return c.mu * hyp1f1_terminating(M - 1, 2.0 * c.rho + 1.0, x) -
         hyp1f1_terminating(M, 2.0 * c.rho + 1.0, x);
}
double gordon_den(const GordonCore& c, int M, double x) {
  return c.mu * hyp1f1_terminating(M - 1, 2.0 * c.rho + 1.0, x) +
         hyp1f1_terminating(M, 2.0 * c.rho + 1.0, x);
}

// all roots of a smooth function on (lo, hi) located by sign changes on a
// dense grid followed by bisection; expects simple roots
template <class F>
std::vector<double> grid_roots(const F& f, double lo, double hi, int samples) {
  std::vector<double> roots;
  double prev_x = lo, prev_f = f(lo);
  for (int i = 1; i <= samples; ++i) {
    double x = lo + (hi - lo) * i / samples;
    double fx = f(x);
    if (prev_f == 0.0) {
      roots.push_back(prev_x);
    } else if (fx != 0.0 && std::signbit(fx) != std::signbit(prev_f)) {
      double a = prev_x, b = x, fa = prev_f;
      for (int it = 0; it < 200; ++it) {
        double m = 0.5 * (a + b);
        double fm = f(m);
        if (fm == 0.0) {
          a = b = m;
          break;
        }
        if (std::signbit(fm) == std::signbit(fa)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
        if (b - a < 1e-15 * std::max(1.0, std::abs(m))) break;
      }
      roots.push_back(0.5 * (a + b));
    }
    prev_x = x;
    prev_f = fx;
  }
  return roots;
}

// roots of the Jacobi polynomial P_n^{(alpha,beta)} in (-1, 1), ascending
std::vector<double> jacobi_roots(int n, double alpha, double beta) {
  if (n <= 0) return {};
  auto f = [&](double x) { return jacobi_polynomial(n, alpha, beta, x); };
  return grid_roots(f, -1.0 + 1e-12, 1.0 - 1e-12, 512 * (n + 1));
}

// root sets are reused heavily by residual scans; cache per index
const std::vector<double>& cached_gordon_roots(const SommerfeldIndex& idx) {
  static std::map<std::tuple<int, int, double>, std::vector<double>> cache;
  static std::mutex guard;
  std::lock_guard<std::mutex> lock(guard);
  auto key = std::make_tuple(idx.M, idx.k, idx.gamma);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  GordonCore c = gordon_core(idx);
  std::vector<double> roots;
  if (idx.M > 0) {
    auto f = [&](double x) { return gordon_den(c, idx.M, x); };
    // polynomial of degree M in x = 2 eta r; its roots sit well below this bound
    double x_hi = 4.0 * (idx.M + c.rho + 2.0) * (idx.M + c.rho + 2.0);
    auto xr = grid_roots(f, 1e-14, x_hi, 4096 * (idx.M + 1));
    auto check = grid_roots(f, 1e-14, x_hi, 2 * 4096 * (idx.M + 1));
    if (xr.size() != check.size())
      throw std::runtime_error("unresolved root cluster in phase denominator");
    for (double& x : xr) x /= 2.0 * c.eta;
    roots = std::move(xr);
  }
  return cache.emplace(key, std::move(roots)).first->second;
}

} // namespace

double sommerfeld_energy(const SommerfeldIndex& idx) {
  if (idx.k == 0) throw std::invalid_argument("k must be nonzero");
  if (idx.M < 0) throw std::invalid_argument("M must be >= 0");
  if (!(std::abs(idx.gamma) < std::abs(double(idx.k))))
    throw std::invalid_argument("|gamma| must be below |k|");
  double rho = std::sqrt(double(idx.k) * idx.k - idx.gamma * idx.gamma);
  double d = idx.M + rho;
  return 1.0 / std::sqrt(1.0 + idx.gamma * idx.gamma / (d * d));
}

int a0_angular_k(int N, double kappa) {
  require_level(N);
  if (!is_half_integer(kappa)) throw std::invalid_argument("kappa must be a half-integer");
  int q = static_cast<int>(std::llround(std::abs(kappa) - 0.5)); // |kappa| = q + 1/2
  return -sgn(N) * (q + std::abs(N));
}

double jacobi_polynomial(int n, double alpha, double beta, double x) {
  if (n < 0) throw std::invalid_argument("jacobi_polynomial: n must be >= 0");
  if (n == 0) return 1.0;
  double p0 = 1.0;
  double p1 = (alpha + 1.0) + 0.5 * (alpha + beta + 2.0) * (x - 1.0);
  for (int m = 2; m <= n; ++m) {
    double ab = alpha + beta;
    double c1 = 2.0 * m * (m + ab) * (2.0 * m + ab - 2.0);
    double c2 = (2.0 * m + ab - 1.0) *
                ((2.0 * m + ab) * (2.0 * m + ab - 2.0) * x + alpha * alpha - beta * beta);
    double c3 = 2.0 * (m + alpha - 1.0) * (m + beta - 1.0) * (2.0 * m + ab);
    double p2 = (c2 * p1 - c3 * p0) / c1;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double jacobi_theta_connector(int N, double kappa, double theta) {
  require_level(N);
  if (!(theta >= 0.0 && theta <= M_PI))
    throw std::invalid_argument("theta must lie in [0, pi]");
  double ak = std::abs(kappa);
  int deg = std::abs(N) - 1;
  double base = kappa > 0 ? 0.0 : M_PI;
  // ratio = P^{(ak+1/2, ak-1/2)} / P^{(ak-1/2, ak+1/2)} for both signs of kappa;
  // the sign only moves the launch saddle (base 0 vs pi) and flips the turning
  // direction through sgn(N) below. Checked against the exact launch slope
  // (lambda -+ a)/(1/2 + |kappa|) at theta = 0.
  double na = ak + 0.5;
  double nb = ak - 0.5;
  double x = std::cos(theta);
  double num = jacobi_polynomial(deg, na, nb, x);
  double den = jacobi_polynomial(deg, nb, na, x);
  // atan(ratio * tan(theta/2)); the quotient form keeps the principal branch and
  // stays finite at theta = pi, where the ratio blows up and atan caps at pi/2
  double half = 0.5 * theta;
  double branch = std::atan((num * std::sin(half)) / (den * std::cos(half)));
  // den has deg simple roots in (0, pi); each crossing unwinds one turn
  int crossings = 0;
  for (double xr : jacobi_roots(deg, nb, na))
    if (std::acos(xr) < theta) ++crossings;
  return base - 2.0 * sgn(N) * branch - 2.0 * M_PI * sgn(N) * crossings;
}

double jacobi_theta_final(int N, double kappa) {
  require_level(N);
  double end = -sgn(N) * (std::abs(N) - 1) * 2.0 * M_PI;
  if (kappa > 0) return end - sgn(N) * M_PI;
  return end + M_PI - sgn(N) * M_PI;
}

std::array<double, 2> jacobi_spinor(int N, double kappa, double theta) {
  require_level(N);
  if (!(theta >= 0.0 && theta <= M_PI))
    throw std::invalid_argument("theta must lie in [0, pi]");
  double ak = std::abs(kappa);
  int deg = std::abs(N) - 1;
  double x = std::cos(theta);
  double amp = std::pow(std::sin(theta), ak + 0.5);
  double half = 0.5 * theta;
  // sqrt(cot) and sqrt(tan) written through half-angle sines/cosines; the
  // sin^{ak+1/2} prefactor keeps both components ~ theta^ak at the poles
  double s1 = -amp * std::sqrt(std::cos(half) / std::sin(half)) *
              jacobi_polynomial(deg, ak - 0.5, ak + 0.5, x);
  double s2 = sgn(N) * amp * std::sqrt(std::sin(half) / std::cos(half)) *
              jacobi_polynomial(deg, ak + 0.5, ak - 0.5, x);
  if (kappa > 0) return {s1, s2};
  return {s2, -s1};
}

double hyp1f1_terminating(int M, double b, double x) {
  // 1F1(-M; b; x) truncates after M + 1 terms; the M = -1 case (empty series)
  // arises from the ratio formulas and evaluates to 1
  if (M < 0) return 1.0;
  double term = 1.0, sum = 1.0;
  for (int j = 0; j < M; ++j) {
    term *= (double(-M + j) / (b + j)) * x / (j + 1.0);
    sum += term;
  }
  return sum;
}

std::vector<double> gordon_denominator_roots(const SommerfeldIndex& idx) {
  return cached_gordon_roots(idx);
}

int count_denominator_roots(const SommerfeldIndex& idx) {
  return static_cast<int>(cached_gordon_roots(idx).size());
}

double gordon_omega_profile(const SommerfeldIndex& idx, double r) {
  if (r < 0) throw std::invalid_argument("r must be >= 0");
  GordonCore c = gordon_core(idx);
  double x = 2.0 * c.eta * r;
  double num = gordon_num(c, idx.M, x);
  double den = gordon_den(c, idx.M, x);
  double naive = 2.0 * std::atan(c.w * num / den);
  double base_off = idx.k > 0 ? -2.0 * M_PI : 0.0;
  int crossings = 0;
  for (double rr : cached_gordon_roots(idx))
    if (rr < r) ++crossings;
  return naive + base_off - 2.0 * M_PI * crossings;
}

double gordon_omega_at_zero(const SommerfeldIndex& idx) {
  gordon_core(idx); // validates the index
  double arg = std::asin(-idx.gamma / idx.k);
  if (idx.k < 0) return arg;
  return -M_PI - arg;
}

double gordon_omega_at_infinity(const SommerfeldIndex& idx) {
  GordonCore c = gordon_core(idx);
  return -2.0 * M_PI * idx.M - std::acos(c.E);
}

double gordon_energy(const SommerfeldIndex& idx) { return gordon_core(idx).E; }

double bsw_lambda(double kappa, int N, double a, double E) {
  double k = a0_angular_k(N, kappa);
  // frequency combinations entering the perturbation series; the (E+1) shift
  // pairs with the 1/(2k+1) coefficients (checked against direct eigenvalue
  // shooting on the linear angular system to ~1e-9 at a = 0.01)
  double alpha = a * (E + 1.0);
  double beta = a * (E - 1.0);
  double c10 = -kappa / (2.0 * k + 1.0);
  double c01 = -kappa / (2.0 * k - 1.0);
  double tp = 2.0 * k + 1.0, tm = 2.0 * k - 1.0;
  double c20 = (tp * tp - 4.0 * kappa * kappa) / (4.0 * tp * tp * tp);
  double c02 = (tm * tm - 4.0 * kappa * kappa) / (4.0 * tm * tm * tm);
  return k + c10 * alpha + c01 * beta + c20 * alpha * alpha + c02 * beta * beta;
}

} // namespace zgkn
