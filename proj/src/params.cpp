#include "zgkn/params.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace zgkn {

bool is_half_integer(double kappa) {
  double twice = 2.0 * kappa;
  if (std::abs(twice - std::llround(twice)) > 1e-12) return false;
  return std::llround(twice) % 2 != 0;
}

bool admissible_target(const WindingTarget& t) {
  // the angular connector fixes sgn(lambda): windings >= 0 give lambda < 0,
  // windings <= -1 give lambda > 0, and lambda > 0 needs a radial node
  if (t.n_omega < 0) return false;
  if (t.n_theta <= -1 && t.n_omega == 0) return false;
  return true;
}

ValidationReport validate(const ModelParams& p, const WindingTarget& t) {
  ValidationReport rep;
  if (!(p.a > 0)) {
    rep.reason = "ring radius a must be positive";
    return rep;
  }
  if (!(p.gamma < 0)) {
    rep.reason = "coupling gamma must be negative (attractive)";
    return rep;
  }
  if (!is_half_integer(p.kappa)) {
    rep.reason = "kappa must be a nonzero half-odd integer";
    return rep;
  }
  if (!admissible_target(t)) {
    rep.reason = "winding pair has no bound state (needs n_omega >= 0, and >= 1 when n_theta <= -1)";
    return rep;
  }
  rep.accepted = true;
  rep.in_guaranteed_region = (p.a < a_ring_max) && (p.gamma > gamma_floor);
  if (!rep.in_guaranteed_region)
    rep.reason = "outside the proven existence region (a < 1-1/sqrt(2), gamma > -1/2); solving anyway";
  return rep;
}

int dictionary_N(int n_theta) { return n_theta >= 0 ? n_theta + 1 : n_theta; }

int winding_from_dictionary_N(int N) { return N >= 1 ? N - 1 : N; }

SpectroLabel spectroscopic_label(const WindingTarget& t, double kappa) {
  if (!is_half_integer(kappa)) throw std::invalid_argument("kappa must be a half-odd integer");
  if (!admissible_target(t)) throw std::invalid_argument("winding pair has no bound state");
  SpectroLabel lab;
  lab.N = dictionary_N(t.n_theta);
  lab.M = t.n_omega;
  // |kappa| - 1/2 as an integer
  int q = (static_cast<int>(std::llround(2.0 * std::abs(kappa))) - 1) / 2;
  int sgnN = lab.N > 0 ? 1 : -1;
  lab.k = -lab.N - sgnN * q;
  lab.n = lab.M + std::abs(lab.k);
  lab.j = std::abs(lab.k) - 0.5;
  lab.ell = std::abs(lab.k) - (lab.k > 0 ? 0 : 1);
  lab.m_j = kappa;
  static const char* letters = "spdfghiklmnoqrtuvwxyz";
  char ell_letter = lab.ell < 21 ? letters[lab.ell] : '?';
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%d%c%d/2", lab.n, ell_letter,
                static_cast<int>(std::llround(2.0 * lab.j)));
  lab.text = buf;
  return lab;
}

double gamma_from_Z(double Z) { return -Z * alpha_fs; }

} // namespace zgkn
