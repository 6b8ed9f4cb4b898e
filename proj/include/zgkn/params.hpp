#pragma once
#include <string>

namespace zgkn {

// natural units m = hbar = c = 1; energies are fractions of mc^2
inline constexpr double alpha_fs = 0.0072973525693;            // fine-structure constant
inline constexpr double a_ring_max = 0.2928932188134524756;    // 1 - 1/sqrt(2)
inline constexpr double gamma_floor = -0.5;

struct ModelParams {
  double a = 0.1;      // ring radius
  double gamma = -0.3; // electric coupling -Z*alpha_fs, negative
  double kappa = 0.5;  // half-integer angular momentum projection, nonzero
};

struct WindingTarget {
  int n_theta = 0;
  int n_omega = 0;
};

struct SpectroLabel {
  int n = 0;        // principal quantum number, >= 1
  int ell = 0;      // orbital index, >= 0
  double j = 0;     // total angular momentum, half-integer
  double m_j = 0;   // z-projection, equals kappa
  int k = 0;        // spin-orbit integer, nonzero
  int M = 0;        // radial index, >= 0
  int N = 0;        // nonzero companion index of the angular dictionary
  std::string text; // e.g. "2p1/2"
};

struct ValidationReport {
  bool accepted = false;
  bool in_guaranteed_region = false;
  std::string reason; // empty when accepted
};

bool is_half_integer(double kappa);

// admissible winding pairs: n_theta >= 0 needs n_omega >= 0, n_theta <= -1 needs n_omega >= 1
bool admissible_target(const WindingTarget& t);

ValidationReport validate(const ModelParams& p, const WindingTarget& t);

// nonzero dictionary index: n_theta + 1 for n_theta >= 0, n_theta for n_theta <= -1
int dictionary_N(int n_theta);

// inverse of dictionary_N
int winding_from_dictionary_N(int N);

// throws std::invalid_argument on inadmissible input
SpectroLabel spectroscopic_label(const WindingTarget& t, double kappa);

double gamma_from_Z(double Z);

} // namespace zgkn
