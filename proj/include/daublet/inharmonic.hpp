#ifndef DAUBLET_INHARMONIC_HPP
#define DAUBLET_INHARMONIC_HPP

#include <optional>
#include <vector>

#include "daublet/types.hpp"

namespace daublet {

// One component of the inharmonic expansion A*sin(omega*t + theta).
struct InharmonicComponent {
  int index = 0;          // k
  double amplitude = 0.0;  // A_k
  double frequency = 0.0;  // omega_k, rad/time, >= 0
  double phase = 0.0;      // theta_k, rad
};

// Row of the harmonic-deviation table: fitted frequency vs k*omega0.
struct InharmonicRow {
  int index = 0;             // harmonic order k
  double fitted = 0.0;       // b_k from the model
  double harmonic = 0.0;     // k * 2*pi/T
  double deviation = 0.0;    // fitted - harmonic
};

// theta = -atan((1 - cos(omega*T)) / sqrt(1 - cos^2(omega*T))), the
// zero-mean phase for a sine of frequency omega on [0, T]. Principal
// branch omega*T in (0, pi); equals -omega*T/2 there. Near the branch
// edge the half-angle form is used directly. Multiples of pi (and
// arguments outside the branch) raise BranchSingularity.
double phase_from_frequency(double omega, double support);

// omega = (1/T)*acos((1 - tan^2 theta)/(1 + tan^2 theta)) = 2|theta|/T,
// the positive-branch inverse of phase_from_frequency. |theta| = pi/2
// raises TangentSingularity.
double frequency_from_phase(double theta, double support);

// a * integral_0^T sin(b t + c) dt in closed form; the b = 0 limit is
// a*T*sin(c).
double zero_mean_residual(double a, double b, double c, double support);

// Deviation table between model frequencies (sorted ascending, else
// InputNotSorted) and the harmonic grid k*2*pi/T. Without an explicit
// assignment each k is the nearest integer to b/omega0 (floored at 1),
// bumping forward on collision.
std::vector<InharmonicRow> inharmonic_table(
    const SumOfSines& model,
    const std::optional<std::vector<int>>& k_assignment = std::nullopt);

}  // namespace daublet

#endif  // DAUBLET_INHARMONIC_HPP
