#ifndef DAUBLET_SPECTRUM_HPP
#define DAUBLET_SPECTRUM_HPP

#include <complex>
#include <vector>

#include "daublet/types.hpp"

namespace daublet {

// One Dirac line of the unbounded series' transform.
struct SpectralLine {
  double frequency = 0.0;                 // rad/time, signed
  std::complex<double> amplitude{0.0, 0.0};
};

struct SpectrumGrid {
  std::vector<double> omegas;                    // strictly ascending
  std::vector<std::complex<double>> values;
  bool magnitude_only = false;
};

// Impulse pairs of the ungated sum: -j*pi*a*e^{+jc} at +b and
// +j*pi*a*e^{-jc} at -b for every term, ordered as (+b_k, -b_k) pairs.
std::vector<SpectralLine> line_spectrum(const SumOfSines& model);

// Exact transform of the gated model via the convolution theorem:
//   sum_k (a_k/2j) [e^{jc_k} G(w - b_k) - e^{-jc_k} G(w + b_k)],
//   G(w) = T sinc(w T / 2pi) e^{-j w T / 2}.
std::complex<double> truncated_spectrum(const SumOfSines& model, double omega);

// (T/2) sum_k a_k sinc((w - b_k) T / 2pi): the positive-lobe sinc-sum
// magnitude approximation, returned as the signed sum.
double magnitude_eq16(const SumOfSines& model, double omega);

// Two-sided DFT of the waveform, scaled by dt (and carrying the t0 phase)
// so it approximates the continuous transform. Omegas ascend over
// [-pi/dt, pi/dt); zero_pad_to sets the transform length.
SpectrumGrid dft_oracle(const SampledWaveform& wave, std::size_t zero_pad_to);

// Normalized sinc, sin(pi x)/(pi x) with sinc(0) = 1.
double sinc(double x);

}  // namespace daublet

#endif  // DAUBLET_SPECTRUM_HPP
