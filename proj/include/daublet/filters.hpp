#ifndef DAUBLET_FILTERS_HPP
#define DAUBLET_FILTERS_HPP

#include <vector>

#include "daublet/types.hpp"

namespace daublet {

// Orthonormal Daubechies low-pass filter of order N (N vanishing moments,
// 2N taps, support length 2N-1).
struct DaubechiesSpec {
  int order = 0;                // N
  std::vector<double> lowpass;  // h, 2N taps
  double support() const { return 2.0 * order - 1.0; }
};

constexpr int kMinDaubechiesOrder = 1;
constexpr int kMaxDaubechiesOrder = 10;

// Synthesizes the dbN taps by spectral factorization of the half-band
// polynomial: the roots of sum_k C(N-1+k,k) y^k are mapped to z-plane root
// pairs (z, 1/z) and the extremal-phase factor is kept, then normalized so
// sum(h) = sqrt(2). Throws OrderUnsupported outside 1..10.
DaubechiesSpec daubechies_filter(int order);

// Quadrature-mirror high-pass: g[n] = (-1)^n h[2N-1-n].
std::vector<double> highpass_from_lowpass(const DaubechiesSpec& spec);

}  // namespace daublet

#endif  // DAUBLET_FILTERS_HPP
