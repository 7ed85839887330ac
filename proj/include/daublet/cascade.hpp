#ifndef DAUBLET_CASCADE_HPP
#define DAUBLET_CASCADE_HPP

#include "daublet/filters.hpp"
#include "daublet/types.hpp"

namespace daublet {

constexpr int kMinCascadeLevels = 1;
constexpr int kMaxCascadeLevels = 14;

// Cascade iteration for the scaling function: start from the unit impulse
// and apply J rounds of dyadic upsampling followed by convolution with
// sqrt(2)*h. Output grid is t = n/2^J over the closed support [0, 2N-1];
// the trailing points the iteration never reaches are stored as zeros.
SampledWaveform cascade_scaling(const DaubechiesSpec& spec, int levels);

// Wavelet on the same grid: one g-step applied to the level-(J-1) scaling
// iterate, psi(n/2^J) = sqrt(2) * sum_k g[k] phi_{J-1}(n/2^(J-1) - k).
SampledWaveform cascade_wavelet(const DaubechiesSpec& spec, int levels);

}  // namespace daublet

#endif  // DAUBLET_CASCADE_HPP
