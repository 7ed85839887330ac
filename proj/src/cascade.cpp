#include "daublet/cascade.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace daublet {
namespace {

void check_levels(int levels) {
  if (levels < kMinCascadeLevels)
    fail(errc::bad_input, "cascade levels must be >= 1");
  if (levels > kMaxCascadeLevels)
    fail(errc::grid_too_large,
         "cascade levels " + std::to_string(levels) + " exceeds max " +
             std::to_string(kMaxCascadeLevels));
}

// One refinement round: dyadic upsample then convolve with sqrt(2)*taps.
std::vector<double> refine(const std::vector<double>& values,
                           const std::vector<double>& taps) {
  const std::size_t up_len = 2 * values.size() - 1;
  const std::size_t out_len = up_len + taps.size() - 1;
  std::vector<double> out(out_len, 0.0);
  const double root2 = std::sqrt(2.0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = root2 * values[i];
    if (v == 0.0) continue;
    for (std::size_t k = 0; k < taps.size(); ++k) out[2 * i + k] += v * taps[k];
  }
  return out;
}

// Iterate to level J-1, leaving the last tap application to the caller so
// the wavelet can substitute the high-pass filter there.
std::vector<double> scaling_iterate(const DaubechiesSpec& spec, int levels) {
  std::vector<double> values{1.0};
  for (int j = 0; j < levels; ++j) values = refine(values, spec.lowpass);
  return values;
}

SampledWaveform on_closed_grid(std::vector<double> values,
                               const DaubechiesSpec& spec, int levels) {
  // Closed grid [0, 2N-1] has (2N-1)*2^J + 1 points; the iterate covers the
  // first (2N-1)*2^J - 2N + 2 of them and the true function vanishes past
  // its reach, so the tail stays zero (including the endpoint itself).
  const std::size_t full =
      static_cast<std::size_t>(2 * spec.order - 1) * (1u << levels) + 1;
  values.resize(full, 0.0);
  SampledWaveform wave;
  wave.t0 = 0.0;
  wave.dt = std::ldexp(1.0, -levels);
  wave.values = std::move(values);
  return wave;
}

}  // namespace

SampledWaveform cascade_scaling(const DaubechiesSpec& spec, int levels) {
  check_levels(levels);
  return on_closed_grid(scaling_iterate(spec, levels), spec, levels);
}

SampledWaveform cascade_wavelet(const DaubechiesSpec& spec, int levels) {
  check_levels(levels);
  const std::vector<double> phi = scaling_iterate(spec, levels - 1);
  const std::vector<double> g = highpass_from_lowpass(spec);

  // psi(n/2^J) = sqrt(2) * sum_k g[k] phi_{J-1}(n/2^(J-1) - k): the g taps
  // land 2^(J-1) fine-grid samples apart.
  const std::size_t stride = 1u << (levels - 1);
  const std::size_t out_len = phi.size() + (g.size() - 1) * stride;
  std::vector<double> psi(out_len, 0.0);
  const double root2 = std::sqrt(2.0);
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double w = root2 * g[k];
    const std::size_t base = k * stride;
    for (std::size_t i = 0; i < phi.size(); ++i) psi[base + i] += w * phi[i];
  }
  return on_closed_grid(std::move(psi), spec, levels);
}

}  // namespace daublet
