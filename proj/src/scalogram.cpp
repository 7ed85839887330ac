#include "daublet/scalogram.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "daublet/closed_form.hpp"
#include "daublet/spectrum.hpp"

namespace daublet {
namespace {

void check_scales(const ScaleGrid& grid, const SampledWaveform& signal) {
  if (grid.scales.empty()) fail(errc::bad_scales, "scale grid is empty");
  double prev = 0.0;
  for (double s : grid.scales) {
    if (!(s > 0.0)) fail(errc::bad_scales, "scales must be positive");
    if (s <= prev) fail(errc::bad_scales, "scales must be strictly ascending");
    prev = s;
  }
  if (std::abs(grid.sampling_dt - signal.dt) >
      1e-9 * std::max(signal.dt, grid.sampling_dt))
    fail(errc::bad_scales, "scale grid sampling_dt " +
                               std::to_string(grid.sampling_dt) +
                               " does not match the signal grid " +
                               std::to_string(signal.dt));
}

}  // namespace

ScalogramGrid cwt(const SampledWaveform& signal, const ScaleGrid& scales,
                  const SumOfSines& kernel) {
  validate(kernel);
  if (signal.size() < 8) fail(errc::bad_input, "signal needs >= 8 samples");
  if (!(signal.dt > 0.0)) fail(errc::bad_input, "signal dt must be positive");
  check_scales(scales, signal);

  const std::size_t n = signal.size();
  const double dt = signal.dt;

  ScalogramGrid gram;
  gram.scales = scales.scales;
  gram.dt = dt;
  gram.time_grid.resize(n);
  for (std::size_t j = 0; j < n; ++j) gram.time_grid[j] = signal.time(j);
  gram.coefficients.assign(scales.scales.size() * n, 0.0);
  gram.energy.assign(scales.scales.size() * n, 0.0);
  gram.interior_end.assign(scales.scales.size(), 0);

  std::vector<double> kernel_samples;
  for (std::size_t i = 0; i < scales.scales.size(); ++i) {
    const double dilation = scales.scales[i] * dt;  // time units
    const double norm = dt / std::sqrt(dilation);
    // Kernel support [0, T) maps to offsets [0, dilation*T); clamp the
    // window to the signal length (zero extension beyond).
    const double span = dilation * kernel.support / dt;
    const std::size_t window =
        std::min(static_cast<std::size_t>(std::ceil(span)), n);
    kernel_samples.resize(window);
    for (std::size_t m = 0; m < window; ++m)
      kernel_samples[m] =
          eval_gated(kernel, static_cast<double>(m) * dt / dilation);

    gram.interior_end[i] =
        (span <= static_cast<double>(n)) ? n - window + 1 : 0;

    double* out = gram.coefficients.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t reach = std::min(window, n - j);
      double acc = 0.0;
      for (std::size_t m = 0; m < reach; ++m)
        acc += signal.values[j + m] * kernel_samples[m];
      out[j] = acc * norm;
    }
  }
  for (std::size_t idx = 0; idx < gram.coefficients.size(); ++idx)
    gram.energy[idx] = gram.coefficients[idx] * gram.coefficients[idx];
  return gram;
}

double center_frequency(const SumOfSines& kernel,
                        CenterFrequencyMethod method) {
  validate(kernel);
  if (method == CenterFrequencyMethod::dominant_term) {
    const SineTerm* best = &kernel.terms.front();
    for (const SineTerm& term : kernel.terms)
      if (std::abs(term.amplitude) > std::abs(best->amplitude)) best = &term;
    return std::abs(best->frequency) / (2.0 * std::numbers::pi);
  }

  const std::size_t samples = 4096;
  const SampledWaveform wave =
      sample_gated(kernel, kernel.support / static_cast<double>(samples));
  const SpectrumGrid grid = dft_oracle(wave, 8 * samples);
  // positive-frequency argmax, then a parabolic touch-up
  std::size_t best = 0;
  double best_mag = -1.0;
  for (std::size_t i = 0; i < grid.omegas.size(); ++i) {
    if (grid.omegas[i] <= 0.0) continue;
    const double mag = std::abs(grid.values[i]);
    if (mag > best_mag) {
      best_mag = mag;
      best = i;
    }
  }
  double omega = grid.omegas[best];
  if (best > 0 && best + 1 < grid.omegas.size()) {
    const double y1 = std::abs(grid.values[best - 1]);
    const double y2 = best_mag;
    const double y3 = std::abs(grid.values[best + 1]);
    const double denom = y1 - 2.0 * y2 + y3;
    if (denom < 0.0) {
      const double shift = 0.5 * (y1 - y3) / denom;
      omega += shift * (grid.omegas[best + 1] - grid.omegas[best]);
    }
  }
  return omega / (2.0 * std::numbers::pi);
}

double scale_to_frequency(double scale, double sampling_dt,
                          double center_freq) {
  if (!(scale > 0.0) || !(sampling_dt > 0.0) || !(center_freq > 0.0))
    fail(errc::bad_input, "scale, sampling_dt and Fc must be positive");
  return center_freq / (scale * sampling_dt);
}

ToneDetection detect_tones(const ScalogramGrid& gram, double center_freq,
                           std::size_t count) {
  if (gram.scales.empty()) fail(errc::bad_scales, "empty scalogram");
  if (count > gram.scales.size())
    fail(errc::bad_input, "requested more tones than scales");

  const std::size_t rows = gram.scales.size();
  std::vector<double> profile(rows, 0.0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < gram.times(); ++j)
      profile[i] += gram.energy_at(i, j);

  std::vector<std::size_t> maxima;
  for (std::size_t i = 1; i + 1 < rows; ++i)
    if (profile[i] > profile[i - 1] && profile[i] >= profile[i + 1] &&
        profile[i] > 0.0)
      maxima.push_back(i);
  std::stable_sort(maxima.begin(), maxima.end(),
                   [&profile](std::size_t a, std::size_t b) {
                     return profile[a] > profile[b];
                   });

  ToneDetection result;
  result.complete = maxima.size() >= count;
  const std::size_t take = std::min(count, maxima.size());
  for (std::size_t m = 0; m < take; ++m) {
    const std::size_t i = maxima[m];
    // log-parabolic refinement on the log-spaced scale axis
    double scale = gram.scales[i];
    const bool positive = profile[i - 1] > 0.0 && profile[i + 1] > 0.0;
    const double y1 = positive ? std::log(profile[i - 1]) : 0.0;
    const double y2 = std::log(profile[i]);
    const double y3 = positive ? std::log(profile[i + 1]) : 0.0;
    const double denom = positive ? y1 - 2.0 * y2 + y3 : 0.0;
    if (denom < 0.0) {
      const double shift = 0.5 * (y1 - y3) / denom;
      const double step = 0.5 * (std::log(gram.scales[i + 1]) -
                                 std::log(gram.scales[i - 1]));
      scale = std::exp(std::log(gram.scales[i]) + shift * step);
    }
    result.tones.push_back(
        {scale_to_frequency(scale, gram.dt, center_freq), profile[i]});
  }
  return result;
}

std::vector<ScalogramRow> export_3d(const ScalogramGrid& gram) {
  std::vector<ScalogramRow> rows;
  rows.reserve(gram.scales.size() * gram.times());
  for (std::size_t i = 0; i < gram.scales.size(); ++i)
    for (std::size_t j = 0; j < gram.times(); ++j)
      rows.push_back({gram.scales[i], gram.time(j), gram.coefficient(i, j),
                      gram.energy_at(i, j)});
  return rows;
}

ScaleGrid default_scale_grid(const SampledWaveform& signal, std::size_t count,
                             double center_freq) {
  if (signal.values.empty() || !(signal.dt > 0.0))
    fail(errc::bad_input, "signal grid is empty or invalid");
  if (count < 2) fail(errc::bad_scales, "need at least two scales");
  if (!(center_freq > 0.0)) fail(errc::bad_input, "Fc must be positive");
  const double pf_max = 0.5 / signal.dt;
  const double pf_min = 2.0 / signal.duration();
  if (!(pf_min < pf_max))
    fail(errc::bad_scales, "signal too short for the default scale band");
  const double s_lo = center_freq / (pf_max * signal.dt);
  const double s_hi = center_freq / (pf_min * signal.dt);
  ScaleGrid grid;
  grid.sampling_dt = signal.dt;
  grid.scales.resize(count);
  const double step = (std::log(s_hi) - std::log(s_lo)) /
                      static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i)
    grid.scales[i] = std::exp(std::log(s_lo) + static_cast<double>(i) * step);
  return grid;
}

SampledWaveform two_tone_signal(double f1, double f2, double duration,
                                double dt) {
  if (!(dt > 0.0) || !(duration > 0.0))
    fail(errc::bad_input, "duration and dt must be positive");
  const std::size_t n =
      static_cast<std::size_t>(std::llround(duration / dt));
  if (n < 8) fail(errc::bad_input, "two-tone signal would be too short");
  SampledWaveform wave;
  wave.t0 = 0.0;
  wave.dt = dt;
  wave.values.resize(n);
  const double w1 = 2.0 * std::numbers::pi * f1;
  const double w2 = 2.0 * std::numbers::pi * f2;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = wave.time(i);
    wave.values[i] = std::sin(w1 * t) + std::sin(w2 * t);
  }
  return wave;
}

}  // namespace daublet
