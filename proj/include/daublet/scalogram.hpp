#ifndef DAUBLET_SCALOGRAM_HPP
#define DAUBLET_SCALOGRAM_HPP

#include <cstddef>
#include <vector>

#include "daublet/types.hpp"

namespace daublet {

// Dimensionless scales (multiples of the sampling period), ascending.
struct ScaleGrid {
  std::vector<double> scales;
  double sampling_dt = 1.0;  // time units per sample
};

struct ScalogramGrid {
  std::vector<double> scales;
  std::vector<double> time_grid;     // uniform, kept explicit for exact IO
  double dt = 1.0;
  std::vector<double> coefficients;  // row-major scales x times
  std::vector<double> energy;       // squared coefficients
  // Last column per scale whose kernel window stays inside the signal;
  // columns past it lean on the zero extension.
  std::vector<std::size_t> interior_end;

  std::size_t times() const { return time_grid.size(); }
  double coefficient(std::size_t scale, std::size_t time) const {
    return coefficients[scale * time_grid.size() + time];
  }
  double energy_at(std::size_t scale, std::size_t time) const {
    return energy[scale * time_grid.size() + time];
  }
  double time(std::size_t j) const { return time_grid[j]; }
};

enum class CenterFrequencyMethod { dominant_term, dft_peak };

struct Tone {
  double frequency = 0.0;  // cycles/time
  double energy = 0.0;     // time-summed squared coefficients at the ridge
};

struct ToneDetection {
  std::vector<Tone> tones;
  bool complete = true;  // false when fewer maxima exist than requested
};

// Correlation-form CWT against the gate-confined kernel, evaluated
// analytically at arbitrary arguments:
//   C[i][j] = (1/sqrt(s_i dt)) sum_n x[n] psi((t_n - t_j)/(s_i dt)) dt
// with zero extension outside the signal. The scale grid's sampling_dt
// must match the signal grid.
ScalogramGrid cwt(const SampledWaveform& signal, const ScaleGrid& scales,
                  const SumOfSines& kernel);

// Kernel center frequency in cycles/time: the strongest term's b/(2pi),
// or the (parabolically refined) peak of the gated kernel's DFT.
double center_frequency(const SumOfSines& kernel, CenterFrequencyMethod method);

// Pseudo-frequency of a dimensionless scale: Fc / (scale * sampling_dt).
double scale_to_frequency(double scale, double sampling_dt,
                          double center_freq);

// Time-integrates energy per scale, picks the `count` largest local maxima
// over scale (log-parabolic peak refinement), and maps them to
// pseudo-frequencies, strongest first.
ToneDetection detect_tones(const ScalogramGrid& gram, double center_freq,
                           std::size_t count);

// Long-form row of the scalogram export.
struct ScalogramRow {
  double scale = 0.0;
  double time = 0.0;
  double coefficient = 0.0;
  double energy = 0.0;
};

// Lossless long-form view (scale-major) of the grid.
std::vector<ScalogramRow> export_3d(const ScalogramGrid& gram);

// count log-spaced scales covering pseudo-frequencies
// [2/duration, 0.5/dt] for the given signal and kernel center frequency.
ScaleGrid default_scale_grid(const SampledWaveform& signal, std::size_t count,
                             double center_freq);

// sin(2 pi f1 t) + sin(2 pi f2 t) on [0, duration) at step dt.
SampledWaveform two_tone_signal(double f1, double f2, double duration,
                                double dt);

}  // namespace daublet

#endif  // DAUBLET_SCALOGRAM_HPP
