#ifndef DAUBLET_SINE_FIT_HPP
#define DAUBLET_SINE_FIT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "daublet/types.hpp"

namespace daublet {

// Ungated model value sum_k a_k sin(b_k t + c_k).
double model_eval(const SumOfSines& model, double t);

// r[i] = target[i] - model(t_i).
std::vector<double> residuals(const SumOfSines& model,
                              const SampledWaveform& target);

// Row-major n x 3K matrix of dr/dp with parameters ordered
// (a_1, b_1, c_1, a_2, ...):
//   dr/da_k = -sin(b_k t + c_k)
//   dr/db_k = -a_k t cos(b_k t + c_k)
//   dr/dc_k = -a_k cos(b_k t + c_k)
std::vector<double> jacobian(const SumOfSines& model,
                             const SampledWaveform& target);

// Canonical form: b_k >= 0 (negative frequencies folded by sign/phase
// flip), a_k >= 0 (sign pushed into a pi phase shift), c_k in (-pi, pi],
// terms sorted by ascending frequency. Does not change model values.
SumOfSines canonicalize(const SumOfSines& model);

struct LmOptions {
  std::size_t max_iterations = 500;
  double lambda0 = 1e-3;
  double lambda_up = 10.0;
  double lambda_down = 10.0;
  double tol_cost = 1e-12;   // relative SSE decrease on an accepted step
  double tol_gradient = 1e-10;  // infinity norm of J^T r
  std::vector<double>* cost_trace = nullptr;  // optional per-step SSE log
};

// Levenberg-Marquardt fit of K sine terms to the target waveform. When no
// initial model is given the spectral initializer seeds the frequencies
// and a linear solve seeds amplitudes/phases. The result is canonical.
std::pair<SumOfSines, FitReport> lm_fit(
    const SampledWaveform& target, std::size_t terms,
    const std::optional<SumOfSines>& init = std::nullopt,
    const LmOptions& options = {});

// Initial guess: local maxima of the target's DFT magnitude (at the
// signal's own resolution, above a small relative floor) supply up to K
// frequencies with amplitude/phase read off the peak bins; missing slots
// fall back to the harmonic grid k*2*pi/T with T the target duration.
SumOfSines initialize_from_spectrum(const SampledWaveform& target,
                                    std::size_t terms);

// R^2 about the target mean plus rmse. Constant targets raise
// DegenerateTarget.
FitReport goodness(const SumOfSines& model, const SampledWaveform& target);

}  // namespace daublet

#endif  // DAUBLET_SINE_FIT_HPP
