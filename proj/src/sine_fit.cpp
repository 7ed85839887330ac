#include "daublet/sine_fit.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "daublet/fft.hpp"

namespace daublet {
namespace {

constexpr double kPeakFloor = 0.05;  // relative magnitude floor for peaks

void check_target(const SampledWaveform& target) {
  if (target.values.empty()) fail(errc::bad_input, "target is empty");
  if (!(target.dt > 0.0)) fail(errc::bad_input, "target dt must be positive");
  for (double v : target.values)
    if (!std::isfinite(v))
      fail(errc::bad_input, "target contains non-finite values");
}

double wrap_phase(double phase) {
  const double two_pi = 2.0 * std::numbers::pi;
  double w = std::remainder(phase, two_pi);  // (-pi, pi] up to the edge case
  if (w <= -std::numbers::pi) w += two_pi;
  return w;
}

// Solve the symmetric positive definite system via Cholesky; returns false
// when the factorization breaks down.
bool cholesky_solve(std::vector<double>& matrix, std::vector<double>& rhs,
                    std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    double d = matrix[j * n + j];
    for (std::size_t k = 0; k < j; ++k) d -= matrix[j * n + k] * matrix[j * n + k];
    if (!(d > 0.0)) return false;
    const double ljj = std::sqrt(d);
    matrix[j * n + j] = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = matrix[i * n + j];
      for (std::size_t k = 0; k < j; ++k)
        s -= matrix[i * n + k] * matrix[j * n + k];
      matrix[i * n + j] = s / ljj;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    double s = rhs[i];
    for (std::size_t k = 0; k < i; ++k) s -= matrix[i * n + k] * rhs[k];
    rhs[i] = s / matrix[i * n + i];
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = rhs[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= matrix[k * n + i] * rhs[k];
    rhs[i] = s / matrix[i * n + i];
  }
  return true;
}

double sse(const std::vector<double>& r) {
  double s = 0.0;
  for (double v : r) s += v * v;
  return s;
}

std::vector<double> pack(const SumOfSines& model) {
  std::vector<double> p;
  p.reserve(3 * model.terms.size());
  for (const SineTerm& t : model.terms) {
    p.push_back(t.amplitude);
    p.push_back(t.frequency);
    p.push_back(t.phase);
  }
  return p;
}

SumOfSines unpack(const std::vector<double>& p, double support) {
  SumOfSines m;
  m.support = support;
  m.terms.resize(p.size() / 3);
  for (std::size_t k = 0; k < m.terms.size(); ++k)
    m.terms[k] = {p[3 * k], p[3 * k + 1], p[3 * k + 2]};
  return m;
}

// Re-solve amplitudes and phases by linear least squares with the
// frequencies held fixed; a large win for rough frequency guesses.
void refit_amplitudes(SumOfSines& model, const SampledWaveform& target) {
  const std::size_t terms = model.terms.size();
  const std::size_t n = target.size();
  const std::size_t cols = 2 * terms;
  std::vector<double> normal(cols * cols, 0.0);
  std::vector<double> rhs(cols, 0.0);
  std::vector<double> row(cols);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = target.time(i);
    for (std::size_t k = 0; k < terms; ++k) {
      row[2 * k] = std::sin(model.terms[k].frequency * t);
      row[2 * k + 1] = std::cos(model.terms[k].frequency * t);
    }
    for (std::size_t a = 0; a < cols; ++a) {
      for (std::size_t b = 0; b <= a; ++b) normal[a * cols + b] += row[a] * row[b];
      rhs[a] += row[a] * target.values[i];
    }
  }
  double trace = 0.0;
  for (std::size_t a = 0; a < cols; ++a) trace += normal[a * cols + a];
  const double ridge = 1e-12 * std::max(trace, 1.0);
  for (std::size_t a = 0; a < cols; ++a) {
    normal[a * cols + a] += ridge;
    for (std::size_t b = a + 1; b < cols; ++b)
      normal[a * cols + b] = normal[b * cols + a];
  }
  if (!cholesky_solve(normal, rhs, cols)) return;  // keep the spectral guess
  for (std::size_t k = 0; k < terms; ++k) {
    const double alpha = rhs[2 * k];   // coefficient of sin
    const double beta = rhs[2 * k + 1];  // coefficient of cos
    model.terms[k].amplitude = std::hypot(alpha, beta);
    model.terms[k].phase = std::atan2(beta, alpha);
  }
}

}  // namespace

double model_eval(const SumOfSines& model, double t) {
  double acc = 0.0;
  for (const SineTerm& term : model.terms)
    acc += term.amplitude * std::sin(term.frequency * t + term.phase);
  return acc;
}

std::vector<double> residuals(const SumOfSines& model,
                              const SampledWaveform& target) {
  check_target(target);
  std::vector<double> r(target.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = target.values[i] - model_eval(model, target.time(i));
  return r;
}

std::vector<double> jacobian(const SumOfSines& model,
                             const SampledWaveform& target) {
  check_target(target);
  const std::size_t n = target.size();
  const std::size_t cols = 3 * model.terms.size();
  std::vector<double> jac(n * cols);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = target.time(i);
    double* row = jac.data() + i * cols;
    for (std::size_t k = 0; k < model.terms.size(); ++k) {
      const SineTerm& term = model.terms[k];
      const double arg = term.frequency * t + term.phase;
      const double s = std::sin(arg);
      const double c = std::cos(arg);
      row[3 * k] = -s;
      row[3 * k + 1] = -term.amplitude * t * c;
      row[3 * k + 2] = -term.amplitude * c;
    }
  }
  return jac;
}

SumOfSines canonicalize(const SumOfSines& model) {
  SumOfSines out = model;
  for (SineTerm& term : out.terms) {
    if (term.frequency < 0.0) {
      // a sin(-|b| t + c) = -a sin(|b| t - c)
      term.frequency = -term.frequency;
      term.amplitude = -term.amplitude;
      term.phase = -term.phase;
    }
    if (term.amplitude < 0.0) {
      term.amplitude = -term.amplitude;
      term.phase += std::numbers::pi;
    }
    term.phase = wrap_phase(term.phase);
  }
  std::stable_sort(out.terms.begin(), out.terms.end(),
                   [](const SineTerm& x, const SineTerm& y) {
                     return x.frequency < y.frequency;
                   });
  return out;
}

namespace {

// Shared engine behind initialize_from_spectrum: optionally skip the DFT
// peak picking so callers can seed from the harmonic grid alone.
SumOfSines spectral_init(const SampledWaveform& target, std::size_t terms,
                         bool use_peaks) {
  check_target(target);
  if (terms < 1 || terms > kMaxSineTerms)
    fail(errc::bad_input, "term count must be in 1..16");
  const std::size_t n = target.size();
  const double dt = target.dt;
  const double support = target.duration();

  // Exact-length DFT: the bins of a support-long record sit close to the
  // harmonic grid, where the gate's sidelobes vanish.
  const std::vector<std::complex<double>> spec = dft_real(target.values, n);
  const std::size_t half = n / 2;
  std::vector<double> mag(half, 0.0);
  for (std::size_t i = 0; i < half; ++i) mag[i] = std::abs(spec[i]);
  double top = 0.0;
  for (std::size_t i = 1; i < half; ++i) top = std::max(top, mag[i]);

  std::vector<std::size_t> peaks;
  if (use_peaks)
    for (std::size_t i = 1; i + 1 < half; ++i)
      if (mag[i] > mag[i - 1] && mag[i] >= mag[i + 1] &&
          mag[i] >= kPeakFloor * top)
        peaks.push_back(i);
  std::stable_sort(peaks.begin(), peaks.end(),
                   [&mag](std::size_t a, std::size_t b) {
                     return mag[a] > mag[b];
                   });
  if (peaks.size() > terms) peaks.resize(terms);

  const double bin = 2.0 * std::numbers::pi / (static_cast<double>(n) * dt);
  SumOfSines model;
  model.support = support;
  for (std::size_t i : peaks) {
    SineTerm term;
    term.frequency = static_cast<double>(i) * bin;
    // X(b) of a*sin(bt+c) over the record is about (a/2j) e^{jc} n;
    // invert that for the amplitude and phase seeds.
    term.amplitude = 2.0 * mag[i] / static_cast<double>(n);
    term.phase = std::arg(spec[i]) + std::numbers::pi / 2.0 -
                 term.frequency * target.t0;
    model.terms.push_back(term);
  }

  // Harmonic-grid fallback for the remaining slots, strongest bins first
  // so short records spend their slots where the energy is. Amplitude and
  // phase are read off the bin the same way as for picked peaks.
  const double omega0 = 2.0 * std::numbers::pi / support;
  std::vector<int> harmonics;
  for (int k = 1; k * omega0 < static_cast<double>(half) * bin; ++k)
    harmonics.push_back(k);
  std::stable_sort(harmonics.begin(), harmonics.end(), [&](int ka, int kb) {
    const auto nearest = [&](int k) {
      const std::size_t i = static_cast<std::size_t>(
          std::llround(k * omega0 / bin));
      return i < half ? mag[i] : 0.0;
    };
    return nearest(ka) > nearest(kb);
  });
  auto next_harmonic = harmonics.begin();
  int past_end = static_cast<int>(harmonics.size());
  while (model.terms.size() < terms) {
    double cand;
    if (next_harmonic != harmonics.end()) {
      cand = *next_harmonic * omega0;
      ++next_harmonic;
    } else {
      cand = ++past_end * omega0;  // grid exhausted, continue upward
    }
    bool taken = false;
    for (const SineTerm& t : model.terms)
      if (std::abs(t.frequency - cand) <= omega0 / 2.0) taken = true;
    if (taken) continue;
    SineTerm term;
    term.frequency = cand;
    const std::size_t i = static_cast<std::size_t>(std::llround(cand / bin));
    if (i > 0 && i < half) {
      term.amplitude = 2.0 * mag[i] / static_cast<double>(n);
      term.phase = std::arg(spec[i]) + std::numbers::pi / 2.0 -
                   term.frequency * target.t0;
    }
    model.terms.push_back(term);
  }

  std::stable_sort(model.terms.begin(), model.terms.end(),
                   [](const SineTerm& x, const SineTerm& y) {
                     return x.frequency < y.frequency;
                   });
  return model;
}

}  // namespace

SumOfSines initialize_from_spectrum(const SampledWaveform& target,
                                    std::size_t terms) {
  return spectral_init(target, terms, true);
}

FitReport goodness(const SumOfSines& model, const SampledWaveform& target) {
  check_target(target);
  const std::size_t n = target.size();
  double mean = 0.0;
  for (double v : target.values) mean += v;
  mean /= static_cast<double>(n);
  double ss_tot = 0.0;
  for (double v : target.values) ss_tot += (v - mean) * (v - mean);
  if (ss_tot == 0.0)
    fail(errc::degenerate_target, "target is constant, R^2 undefined");
  const std::vector<double> r = residuals(model, target);
  const double ss_res = sse(r);
  FitReport report;
  report.r_squared = 1.0 - ss_res / ss_tot;
  report.rmse = std::sqrt(ss_res / static_cast<double>(n));
  report.iterations = 0;
  report.converged = true;
  report.final_lambda = 0.0;
  return report;
}

std::pair<SumOfSines, FitReport> lm_fit(const SampledWaveform& target,
                                        std::size_t terms,
                                        const std::optional<SumOfSines>& init,
                                        const LmOptions& options) {
  check_target(target);
  if (terms < 1 || terms > kMaxSineTerms)
    fail(errc::bad_input, "term count must be in 1..16");
  if (target.size() < 3 * terms + 1)
    fail(errc::underdetermined,
         "need at least " + std::to_string(3 * terms + 1) + " samples for " +
             std::to_string(terms) + " terms, got " +
             std::to_string(target.size()));
  if (!(options.lambda0 > 0.0) || !(options.lambda_up > 1.0) ||
      !(options.lambda_down >= 1.0) || !(options.tol_cost >= 0.0) ||
      !(options.tol_gradient >= 0.0))
    fail(errc::bad_input, "invalid LM options");

  struct LmRun {
    std::vector<double> p;
    double cost = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
    double lambda = 0.0;
    std::vector<double> trace;
  };

  const std::size_t params = 3 * terms;
  const auto run_lm = [&](const SumOfSines& start) {
    LmRun run;
    run.p = pack(start);
    std::vector<double> r = residuals(start, target);
    run.cost = sse(r);
    run.trace.push_back(run.cost);
    run.lambda = options.lambda0;

    std::vector<double> jtj(params * params);
    std::vector<double> damped(params * params);
    std::vector<double> jtr(params);
    std::vector<double> step(params);
    std::vector<double> trial(params);

    while (run.iterations < options.max_iterations && !run.converged) {
      ++run.iterations;
      const SumOfSines current = unpack(run.p, start.support);
      const std::vector<double> jac = jacobian(current, target);

      std::fill(jtj.begin(), jtj.end(), 0.0);
      std::fill(jtr.begin(), jtr.end(), 0.0);
      for (std::size_t i = 0; i < target.size(); ++i) {
        const double* row = jac.data() + i * params;
        for (std::size_t a = 0; a < params; ++a) {
          for (std::size_t b = 0; b <= a; ++b)
            jtj[a * params + b] += row[a] * row[b];
          jtr[a] += row[a] * r[i];
        }
      }
      for (std::size_t a = 0; a < params; ++a)
        for (std::size_t b = a + 1; b < params; ++b)
          jtj[a * params + b] = jtj[b * params + a];

      double grad_inf = 0.0;
      for (std::size_t a = 0; a < params; ++a)
        grad_inf = std::max(grad_inf, std::abs(jtr[a]));
      if (grad_inf < options.tol_gradient) {
        run.converged = true;
        break;
      }

      double max_diag = 0.0;
      for (std::size_t a = 0; a < params; ++a)
        max_diag = std::max(max_diag, jtj[a * params + a]);
      const double diag_floor = std::max(1e-12 * max_diag, 1e-300);

      bool accepted = false;
      while (!accepted) {
        damped = jtj;
        for (std::size_t a = 0; a < params; ++a) {
          const double d = std::max(jtj[a * params + a], diag_floor);
          damped[a * params + a] += run.lambda * d;
        }
        step = jtr;
        for (double& v : step) v = -v;
        const bool solved = cholesky_solve(damped, step, params);
        if (solved) {
          for (std::size_t a = 0; a < params; ++a)
            trial[a] = run.p[a] + step[a];
          const SumOfSines cand = unpack(trial, start.support);
          const std::vector<double> r_trial = residuals(cand, target);
          const double cost_trial = sse(r_trial);
          if (cost_trial < run.cost) {
            const double decrease =
                (run.cost - cost_trial) / std::max(run.cost, 1e-300);
            run.p = trial;
            r = r_trial;
            run.cost = cost_trial;
            run.lambda /= options.lambda_down;
            accepted = true;
            run.trace.push_back(run.cost);
            if (decrease < options.tol_cost) run.converged = true;
            break;
          }
        }
        run.lambda *= options.lambda_up;
        if (run.lambda > 1e14) break;  // stalled
      }
      if (!accepted) break;
    }
    return run;
  };

  double support;
  LmRun winner;
  if (init) {
    if (init->terms.size() != terms)
      fail(errc::bad_input, "initial model term count does not match K");
    validate(*init);
    support = init->support;
    winner = run_lm(*init);
  } else {
    // Two deterministic starts: DFT peaks plus ranked harmonics, and the
    // ranked harmonic grid alone. Keep whichever lands lower.
    SumOfSines seeded = spectral_init(target, terms, true);
    refit_amplitudes(seeded, target);
    support = seeded.support;
    winner = run_lm(seeded);
    SumOfSines gridded = spectral_init(target, terms, false);
    refit_amplitudes(gridded, target);
    const LmRun alt = run_lm(gridded);
    if (alt.cost < winner.cost) winner = alt;
  }

  if (options.cost_trace)
    options.cost_trace->insert(options.cost_trace->end(),
                               winner.trace.begin(), winner.trace.end());

  SumOfSines fitted = canonicalize(unpack(winner.p, support));
  FitReport report = goodness(fitted, target);
  report.iterations = winner.iterations;
  report.converged = winner.converged;
  report.final_lambda = winner.lambda;
  return {std::move(fitted), report};
}

}  // namespace daublet
