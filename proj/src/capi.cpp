// Glue between the public C interface and the C++ core.
#include "daublet.h"

#include <complex>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "daublet/cascade.hpp"
#include "daublet/closed_form.hpp"
#include "daublet/filters.hpp"
#include "daublet/inharmonic.hpp"
#include "daublet/io.hpp"
#include "daublet/scalogram.hpp"
#include "daublet/sine_fit.hpp"
#include "daublet/spectrum.hpp"
#include "daublet/types.hpp"

struct daublet_waveform {
  daublet::SampledWaveform wave;
};

struct daublet_model {
  daublet::SumOfSines model;
  std::string family = "custom";
  std::string kind = "wavelet";
};

struct daublet_scalogram {
  daublet::ScalogramGrid gram;
};

namespace {

thread_local std::string g_last_error;

int code_of(daublet::errc code) {
  using daublet::errc;
  switch (code) {
    case errc::ok: return DAUBLET_OK;
    case errc::order_unsupported: return DAUBLET_E_ORDER_UNSUPPORTED;
    case errc::grid_too_large: return DAUBLET_E_GRID_TOO_LARGE;
    case errc::grid_too_coarse: return DAUBLET_E_GRID_TOO_COARSE;
    case errc::branch_singularity: return DAUBLET_E_BRANCH_SINGULARITY;
    case errc::tangent_singularity: return DAUBLET_E_TANGENT_SINGULARITY;
    case errc::input_not_sorted: return DAUBLET_E_INPUT_NOT_SORTED;
    case errc::underdetermined: return DAUBLET_E_UNDERDETERMINED;
    case errc::bad_input: return DAUBLET_E_BAD_INPUT;
    case errc::degenerate_target: return DAUBLET_E_DEGENERATE_TARGET;
    case errc::no_such_preset: return DAUBLET_E_NO_SUCH_PRESET;
    case errc::bad_scales: return DAUBLET_E_BAD_SCALES;
    case errc::io_failure: return DAUBLET_E_IO;
    case errc::parse_failure: return DAUBLET_E_PARSE;
  }
  return DAUBLET_E_UNKNOWN;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return DAUBLET_OK;
  } catch (const daublet::error& e) {
    g_last_error = e.what();
    return code_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return DAUBLET_E_UNKNOWN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DAUBLET_E_UNKNOWN;
  }
}

int require(bool ok, const char* what) {
  if (ok) return DAUBLET_OK;
  g_last_error = what;
  return DAUBLET_E_BAD_INPUT;
}

daublet::PresetKey parse_key(const char* family, const char* kind) {
  return {daublet::parse_family(family ? family : ""),
          daublet::parse_kind(kind ? kind : "")};
}

}  // namespace

extern "C" {

const char* daublet_version(void) { return "1.0.0"; }

const char* daublet_status_name(int status) {
  switch (status) {
    case DAUBLET_OK: return "Ok";
    case DAUBLET_E_ORDER_UNSUPPORTED: return "OrderUnsupported";
    case DAUBLET_E_GRID_TOO_LARGE: return "GridTooLarge";
    case DAUBLET_E_GRID_TOO_COARSE: return "GridTooCoarse";
    case DAUBLET_E_BRANCH_SINGULARITY: return "BranchSingularity";
    case DAUBLET_E_TANGENT_SINGULARITY: return "TangentSingularity";
    case DAUBLET_E_INPUT_NOT_SORTED: return "InputNotSorted";
    case DAUBLET_E_UNDERDETERMINED: return "Underdetermined";
    case DAUBLET_E_BAD_INPUT: return "BadInput";
    case DAUBLET_E_DEGENERATE_TARGET: return "DegenerateTarget";
    case DAUBLET_E_NO_SUCH_PRESET: return "NoSuchPreset";
    case DAUBLET_E_BAD_SCALES: return "BadScales";
    case DAUBLET_E_IO: return "IoFailure";
    case DAUBLET_E_PARSE: return "ParseFailure";
    default: return "Unknown";
  }
}

const char* daublet_last_error(void) { return g_last_error.c_str(); }

int daublet_filter(int order, double* taps) {
  if (int rc = require(taps != nullptr, "taps is null")) return rc;
  return guarded([&] {
    const daublet::DaubechiesSpec spec = daublet::daubechies_filter(order);
    std::memcpy(taps, spec.lowpass.data(),
                spec.lowpass.size() * sizeof(double));
  });
}

int daublet_highpass(int order, double* taps) {
  if (int rc = require(taps != nullptr, "taps is null")) return rc;
  return guarded([&] {
    const daublet::DaubechiesSpec spec = daublet::daubechies_filter(order);
    const std::vector<double> g = daublet::highpass_from_lowpass(spec);
    std::memcpy(taps, g.data(), g.size() * sizeof(double));
  });
}

int daublet_cascade(int order, int levels, int kind, daublet_waveform** out) {
  if (int rc = require(out != nullptr, "out is null")) return rc;
  return guarded([&] {
    const daublet::DaubechiesSpec spec = daublet::daubechies_filter(order);
    auto wave = std::make_unique<daublet_waveform>();
    wave->wave = (kind == DAUBLET_WAVELET)
                     ? daublet::cascade_wavelet(spec, levels)
                     : daublet::cascade_scaling(spec, levels);
    *out = wave.release();
  });
}

int daublet_waveform_create(double t0, double dt, const double* values,
                            size_t count, daublet_waveform** out) {
  if (int rc = require(out && values && count > 0, "bad waveform arguments"))
    return rc;
  return guarded([&] {
    if (!(dt > 0.0)) daublet::fail(daublet::errc::bad_input, "dt must be > 0");
    auto wave = std::make_unique<daublet_waveform>();
    wave->wave.t0 = t0;
    wave->wave.dt = dt;
    wave->wave.values.assign(values, values + count);
    *out = wave.release();
  });
}

void daublet_waveform_free(daublet_waveform* wave) { delete wave; }

size_t daublet_waveform_size(const daublet_waveform* wave) {
  return wave ? wave->wave.size() : 0;
}

double daublet_waveform_t0(const daublet_waveform* wave) {
  return wave ? wave->wave.t0 : 0.0;
}

double daublet_waveform_dt(const daublet_waveform* wave) {
  return wave ? wave->wave.dt : 0.0;
}

const double* daublet_waveform_values(const daublet_waveform* wave) {
  return wave ? wave->wave.values.data() : nullptr;
}

int daublet_waveform_write_csv(const daublet_waveform* wave,
                               const char* path) {
  if (int rc = require(wave && path, "bad arguments")) return rc;
  return guarded(
      [&] { daublet::write_text_file(path, daublet::waveform_to_csv(wave->wave)); });
}

int daublet_waveform_read_csv(const char* path, daublet_waveform** out) {
  if (int rc = require(path && out, "bad arguments")) return rc;
  return guarded([&] {
    auto wave = std::make_unique<daublet_waveform>();
    wave->wave = daublet::waveform_from_csv(daublet::read_text_file(path));
    *out = wave.release();
  });
}

int daublet_two_tone(double f1, double f2, double duration, double dt,
                     daublet_waveform** out) {
  if (int rc = require(out != nullptr, "out is null")) return rc;
  return guarded([&] {
    auto wave = std::make_unique<daublet_waveform>();
    wave->wave = daublet::two_tone_signal(f1, f2, duration, dt);
    *out = wave.release();
  });
}

int daublet_model_create(const double* a, const double* b, const double* c,
                         size_t terms, double support, const char* family,
                         const char* kind, daublet_model** out) {
  if (int rc = require(a && b && c && out, "bad arguments")) return rc;
  return guarded([&] {
    auto model = std::make_unique<daublet_model>();
    model->model.support = support;
    for (size_t i = 0; i < terms; ++i)
      model->model.terms.push_back({a[i], b[i], c[i]});
    daublet::validate(model->model);
    if (family) model->family = family;
    if (kind) {
      if (std::strcmp(kind, "wavelet") != 0 && std::strcmp(kind, "scaling") != 0)
        daublet::fail(daublet::errc::bad_input,
                      "kind must be 'wavelet' or 'scaling'");
      model->kind = kind;
    }
    *out = model.release();
  });
}

int daublet_model_preset(const char* family, const char* kind,
                         daublet_model** out) {
  if (int rc = require(out != nullptr, "out is null")) return rc;
  return guarded([&] {
    const daublet::PresetKey key = parse_key(family, kind);
    auto model = std::make_unique<daublet_model>();
    model->model = daublet::preset(key);
    model->family = daublet::family_name(key.family);
    model->kind = daublet::kind_name(key.kind);
    *out = model.release();
  });
}

void daublet_model_free(daublet_model* model) { delete model; }

size_t daublet_model_terms(const daublet_model* model) {
  return model ? model->model.terms.size() : 0;
}

int daublet_model_term(const daublet_model* model, size_t index, double* a,
                       double* b, double* c) {
  if (int rc = require(model && a && b && c, "bad arguments")) return rc;
  if (int rc = require(index < model->model.terms.size(), "index out of range"))
    return rc;
  const daublet::SineTerm& term = model->model.terms[index];
  *a = term.amplitude;
  *b = term.frequency;
  *c = term.phase;
  return DAUBLET_OK;
}

double daublet_model_support(const daublet_model* model) {
  return model ? model->model.support : 0.0;
}

const char* daublet_model_family(const daublet_model* model) {
  return model ? model->family.c_str() : "";
}

const char* daublet_model_kind(const daublet_model* model) {
  return model ? model->kind.c_str() : "";
}

int daublet_model_set_support(daublet_model* model, double support) {
  if (int rc = require(model != nullptr, "model is null")) return rc;
  return guarded([&] {
    if (!(support > 0.0))
      daublet::fail(daublet::errc::bad_input, "support must be positive");
    model->model.support = support;
  });
}

int daublet_model_set_info(daublet_model* model, const char* family,
                           const char* kind) {
  if (int rc = require(model != nullptr, "model is null")) return rc;
  return guarded([&] {
    if (kind && std::strcmp(kind, "wavelet") != 0 &&
        std::strcmp(kind, "scaling") != 0)
      daublet::fail(daublet::errc::bad_input,
                    "kind must be 'wavelet' or 'scaling'");
    if (family) model->family = family;
    if (kind) model->kind = kind;
  });
}

double daublet_model_eval(const daublet_model* model, double t) {
  return model ? daublet::model_eval(model->model, t) : 0.0;
}

double daublet_model_eval_gated(const daublet_model* model, double t) {
  return model ? daublet::eval_gated(model->model, t) : 0.0;
}

int daublet_model_sample(const daublet_model* model, double dt,
                         daublet_waveform** out) {
  if (int rc = require(model && out, "bad arguments")) return rc;
  return guarded([&] {
    auto wave = std::make_unique<daublet_waveform>();
    wave->wave = daublet::sample_gated(model->model, dt);
    *out = wave.release();
  });
}

int daublet_model_canonicalize(daublet_model* model) {
  if (int rc = require(model != nullptr, "model is null")) return rc;
  return guarded([&] { model->model = daublet::canonicalize(model->model); });
}

int daublet_model_save_json(const daublet_model* model, const char* path) {
  if (int rc = require(model && path, "bad arguments")) return rc;
  return guarded([&] {
    daublet::ModelInfo info{model->model, model->family, model->kind};
    daublet::write_text_file(path, daublet::model_to_json(info));
  });
}

int daublet_model_load_json(const char* path, daublet_model** out) {
  if (int rc = require(path && out, "bad arguments")) return rc;
  return guarded([&] {
    const daublet::ModelInfo info =
        daublet::model_from_json(daublet::read_text_file(path));
    auto model = std::make_unique<daublet_model>();
    model->model = info.model;
    model->family = info.family;
    model->kind = info.kind;
    *out = model.release();
  });
}

void daublet_fit_options_default(daublet_fit_options* options) {
  if (!options) return;
  const daublet::LmOptions defaults;
  options->max_iterations = defaults.max_iterations;
  options->lambda0 = defaults.lambda0;
  options->lambda_up = defaults.lambda_up;
  options->lambda_down = defaults.lambda_down;
  options->tol_cost = defaults.tol_cost;
  options->tol_gradient = defaults.tol_gradient;
}

int daublet_fit(const daublet_waveform* target, size_t terms,
                const daublet_model* init, const daublet_fit_options* options,
                daublet_model** out, daublet_fit_report* report) {
  if (int rc = require(target && out, "bad arguments")) return rc;
  return guarded([&] {
    daublet::LmOptions opts;
    if (options) {
      opts.max_iterations = options->max_iterations;
      opts.lambda0 = options->lambda0;
      opts.lambda_up = options->lambda_up;
      opts.lambda_down = options->lambda_down;
      opts.tol_cost = options->tol_cost;
      opts.tol_gradient = options->tol_gradient;
    }
    std::optional<daublet::SumOfSines> seed;
    if (init) seed = init->model;
    auto [fitted, fit_report] =
        daublet::lm_fit(target->wave, terms, seed, opts);
    auto model = std::make_unique<daublet_model>();
    model->model = std::move(fitted);
    if (init) {
      model->family = init->family;
      model->kind = init->kind;
    }
    *out = model.release();
    if (report) {
      report->r_squared = fit_report.r_squared;
      report->rmse = fit_report.rmse;
      report->final_lambda = fit_report.final_lambda;
      report->iterations = fit_report.iterations;
      report->converged = fit_report.converged ? 1 : 0;
    }
  });
}

int daublet_initial_model(const daublet_waveform* target, size_t terms,
                          daublet_model** out) {
  if (int rc = require(target && out, "bad arguments")) return rc;
  return guarded([&] {
    auto model = std::make_unique<daublet_model>();
    model->model = daublet::initialize_from_spectrum(target->wave, terms);
    *out = model.release();
  });
}

int daublet_goodness(const daublet_model* model,
                     const daublet_waveform* target,
                     daublet_fit_report* report) {
  if (int rc = require(model && target && report, "bad arguments")) return rc;
  return guarded([&] {
    const daublet::FitReport r = daublet::goodness(model->model, target->wave);
    report->r_squared = r.r_squared;
    report->rmse = r.rmse;
    report->final_lambda = r.final_lambda;
    report->iterations = r.iterations;
    report->converged = r.converged ? 1 : 0;
  });
}

int daublet_phase_from_frequency(double omega, double support, double* theta) {
  if (int rc = require(theta != nullptr, "theta is null")) return rc;
  return guarded(
      [&] { *theta = daublet::phase_from_frequency(omega, support); });
}

int daublet_frequency_from_phase(double theta, double support, double* omega) {
  if (int rc = require(omega != nullptr, "omega is null")) return rc;
  return guarded(
      [&] { *omega = daublet::frequency_from_phase(theta, support); });
}

int daublet_zero_mean_residual(double a, double b, double c, double support,
                               double* residual) {
  if (int rc = require(residual != nullptr, "residual is null")) return rc;
  return guarded(
      [&] { *residual = daublet::zero_mean_residual(a, b, c, support); });
}

int daublet_inharmonic_table(const daublet_model* model,
                             const int* k_assignment, int* k, double* fitted,
                             double* harmonic, double* deviation) {
  if (int rc = require(model && k && fitted && harmonic && deviation,
                       "bad arguments"))
    return rc;
  return guarded([&] {
    std::optional<std::vector<int>> assign;
    if (k_assignment)
      assign = std::vector<int>(k_assignment,
                                k_assignment + model->model.terms.size());
    const std::vector<daublet::InharmonicRow> rows =
        daublet::inharmonic_table(model->model, assign);
    for (size_t i = 0; i < rows.size(); ++i) {
      k[i] = rows[i].index;
      fitted[i] = rows[i].fitted;
      harmonic[i] = rows[i].harmonic;
      deviation[i] = rows[i].deviation;
    }
  });
}

int daublet_inharmonic_write_csv(const daublet_model* model,
                                 const int* k_assignment, const char* path) {
  if (int rc = require(model && path, "bad arguments")) return rc;
  return guarded([&] {
    std::optional<std::vector<int>> assign;
    if (k_assignment)
      assign = std::vector<int>(k_assignment,
                                k_assignment + model->model.terms.size());
    const std::vector<daublet::InharmonicRow> rows =
        daublet::inharmonic_table(model->model, assign);
    daublet::write_text_file(path, daublet::inharmonic_to_csv(rows));
  });
}

int daublet_spectrum_lines(const daublet_model* model, double* omega,
                           double* re, double* im) {
  if (int rc = require(model && omega && re && im, "bad arguments")) return rc;
  return guarded([&] {
    const std::vector<daublet::SpectralLine> lines =
        daublet::line_spectrum(model->model);
    for (size_t i = 0; i < lines.size(); ++i) {
      omega[i] = lines[i].frequency;
      re[i] = lines[i].amplitude.real();
      im[i] = lines[i].amplitude.imag();
    }
  });
}

int daublet_spectrum_exact(const daublet_model* model, double omega,
                           double* re, double* im) {
  if (int rc = require(model && re && im, "bad arguments")) return rc;
  return guarded([&] {
    const std::complex<double> v =
        daublet::truncated_spectrum(model->model, omega);
    *re = v.real();
    *im = v.imag();
  });
}

int daublet_spectrum_eq16(const daublet_model* model, double omega,
                          double* value) {
  if (int rc = require(model && value, "bad arguments")) return rc;
  return guarded(
      [&] { *value = daublet::magnitude_eq16(model->model, omega); });
}

int daublet_spectrum_write_csv(const daublet_model* model, int method,
                               double omega_min, double omega_max,
                               size_t points, const char* path,
                               double* eq16_rel_l2) {
  if (int rc = require(model && path, "bad arguments")) return rc;
  return guarded([&] {
    if (points < 2)
      daublet::fail(daublet::errc::bad_input, "need at least two grid points");
    if (!(omega_max > omega_min))
      daublet::fail(daublet::errc::bad_input,
                    "omega_max must exceed omega_min");
    daublet::SpectrumGrid grid;
    grid.omegas.resize(points);
    grid.values.resize(points);
    const double step = (omega_max - omega_min) / static_cast<double>(points - 1);
    for (size_t i = 0; i < points; ++i)
      grid.omegas[i] = omega_min + static_cast<double>(i) * step;

    if (method == DAUBLET_SPECTRUM_EXACT) {
      for (size_t i = 0; i < points; ++i)
        grid.values[i] = daublet::truncated_spectrum(model->model,
                                                     grid.omegas[i]);
    } else if (method == DAUBLET_SPECTRUM_EQ16) {
      grid.magnitude_only = true;
      double dist = 0.0, norm = 0.0;
      for (size_t i = 0; i < points; ++i) {
        const double approx =
            daublet::magnitude_eq16(model->model, grid.omegas[i]);
        const double exact =
            std::abs(daublet::truncated_spectrum(model->model, grid.omegas[i]));
        grid.values[i] = std::abs(approx);
        dist += (std::abs(approx) - exact) * (std::abs(approx) - exact);
        norm += exact * exact;
      }
      if (eq16_rel_l2)
        *eq16_rel_l2 = norm > 0.0 ? std::sqrt(dist / norm) : 0.0;
    } else if (method == DAUBLET_SPECTRUM_DFT) {
      // The oracle has its own bin grid; emit the bins inside the
      // requested window rather than resampling them.
      const size_t samples = 1u << 14;
      const daublet::SampledWaveform wave = daublet::sample_gated(
          model->model, model->model.support / static_cast<double>(samples));
      const daublet::SpectrumGrid oracle =
          daublet::dft_oracle(wave, 4 * samples);
      grid.omegas.clear();
      grid.values.clear();
      for (size_t i = 0; i < oracle.omegas.size(); ++i)
        if (oracle.omegas[i] >= omega_min && oracle.omegas[i] <= omega_max) {
          grid.omegas.push_back(oracle.omegas[i]);
          grid.values.push_back(oracle.values[i]);
        }
    } else {
      daublet::fail(daublet::errc::bad_input, "unknown spectrum method");
    }
    daublet::write_text_file(path, daublet::spectrum_to_csv(grid));
  });
}

int daublet_cwt(const daublet_waveform* signal, const double* scales,
                size_t scale_count, double sampling_dt,
                const daublet_model* kernel, daublet_scalogram** out) {
  if (int rc = require(signal && scales && kernel && out, "bad arguments"))
    return rc;
  return guarded([&] {
    daublet::ScaleGrid grid;
    grid.scales.assign(scales, scales + scale_count);
    grid.sampling_dt = sampling_dt;
    auto gram = std::make_unique<daublet_scalogram>();
    gram->gram = daublet::cwt(signal->wave, grid, kernel->model);
    *out = gram.release();
  });
}

void daublet_scalogram_free(daublet_scalogram* gram) { delete gram; }

size_t daublet_scalogram_scales(const daublet_scalogram* gram) {
  return gram ? gram->gram.scales.size() : 0;
}

size_t daublet_scalogram_times(const daublet_scalogram* gram) {
  return gram ? gram->gram.times() : 0;
}

int daublet_scalogram_scale(const daublet_scalogram* gram, size_t index,
                            double* scale) {
  if (int rc = require(gram && scale && index < gram->gram.scales.size(),
                       "bad arguments"))
    return rc;
  *scale = gram->gram.scales[index];
  return DAUBLET_OK;
}

int daublet_scalogram_time(const daublet_scalogram* gram, size_t index,
                           double* time) {
  if (int rc = require(gram && time && index < gram->gram.times(),
                       "bad arguments"))
    return rc;
  *time = gram->gram.time(index);
  return DAUBLET_OK;
}

int daublet_scalogram_coefficient(const daublet_scalogram* gram, size_t scale,
                                  size_t time, double* value) {
  if (int rc = require(gram && value && scale < gram->gram.scales.size() &&
                           time < gram->gram.times(),
                       "bad arguments"))
    return rc;
  *value = gram->gram.coefficient(scale, time);
  return DAUBLET_OK;
}

int daublet_scalogram_energy(const daublet_scalogram* gram, size_t scale,
                             size_t time, double* value) {
  if (int rc = require(gram && value && scale < gram->gram.scales.size() &&
                           time < gram->gram.times(),
                       "bad arguments"))
    return rc;
  *value = gram->gram.energy_at(scale, time);
  return DAUBLET_OK;
}

int daublet_scalogram_interior_end(const daublet_scalogram* gram, size_t scale,
                                   size_t* column) {
  if (int rc = require(gram && column && scale < gram->gram.scales.size(),
                       "bad arguments"))
    return rc;
  *column = gram->gram.interior_end[scale];
  return DAUBLET_OK;
}

int daublet_scalogram_write_csv(const daublet_scalogram* gram,
                                const char* path) {
  if (int rc = require(gram && path, "bad arguments")) return rc;
  return guarded([&] {
    daublet::write_text_file(path, daublet::scalogram_to_csv(gram->gram));
  });
}

int daublet_scalogram_read_csv(const char* path, daublet_scalogram** out) {
  if (int rc = require(path && out, "bad arguments")) return rc;
  return guarded([&] {
    auto gram = std::make_unique<daublet_scalogram>();
    gram->gram = daublet::scalogram_from_csv(daublet::read_text_file(path));
    *out = gram.release();
  });
}

int daublet_center_frequency(const daublet_model* kernel, int method,
                             double* fc) {
  if (int rc = require(kernel && fc, "bad arguments")) return rc;
  return guarded([&] {
    const auto m = method == DAUBLET_FC_DFT_PEAK
                       ? daublet::CenterFrequencyMethod::dft_peak
                       : daublet::CenterFrequencyMethod::dominant_term;
    *fc = daublet::center_frequency(kernel->model, m);
  });
}

int daublet_scale_to_frequency(double scale, double sampling_dt, double fc,
                               double* freq) {
  if (int rc = require(freq != nullptr, "freq is null")) return rc;
  return guarded(
      [&] { *freq = daublet::scale_to_frequency(scale, sampling_dt, fc); });
}

int daublet_default_scales(const daublet_waveform* signal, size_t count,
                           double fc, double* scales) {
  if (int rc = require(signal && scales, "bad arguments")) return rc;
  return guarded([&] {
    const daublet::ScaleGrid grid =
        daublet::default_scale_grid(signal->wave, count, fc);
    std::memcpy(scales, grid.scales.data(), count * sizeof(double));
  });
}

int daublet_detect_tones(const daublet_scalogram* gram, double fc,
                         size_t count, double* frequencies, double* energies,
                         size_t* found, int* complete) {
  if (int rc = require(gram && frequencies && energies && found && complete,
                       "bad arguments"))
    return rc;
  return guarded([&] {
    const daublet::ToneDetection det =
        daublet::detect_tones(gram->gram, fc, count);
    *found = det.tones.size();
    *complete = det.complete ? 1 : 0;
    for (size_t i = 0; i < det.tones.size(); ++i) {
      frequencies[i] = det.tones[i].frequency;
      energies[i] = det.tones[i].energy;
    }
  });
}

int daublet_tone_report_write_json(double fc, const double* frequencies,
                                   const double* energies, size_t count,
                                   const char* path) {
  if (int rc = require(path && (count == 0 || (frequencies && energies)),
                       "bad arguments"))
    return rc;
  return guarded([&] {
    std::vector<daublet::Tone> tones(count);
    for (size_t i = 0; i < count; ++i)
      tones[i] = {frequencies[i], energies[i]};
    daublet::write_text_file(path, daublet::tone_report_to_json(fc, tones));
  });
}

int daublet_tables_write_csv(const char* family, const char* kind,
                             const char* path) {
  if (int rc = require(path != nullptr, "path is null")) return rc;
  return guarded([&] {
    std::optional<daublet::Family> fam;
    std::optional<daublet::Kind> knd;
    if (family) fam = daublet::parse_family(family);
    if (kind) knd = daublet::parse_kind(kind);
    daublet::write_text_file(path, daublet::tables_to_csv(fam, knd));
  });
}

}  // extern "C"
