/* daublet: closed-form Daubechies approximations, refitting, spectra and
 * scalograms behind a C interface.
 *
 * All functions return DAUBLET_OK (0) on success or a negative status code;
 * daublet_last_error() describes the most recent failure on the calling
 * thread. Objects returned through handle out-parameters are owned by the
 * caller and released with the matching _free function. Output paths accept
 * "-" for stdout.
 */
#ifndef DAUBLET_H
#define DAUBLET_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define DAUBLET_OK 0
#define DAUBLET_E_ORDER_UNSUPPORTED (-1)
#define DAUBLET_E_GRID_TOO_LARGE (-2)
#define DAUBLET_E_GRID_TOO_COARSE (-3)
#define DAUBLET_E_BRANCH_SINGULARITY (-4)
#define DAUBLET_E_TANGENT_SINGULARITY (-5)
#define DAUBLET_E_INPUT_NOT_SORTED (-6)
#define DAUBLET_E_UNDERDETERMINED (-7)
#define DAUBLET_E_BAD_INPUT (-8)
#define DAUBLET_E_DEGENERATE_TARGET (-9)
#define DAUBLET_E_NO_SUCH_PRESET (-10)
#define DAUBLET_E_BAD_SCALES (-11)
#define DAUBLET_E_IO (-12)
#define DAUBLET_E_PARSE (-13)
#define DAUBLET_E_UNKNOWN (-99)

typedef struct daublet_waveform daublet_waveform;
typedef struct daublet_model daublet_model;
typedef struct daublet_scalogram daublet_scalogram;

const char* daublet_version(void);
const char* daublet_status_name(int status);
/* Message for the last failure on this thread; empty string if none. */
const char* daublet_last_error(void);

/* ---- Daubechies filters and cascade references ---- */

/* taps must hold 2*order doubles. */
int daublet_filter(int order, double* taps);
/* Quadrature-mirror high-pass taps, same layout. */
int daublet_highpass(int order, double* taps);

#define DAUBLET_SCALING 0
#define DAUBLET_WAVELET 1

/* Cascade reference waveform on t = n/2^levels over [0, 2N-1]. */
int daublet_cascade(int order, int levels, int kind, daublet_waveform** out);

/* ---- Waveforms ---- */

int daublet_waveform_create(double t0, double dt, const double* values,
                            size_t count, daublet_waveform** out);
void daublet_waveform_free(daublet_waveform* wave);
size_t daublet_waveform_size(const daublet_waveform* wave);
double daublet_waveform_t0(const daublet_waveform* wave);
double daublet_waveform_dt(const daublet_waveform* wave);
const double* daublet_waveform_values(const daublet_waveform* wave);
int daublet_waveform_write_csv(const daublet_waveform* wave, const char* path);
int daublet_waveform_read_csv(const char* path, daublet_waveform** out);
/* sin(2 pi f1 t) + sin(2 pi f2 t) on [0, duration) at step dt. */
int daublet_two_tone(double f1, double f2, double duration, double dt,
                     daublet_waveform** out);

/* ---- Sum-of-sines models ---- */

int daublet_model_create(const double* a, const double* b, const double* c,
                         size_t terms, double support, const char* family,
                         const char* kind, daublet_model** out);
/* family: "db4" | "db6" | "db8"; kind: "wavelet" | "scaling". */
int daublet_model_preset(const char* family, const char* kind,
                         daublet_model** out);
void daublet_model_free(daublet_model* model);
size_t daublet_model_terms(const daublet_model* model);
int daublet_model_term(const daublet_model* model, size_t index, double* a,
                       double* b, double* c);
double daublet_model_support(const daublet_model* model);
const char* daublet_model_family(const daublet_model* model);
const char* daublet_model_kind(const daublet_model* model);
int daublet_model_set_support(daublet_model* model, double support);
int daublet_model_set_info(daublet_model* model, const char* family,
                           const char* kind);
double daublet_model_eval(const daublet_model* model, double t);
double daublet_model_eval_gated(const daublet_model* model, double t);
int daublet_model_sample(const daublet_model* model, double dt,
                         daublet_waveform** out);
int daublet_model_canonicalize(daublet_model* model);
int daublet_model_save_json(const daublet_model* model, const char* path);
int daublet_model_load_json(const char* path, daublet_model** out);

/* ---- Levenberg-Marquardt fitting ---- */

typedef struct daublet_fit_report {
  double r_squared;
  double rmse;
  double final_lambda;
  size_t iterations;
  int converged;
} daublet_fit_report;

typedef struct daublet_fit_options {
  size_t max_iterations; /* 500 */
  double lambda0;        /* 1e-3 */
  double lambda_up;      /* 10 */
  double lambda_down;    /* 10 */
  double tol_cost;       /* 1e-12 */
  double tol_gradient;   /* 1e-10 */
} daublet_fit_options;

void daublet_fit_options_default(daublet_fit_options* options);

/* init may be NULL: the spectral initializer then seeds the fit. */
int daublet_fit(const daublet_waveform* target, size_t terms,
                const daublet_model* init, const daublet_fit_options* options,
                daublet_model** out, daublet_fit_report* report);
int daublet_initial_model(const daublet_waveform* target, size_t terms,
                          daublet_model** out);
int daublet_goodness(const daublet_model* model,
                     const daublet_waveform* target,
                     daublet_fit_report* report);

/* ---- Inharmonic analysis ---- */

int daublet_phase_from_frequency(double omega, double support, double* theta);
int daublet_frequency_from_phase(double theta, double support, double* omega);
int daublet_zero_mean_residual(double a, double b, double c, double support,
                               double* residual);
/* Arrays sized daublet_model_terms(model); k_assignment may be NULL for the
 * nearest-harmonic default. Model frequencies must ascend. */
int daublet_inharmonic_table(const daublet_model* model,
                             const int* k_assignment, int* k, double* fitted,
                             double* harmonic, double* deviation);
int daublet_inharmonic_write_csv(const daublet_model* model,
                                 const int* k_assignment, const char* path);

/* ---- Spectra ---- */

#define DAUBLET_SPECTRUM_EXACT 0
#define DAUBLET_SPECTRUM_EQ16 1
#define DAUBLET_SPECTRUM_DFT 2

/* Dirac lines of the ungated series; arrays sized 2*terms. */
int daublet_spectrum_lines(const daublet_model* model, double* omega,
                           double* re, double* im);
int daublet_spectrum_exact(const daublet_model* model, double omega,
                           double* re, double* im);
int daublet_spectrum_eq16(const daublet_model* model, double omega,
                          double* value);
/* Evaluates the chosen method on a uniform grid and writes spectrum CSV.
 * For EQ16, *eq16_rel_l2 (when non-NULL) receives the relative L2 distance
 * between |eq16| and the exact magnitude over the same grid. */
int daublet_spectrum_write_csv(const daublet_model* model, int method,
                               double omega_min, double omega_max,
                               size_t points, const char* path,
                               double* eq16_rel_l2);

/* ---- Scalograms ---- */

int daublet_cwt(const daublet_waveform* signal, const double* scales,
                size_t scale_count, double sampling_dt,
                const daublet_model* kernel, daublet_scalogram** out);
void daublet_scalogram_free(daublet_scalogram* gram);
size_t daublet_scalogram_scales(const daublet_scalogram* gram);
size_t daublet_scalogram_times(const daublet_scalogram* gram);
int daublet_scalogram_scale(const daublet_scalogram* gram, size_t index,
                            double* scale);
int daublet_scalogram_time(const daublet_scalogram* gram, size_t index,
                           double* time);
int daublet_scalogram_coefficient(const daublet_scalogram* gram, size_t scale,
                                  size_t time, double* value);
int daublet_scalogram_energy(const daublet_scalogram* gram, size_t scale,
                             size_t time, double* value);
/* First column per scale whose kernel window spills past the signal end
 * (equals the time count when none do). */
int daublet_scalogram_interior_end(const daublet_scalogram* gram, size_t scale,
                                   size_t* column);
int daublet_scalogram_write_csv(const daublet_scalogram* gram,
                                const char* path);
int daublet_scalogram_read_csv(const char* path, daublet_scalogram** out);

#define DAUBLET_FC_DOMINANT_TERM 0
#define DAUBLET_FC_DFT_PEAK 1

int daublet_center_frequency(const daublet_model* kernel, int method,
                             double* fc);
int daublet_scale_to_frequency(double scale, double sampling_dt, double fc,
                               double* freq);
/* count log-spaced scales spanning pseudo-frequencies
 * [2/duration, 0.5/dt]; scales must hold count doubles. */
int daublet_default_scales(const daublet_waveform* signal, size_t count,
                           double fc, double* scales);
/* frequencies/energies sized count; *found <= count, *complete set to 0
 * when fewer ridge maxima exist than requested. */
int daublet_detect_tones(const daublet_scalogram* gram, double fc,
                         size_t count, double* frequencies, double* energies,
                         size_t* found, int* complete);
int daublet_tone_report_write_json(double fc, const double* frequencies,
                                   const double* energies, size_t count,
                                   const char* path);

/* ---- Shipped coefficient tables ---- */

/* family/kind may be NULL to emit everything; output ends with a
 * "# fnv1a64 <hex>" checksum line. */
int daublet_tables_write_csv(const char* family, const char* kind,
                             const char* path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DAUBLET_H */
