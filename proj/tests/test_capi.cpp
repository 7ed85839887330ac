// Exercises the shared-library C interface end to end: handle lifecycle,
// status codes, file IO and a small fit.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <unistd.h>
#include <vector>

#include "daublet.h"

namespace {

std::string temp_path(const char* name) {
  return std::string("/tmp/daublet_capi_") + std::to_string(getpid()) + "_" +
         name;
}

}  // namespace

TEST_CASE("version and status strings") {
  CHECK(daublet_version() != nullptr);
  CHECK(std::strcmp(daublet_status_name(DAUBLET_OK), "Ok") == 0);
  CHECK(std::strcmp(daublet_status_name(DAUBLET_E_NO_SUCH_PRESET),
                    "NoSuchPreset") == 0);
}

TEST_CASE("filters and highpass through the C surface") {
  double h[4];
  REQUIRE(daublet_filter(2, h) == DAUBLET_OK);
  const double s3 = std::sqrt(3.0);
  CHECK(h[0] == doctest::Approx((1 + s3) / (4 * std::sqrt(2.0))));
  double g[4];
  REQUIRE(daublet_highpass(2, g) == DAUBLET_OK);
  CHECK(g[0] == doctest::Approx(h[3]));
  CHECK(g[1] == doctest::Approx(-h[2]));

  CHECK(daublet_filter(0, h) == DAUBLET_E_ORDER_UNSUPPORTED);
  CHECK(std::strlen(daublet_last_error()) > 0);
  CHECK(daublet_filter(2, nullptr) == DAUBLET_E_BAD_INPUT);
}

TEST_CASE("cascade waveform handle and csv round trip") {
  daublet_waveform* wave = nullptr;
  REQUIRE(daublet_cascade(4, 8, DAUBLET_WAVELET, &wave) == DAUBLET_OK);
  CHECK(daublet_waveform_size(wave) == 7u * 256u + 1u);
  CHECK(daublet_waveform_t0(wave) == 0.0);
  CHECK(daublet_waveform_dt(wave) == doctest::Approx(1.0 / 256.0));
  const double* values = daublet_waveform_values(wave);
  REQUIRE(values != nullptr);

  const std::string path = temp_path("wave.csv");
  REQUIRE(daublet_waveform_write_csv(wave, path.c_str()) == DAUBLET_OK);
  daublet_waveform* back = nullptr;
  REQUIRE(daublet_waveform_read_csv(path.c_str(), &back) == DAUBLET_OK);
  REQUIRE(daublet_waveform_size(back) == daublet_waveform_size(wave));
  CHECK(std::memcmp(daublet_waveform_values(back), values,
                    daublet_waveform_size(wave) * sizeof(double)) == 0);
  daublet_waveform_free(back);
  daublet_waveform_free(wave);
  std::remove(path.c_str());

  CHECK(daublet_cascade(4, 99, DAUBLET_WAVELET, &wave) ==
        DAUBLET_E_GRID_TOO_LARGE);
  CHECK(daublet_waveform_read_csv("/nonexistent/nope.csv", &back) ==
        DAUBLET_E_IO);
}

TEST_CASE("presets and model json") {
  daublet_model* model = nullptr;
  REQUIRE(daublet_model_preset("db6", "scaling", &model) == DAUBLET_OK);
  CHECK(daublet_model_terms(model) == 10);
  CHECK(daublet_model_support(model) == 11.0);
  CHECK(std::strcmp(daublet_model_family(model), "db6") == 0);
  CHECK(std::strcmp(daublet_model_kind(model), "scaling") == 0);
  double a, b, c;
  REQUIRE(daublet_model_term(model, 0, &a, &b, &c) == DAUBLET_OK);
  CHECK(a == doctest::Approx(0.2247));
  CHECK(b == doctest::Approx(0.648));
  CHECK(c == doctest::Approx(1.540));

  const std::string path = temp_path("model.json");
  REQUIRE(daublet_model_save_json(model, path.c_str()) == DAUBLET_OK);
  daublet_model* loaded = nullptr;
  REQUIRE(daublet_model_load_json(path.c_str(), &loaded) == DAUBLET_OK);
  CHECK(daublet_model_terms(loaded) == 10);
  double a2, b2, c2;
  REQUIRE(daublet_model_term(loaded, 9, &a2, &b2, &c2) == DAUBLET_OK);
  REQUIRE(daublet_model_term(model, 9, &a, &b, &c) == DAUBLET_OK);
  CHECK(a == a2);
  CHECK(b == b2);
  CHECK(c == c2);
  daublet_model_free(loaded);
  daublet_model_free(model);
  std::remove(path.c_str());

  CHECK(daublet_model_preset("db5", "wavelet", &model) ==
        DAUBLET_E_NO_SUCH_PRESET);
  CHECK(daublet_model_preset("db4", "mother", &model) ==
        DAUBLET_E_NO_SUCH_PRESET);
}

TEST_CASE("gated evaluation and sampling") {
  daublet_model* model = nullptr;
  REQUIRE(daublet_model_preset("db4", "wavelet", &model) == DAUBLET_OK);
  CHECK(daublet_model_eval_gated(model, -0.5) == 0.0);
  CHECK(daublet_model_eval_gated(model, 7.0) == 0.0);
  CHECK(daublet_model_eval_gated(model, 3.0) ==
        doctest::Approx(daublet_model_eval(model, 3.0)));
  daublet_waveform* wave = nullptr;
  REQUIRE(daublet_model_sample(model, 7.0 / 512.0, &wave) == DAUBLET_OK);
  CHECK(daublet_waveform_size(wave) == 512);
  daublet_waveform_free(wave);
  CHECK(daublet_model_sample(model, 3.0, &wave) == DAUBLET_E_GRID_TOO_COARSE);
  daublet_model_free(model);
}

TEST_CASE("inharmonic helpers") {
  double theta = 0.0;
  REQUIRE(daublet_phase_from_frequency(M_PI / 2.0, 1.0, &theta) == DAUBLET_OK);
  CHECK(theta == doctest::Approx(-M_PI / 4.0));
  CHECK(daublet_phase_from_frequency(M_PI, 1.0, &theta) ==
        DAUBLET_E_BRANCH_SINGULARITY);
  double omega = 0.0;
  REQUIRE(daublet_frequency_from_phase(-M_PI / 4.0, 2.0, &omega) == DAUBLET_OK);
  CHECK(omega == doctest::Approx(M_PI / 4.0));
  CHECK(daublet_frequency_from_phase(M_PI / 2.0, 1.0, &omega) ==
        DAUBLET_E_TANGENT_SINGULARITY);
  double res = 0.0;
  REQUIRE(daublet_zero_mean_residual(1.0, 0.0, M_PI / 2.0, 3.0, &res) ==
          DAUBLET_OK);
  CHECK(res == doctest::Approx(3.0));

  daublet_model* model = nullptr;
  REQUIRE(daublet_model_preset("db4", "wavelet", &model) == DAUBLET_OK);
  REQUIRE(daublet_model_canonicalize(model) == DAUBLET_OK);
  const int assignment[8] = {1, 2, 4, 5, 6, 7, 9, 10};
  int k[8];
  double fitted[8], harmonic[8], deviation[8];
  REQUIRE(daublet_inharmonic_table(model, assignment, k, fitted, harmonic,
                                   deviation) == DAUBLET_OK);
  CHECK(k[0] == 1);
  CHECK(fitted[0] == doctest::Approx(1.372));
  CHECK(deviation[0] == doctest::Approx(0.474).epsilon(0.01));
  daublet_model_free(model);
}

TEST_CASE("fit through the C surface") {
  // synthesize 0.3 sin(2.5 t + 0.9) and recover it
  std::vector<double> samples(400);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double t = 0.02 * static_cast<double>(i);
    samples[i] = 0.3 * std::sin(2.5 * t + 0.9);
  }
  daublet_waveform* target = nullptr;
  REQUIRE(daublet_waveform_create(0.0, 0.02, samples.data(), samples.size(),
                                  &target) == DAUBLET_OK);
  daublet_fit_options options;
  daublet_fit_options_default(&options);
  CHECK(options.max_iterations == 500);
  CHECK(options.lambda0 == 1e-3);

  daublet_model* fitted = nullptr;
  daublet_fit_report report;
  REQUIRE(daublet_fit(target, 1, nullptr, &options, &fitted, &report) ==
          DAUBLET_OK);
  CHECK(report.converged == 1);
  CHECK(report.r_squared > 1.0 - 1e-10);
  double a, b, c;
  REQUIRE(daublet_model_term(fitted, 0, &a, &b, &c) == DAUBLET_OK);
  CHECK(a == doctest::Approx(0.3).epsilon(1e-7));
  CHECK(b == doctest::Approx(2.5).epsilon(1e-7));
  CHECK(c == doctest::Approx(0.9).epsilon(1e-7));

  daublet_fit_report quality;
  REQUIRE(daublet_goodness(fitted, target, &quality) == DAUBLET_OK);
  CHECK(quality.r_squared == doctest::Approx(report.r_squared));

  daublet_model* init = nullptr;
  REQUIRE(daublet_initial_model(target, 1, &init) == DAUBLET_OK);
  CHECK(daublet_model_terms(init) == 1);
  daublet_model_free(init);
  daublet_model_free(fitted);

  CHECK(daublet_fit(target, 0, nullptr, nullptr, &fitted, &report) ==
        DAUBLET_E_BAD_INPUT);
  daublet_waveform_free(target);
}

TEST_CASE("spectrum through the C surface") {
  daublet_model* model = nullptr;
  REQUIRE(daublet_model_preset("db6", "wavelet", &model) == DAUBLET_OK);
  double omega[16], re[16], im[16];
  REQUIRE(daublet_spectrum_lines(model, omega, re, im) == DAUBLET_OK);
  CHECK(omega[0] == doctest::Approx(4.850));
  CHECK(omega[1] == doctest::Approx(-4.850));

  double dc_re, dc_im;
  REQUIRE(daublet_spectrum_exact(model, 0.0, &dc_re, &dc_im) == DAUBLET_OK);
  CHECK(std::abs(dc_im) < 1e-12);

  double peak = 0.0;
  REQUIRE(daublet_spectrum_eq16(model, 4.850, &peak) == DAUBLET_OK);
  CHECK(std::abs(peak) > 0.5);

  const std::string path = temp_path("spec.csv");
  double rel = -1.0;
  REQUIRE(daublet_spectrum_write_csv(model, DAUBLET_SPECTRUM_EQ16, 0.5, 12.0,
                                     1151, path.c_str(), &rel) == DAUBLET_OK);
  CHECK(rel > 0.0);
  std::remove(path.c_str());
  daublet_model_free(model);
}

TEST_CASE("scalogram pipeline through the C surface") {
  daublet_waveform* signal = nullptr;
  REQUIRE(daublet_two_tone(10.0, 40.0, 1.0, 1e-3, &signal) == DAUBLET_OK);
  CHECK(daublet_waveform_size(signal) == 1000);

  daublet_model* kernel = nullptr;
  REQUIRE(daublet_model_preset("db4", "wavelet", &kernel) == DAUBLET_OK);
  double fc = 0.0;
  REQUIRE(daublet_center_frequency(kernel, DAUBLET_FC_DOMINANT_TERM, &fc) ==
          DAUBLET_OK);
  CHECK(fc == doctest::Approx(4.586 / (2.0 * M_PI)));

  std::vector<double> scales(64);
  REQUIRE(daublet_default_scales(signal, scales.size(), fc, scales.data()) ==
          DAUBLET_OK);
  daublet_scalogram* gram = nullptr;
  REQUIRE(daublet_cwt(signal, scales.data(), scales.size(), 1e-3, kernel,
                      &gram) == DAUBLET_OK);
  CHECK(daublet_scalogram_scales(gram) == 64);
  CHECK(daublet_scalogram_times(gram) == 1000);

  double coeff = 0.0, energy = 0.0;
  REQUIRE(daublet_scalogram_coefficient(gram, 10, 500, &coeff) == DAUBLET_OK);
  REQUIRE(daublet_scalogram_energy(gram, 10, 500, &energy) == DAUBLET_OK);
  CHECK(energy == doctest::Approx(coeff * coeff).epsilon(1e-15));

  double freqs[2], energies[2];
  size_t found = 0;
  int complete = 0;
  REQUIRE(daublet_detect_tones(gram, fc, 2, freqs, energies, &found,
                               &complete) == DAUBLET_OK);
  CHECK(found == 2);
  CHECK(complete == 1);

  const std::string gram_path = temp_path("gram.csv");
  REQUIRE(daublet_scalogram_write_csv(gram, gram_path.c_str()) == DAUBLET_OK);
  daublet_scalogram* back = nullptr;
  REQUIRE(daublet_scalogram_read_csv(gram_path.c_str(), &back) == DAUBLET_OK);
  CHECK(daublet_scalogram_scales(back) == 64);
  CHECK(daublet_scalogram_times(back) == 1000);
  double coeff_back = 0.0;
  REQUIRE(daublet_scalogram_coefficient(back, 10, 500, &coeff_back) ==
          DAUBLET_OK);
  CHECK(coeff_back == coeff);
  daublet_scalogram_free(back);
  std::remove(gram_path.c_str());

  const std::string report_path = temp_path("tones.json");
  REQUIRE(daublet_tone_report_write_json(fc, freqs, energies, found,
                                         report_path.c_str()) == DAUBLET_OK);
  std::remove(report_path.c_str());

  // bad scales surface as their own status
  const double bad[2] = {5.0, 3.0};
  daublet_scalogram* nope = nullptr;
  CHECK(daublet_cwt(signal, bad, 2, 1e-3, kernel, &nope) ==
        DAUBLET_E_BAD_SCALES);

  daublet_scalogram_free(gram);
  daublet_model_free(kernel);
  daublet_waveform_free(signal);
}

TEST_CASE("tables through the C surface") {
  const std::string path = temp_path("tables.csv");
  REQUIRE(daublet_tables_write_csv(nullptr, nullptr, path.c_str()) ==
          DAUBLET_OK);
  std::FILE* f = std::fopen(path.c_str(), "rb");
  REQUIRE(f != nullptr);
  char line[128];
  REQUIRE(std::fgets(line, sizeof(line), f) != nullptr);
  CHECK(std::strcmp(line, "family,kind,k,a,b,c\n") == 0);
  std::fclose(f);
  std::remove(path.c_str());
  CHECK(daublet_tables_write_csv("db9", nullptr, path.c_str()) ==
        DAUBLET_E_NO_SUCH_PRESET);
}
