// Command-line front end for the daublet shared library. Every subcommand
// is file-based and deterministic: the same argv and inputs produce
// byte-identical outputs (no timestamps in data files).
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "daublet.h"

namespace {

constexpr int kExitNumeric = 1;
constexpr int kExitUsage = 2;

struct CliFailure {
  int exit_code;
  std::string message;
};

[[noreturn]] void usage_error(const std::string& message) {
  throw CliFailure{kExitUsage, message};
}

// Library failures surface as exit 1 (numeric) or exit 2 (input shaped
// wrong: missing files, malformed models, unknown presets).
[[noreturn]] void lib_error(int status, const std::string& context) {
  const std::string message = context + ": " +
                              daublet_status_name(status) + ": " +
                              daublet_last_error();
  if (status == DAUBLET_E_IO || status == DAUBLET_E_PARSE ||
      status == DAUBLET_E_NO_SUCH_PRESET)
    throw CliFailure{kExitUsage, message};
  throw CliFailure{kExitNumeric, message};
}

void check(int status, const std::string& context) {
  if (status != DAUBLET_OK) lib_error(status, context);
}

struct WaveformDeleter {
  void operator()(daublet_waveform* w) const { daublet_waveform_free(w); }
};
struct ModelDeleter {
  void operator()(daublet_model* m) const { daublet_model_free(m); }
};
struct ScalogramDeleter {
  void operator()(daublet_scalogram* g) const { daublet_scalogram_free(g); }
};
using WaveformPtr = std::unique_ptr<daublet_waveform, WaveformDeleter>;
using ModelPtr = std::unique_ptr<daublet_model, ModelDeleter>;
using ScalogramPtr = std::unique_ptr<daublet_scalogram, ScalogramDeleter>;

int family_order(const std::string& family) {
  if (family == "db4") return 4;
  if (family == "db6") return 6;
  if (family == "db8") return 8;
  if (family.size() > 2 && family.rfind("db", 0) == 0) {
    char* end = nullptr;
    const long n = std::strtol(family.c_str() + 2, &end, 10);
    if (end && *end == '\0' && n >= 1 && n <= 10) return static_cast<int>(n);
  }
  usage_error("--family expects db1..db10, got '" + family + "'");
}

// "db4-wavelet" -> model handle
ModelPtr load_preset(const std::string& name) {
  const std::size_t dash = name.find('-');
  if (dash == std::string::npos)
    usage_error("--preset expects <family>-<kind>, e.g. db4-wavelet");
  daublet_model* model = nullptr;
  check(daublet_model_preset(name.substr(0, dash).c_str(),
                             name.substr(dash + 1).c_str(), &model),
        "--preset " + name);
  return ModelPtr(model);
}

ModelPtr load_model_arg(const std::string& preset, const std::string& file) {
  if (!preset.empty() && !file.empty())
    usage_error("--preset and --model are mutually exclusive");
  if (preset.empty() && file.empty())
    usage_error("one of --preset or --model is required");
  if (!preset.empty()) return load_preset(preset);
  daublet_model* model = nullptr;
  check(daublet_model_load_json(file.c_str(), &model), "--model " + file);
  return ModelPtr(model);
}

std::vector<double> parse_number_list(const std::string& text,
                                      const char* flag) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t pos = text.find(',', start);
    const std::string field =
        text.substr(start, pos == std::string::npos ? pos : pos - start);
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (field.empty() || !end || *end != '\0')
      usage_error(std::string(flag) + ": bad number '" + field + "'");
    out.push_back(v);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string format_report(const daublet_fit_report& report) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "{\"r_squared\": %.17g, \"rmse\": %.17g, \"iterations\": %zu, "
                "\"converged\": %s, \"final_lambda\": %.17g}\n",
                report.r_squared, report.rmse, report.iterations,
                report.converged ? "true" : "false", report.final_lambda);
  return buf;
}

// ---- subcommand runners ----

struct GenArgs {
  std::string family;
  std::string kind = "wavelet";
  int levels = 10;
  std::string output = "-";
};

void run_gen(const GenArgs& args) {
  const int order = family_order(args.family);
  const int kind = args.kind == "scaling" ? DAUBLET_SCALING : DAUBLET_WAVELET;
  daublet_waveform* wave = nullptr;
  check(daublet_cascade(order, args.levels, kind, &wave), "gen");
  WaveformPtr guard(wave);
  check(daublet_waveform_write_csv(wave, args.output.c_str()), "gen --output");
}

struct FitArgs {
  std::string family;
  std::string kind = "wavelet";
  int levels = 10;
  int terms = 0;  // 0: 8 for wavelet, 10 for scaling
  std::string init = "auto";
  std::string output = "-";
};

void run_fit(const FitArgs& args) {
  const int order = family_order(args.family);
  const int kind = args.kind == "scaling" ? DAUBLET_SCALING : DAUBLET_WAVELET;
  daublet_waveform* target = nullptr;
  check(daublet_cascade(order, args.levels, kind, &target), "fit target");
  WaveformPtr target_guard(target);

  ModelPtr init;
  if (args.init != "auto") {
    daublet_model* m = nullptr;
    check(daublet_model_load_json(args.init.c_str(), &m), "--init " + args.init);
    init.reset(m);
  }
  std::size_t terms = args.terms > 0 ? static_cast<std::size_t>(args.terms)
                                     : (kind == DAUBLET_WAVELET ? 8 : 10);
  if (init) {
    if (args.terms > 0 && terms != daublet_model_terms(init.get()))
      usage_error("--terms disagrees with the --init model's term count");
    terms = daublet_model_terms(init.get());
  }

  daublet_model* fitted = nullptr;
  daublet_fit_report report;
  check(daublet_fit(target, terms, init.get(), nullptr, &fitted, &report),
        "fit");
  ModelPtr fitted_guard(fitted);
  // the family support is known exactly; the fit grid only approximates it
  check(daublet_model_set_support(fitted, 2.0 * order - 1.0), "fit");
  check(daublet_model_set_info(fitted, args.family.c_str(), args.kind.c_str()),
        "fit");
  std::fputs(format_report(report).c_str(), stdout);
  if (args.output != "-")
    check(daublet_model_save_json(fitted, args.output.c_str()),
          "fit --output");
  else
    check(daublet_model_save_json(fitted, "-"), "fit --output");
}

struct EvalArgs {
  std::string preset;
  std::string model;
  double dt = 0.0;  // 0: support/1024
  std::string output = "-";
};

void run_eval(const EvalArgs& args) {
  const ModelPtr model = load_model_arg(args.preset, args.model);
  const double support = daublet_model_support(model.get());
  const double dt = args.dt > 0.0 ? args.dt : support / 1024.0;
  daublet_waveform* wave = nullptr;
  check(daublet_model_sample(model.get(), dt, &wave), "eval");
  WaveformPtr guard(wave);
  check(daublet_waveform_write_csv(wave, args.output.c_str()),
        "eval --output");
}

struct SpectrumArgs {
  std::string preset;
  std::string model;
  std::string method = "exact";
  double omega_min = 0.0;
  double omega_max = 0.0;  // 0: 3 * max |b_k|
  std::size_t points = 4096;
  std::string output = "-";
};

void run_spectrum(const SpectrumArgs& args) {
  const ModelPtr model = load_model_arg(args.preset, args.model);
  int method = -1;
  if (args.method == "exact") method = DAUBLET_SPECTRUM_EXACT;
  else if (args.method == "eq16") method = DAUBLET_SPECTRUM_EQ16;
  else if (args.method == "dft") method = DAUBLET_SPECTRUM_DFT;
  else usage_error("--method expects exact, eq16 or dft");

  double omega_max = args.omega_max;
  if (omega_max <= 0.0) {
    double top = 0.0;
    const std::size_t terms = daublet_model_terms(model.get());
    for (std::size_t i = 0; i < terms; ++i) {
      double a, b, c;
      check(daublet_model_term(model.get(), i, &a, &b, &c), "spectrum");
      top = std::max(top, std::fabs(b));
    }
    omega_max = 3.0 * top;
  }

  double rel = 0.0;
  check(daublet_spectrum_write_csv(model.get(), method, args.omega_min,
                                   omega_max, args.points,
                                   args.output.c_str(), &rel),
        "spectrum --output");
  if (method == DAUBLET_SPECTRUM_EQ16) {
    char line[64];
    std::snprintf(line, sizeof(line), "eq16_rel_l2_vs_exact=%.17g\n", rel);
    // keep the CSV clean when it goes to stdout
    std::fputs(line, args.output == "-" ? stderr : stdout);
  }
}

struct InharmArgs {
  std::string preset;
  std::string model;
  std::string k_assignment;
  std::string output = "-";
};

void run_inharm(const InharmArgs& args) {
  ModelPtr model = load_model_arg(args.preset, args.model);
  // the deviation table is defined over ascending frequencies
  check(daublet_model_canonicalize(model.get()), "inharm");
  std::vector<int> assignment;
  const int* assignment_ptr = nullptr;
  if (!args.k_assignment.empty()) {
    for (double v : parse_number_list(args.k_assignment, "--k-assignment")) {
      if (v != std::floor(v) || v < 1)
        usage_error("--k-assignment expects positive integers");
      assignment.push_back(static_cast<int>(v));
    }
    if (assignment.size() != daublet_model_terms(model.get()))
      usage_error("--k-assignment length must match the model's term count");
    assignment_ptr = assignment.data();
  }
  check(daublet_inharmonic_write_csv(model.get(), assignment_ptr,
                                     args.output.c_str()),
        "inharm --output");
}

struct CwtArgs {
  std::string signal_file;
  std::string two_tone;
  std::string preset;
  std::string kernel_file;
  std::string scales = "auto";
  double fc = 0.0;  // 0: dominant-term estimate
  std::size_t tones = 0;
  std::string tone_report;
  std::string output = "-";
};

void run_cwt(const CwtArgs& args) {
  if (args.signal_file.empty() == args.two_tone.empty())
    usage_error("exactly one of --signal or --two-tone is required");

  WaveformPtr signal;
  if (!args.signal_file.empty()) {
    daublet_waveform* w = nullptr;
    check(daublet_waveform_read_csv(args.signal_file.c_str(), &w),
          "--signal " + args.signal_file);
    signal.reset(w);
  } else {
    const std::vector<double> spec =
        parse_number_list(args.two_tone, "--two-tone");
    if (spec.size() != 4)
      usage_error("--two-tone expects f1,f2,duration,dt");
    daublet_waveform* w = nullptr;
    check(daublet_two_tone(spec[0], spec[1], spec[2], spec[3], &w),
          "--two-tone");
    signal.reset(w);
  }

  const ModelPtr kernel = load_model_arg(args.preset, args.kernel_file);

  double fc = args.fc;
  if (fc <= 0.0)
    check(daublet_center_frequency(kernel.get(), DAUBLET_FC_DOMINANT_TERM, &fc),
          "cwt Fc");

  std::vector<double> scales;
  if (args.scales == "auto") {
    scales.resize(64);
    check(daublet_default_scales(signal.get(), scales.size(), fc,
                                 scales.data()),
          "cwt --scales auto");
  } else if (args.scales.find(':') != std::string::npos) {
    const std::vector<double> spec = [&] {
      std::string colons = args.scales;
      for (char& ch : colons)
        if (ch == ':') ch = ',';
      return parse_number_list(colons, "--scales");
    }();
    if (spec.size() != 3 || !(spec[0] > 0.0) || !(spec[1] > spec[0]) ||
        spec[2] < 2 || spec[2] != std::floor(spec[2]))
      usage_error("--scales expects min:max:count with 0 < min < max");
    const std::size_t count = static_cast<std::size_t>(spec[2]);
    scales.resize(count);
    const double step = (std::log(spec[1]) - std::log(spec[0])) /
                        static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i)
      scales[i] = std::exp(std::log(spec[0]) + static_cast<double>(i) * step);
  } else {
    scales = parse_number_list(args.scales, "--scales");
  }

  daublet_scalogram* gram = nullptr;
  check(daublet_cwt(signal.get(), scales.data(), scales.size(),
                    daublet_waveform_dt(signal.get()), kernel.get(), &gram),
        "cwt");
  ScalogramPtr gram_guard(gram);
  check(daublet_scalogram_write_csv(gram, args.output.c_str()),
        "cwt --output");

  // zero-extension note: columns past these indices lean on padding
  const std::size_t n_scales = daublet_scalogram_scales(gram);
  std::size_t clipped = 0;
  for (std::size_t i = 0; i < n_scales; ++i) {
    std::size_t col = 0;
    check(daublet_scalogram_interior_end(gram, i, &col), "cwt");
    if (col < daublet_scalogram_times(gram)) ++clipped;
  }
  std::fprintf(stderr,
               "cwt: %zu scales x %zu times; %zu scale rows have edge "
               "columns (zero-extended past the signal)\n",
               n_scales, daublet_scalogram_times(gram), clipped);

  if (args.tones > 0) {
    std::vector<double> freqs(args.tones), energies(args.tones);
    std::size_t found = 0;
    int complete = 0;
    check(daublet_detect_tones(gram, fc, args.tones, freqs.data(),
                               energies.data(), &found, &complete),
          "cwt --tones");
    if (!complete)
      std::fprintf(stderr, "cwt: only %zu of %zu requested tones found\n",
                   found, args.tones);
    const std::string path =
        args.tone_report.empty() ? std::string("-") : args.tone_report;
    check(daublet_tone_report_write_json(fc, freqs.data(), energies.data(),
                                         found, path.c_str()),
          "cwt --tone-report");
  }
}

struct TablesArgs {
  std::string family;
  std::string kind;
  std::string format = "csv";
  std::string output = "-";
};

void run_tables(const TablesArgs& args) {
  if (args.format == "json") {
    if (args.family.empty() || args.kind.empty())
      usage_error("tables --format json needs --family and --kind");
    daublet_model* model = nullptr;
    check(daublet_model_preset(args.family.c_str(), args.kind.c_str(), &model),
          "tables --family/--kind");
    ModelPtr guard(model);
    check(daublet_model_save_json(model, args.output.c_str()),
          "tables --output");
    return;
  }
  check(daublet_tables_write_csv(args.family.empty() ? nullptr
                                                     : args.family.c_str(),
                                 args.kind.empty() ? nullptr
                                                   : args.kind.c_str(),
                                 args.output.c_str()),
        "tables --output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"daublet: closed-form Daubechies waveforms, sum-of-sines "
               "refitting, analytic spectra and CWT scalograms"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  GenArgs gen;
  CLI::App* gen_cmd =
      app.add_subcommand("gen", "Cascade reference waveform as CSV");
  gen_cmd->add_option("--family", gen.family, "Family db1..db10")->required();
  gen_cmd->add_option("--kind", gen.kind, "wavelet or scaling")
      ->check(CLI::IsMember({"wavelet", "scaling"}))
      ->capture_default_str();
  gen_cmd->add_option("--levels", gen.levels, "Cascade levels J (1..14)")
      ->capture_default_str();
  gen_cmd->add_option("--output", gen.output, "Output path, - for stdout")
      ->capture_default_str();

  FitArgs fit;
  CLI::App* fit_cmd = app.add_subcommand(
      "fit", "Fit a sum of sines to a cascade waveform (model JSON out, "
             "report on stdout)");
  fit_cmd->add_option("--family", fit.family, "Family db1..db10")->required();
  fit_cmd->add_option("--kind", fit.kind, "wavelet or scaling")
      ->check(CLI::IsMember({"wavelet", "scaling"}))
      ->capture_default_str();
  fit_cmd->add_option("--levels", fit.levels, "Cascade levels J for the target")
      ->capture_default_str();
  fit_cmd->add_option("--terms", fit.terms,
                      "Sine terms K (default: 8 wavelet, 10 scaling)");
  fit_cmd->add_option("--init", fit.init,
                      "auto (spectral initializer) or a model JSON file")
      ->capture_default_str();
  fit_cmd->add_option("--output", fit.output, "Model JSON path, - for stdout")
      ->capture_default_str();

  EvalArgs eval;
  CLI::App* eval_cmd =
      app.add_subcommand("eval", "Sample a model's gated waveform as CSV");
  eval_cmd->add_option("--preset", eval.preset,
                       "Preset <family>-<kind>, e.g. db6-wavelet");
  eval_cmd->add_option("--model", eval.model, "Model JSON file");
  eval_cmd->add_option("--dt", eval.dt, "Grid step (default support/1024)");
  eval_cmd->add_option("--output", eval.output, "Output path, - for stdout")
      ->capture_default_str();

  SpectrumArgs spectrum;
  CLI::App* spectrum_cmd =
      app.add_subcommand("spectrum", "Model spectrum as CSV");
  spectrum_cmd->add_option("--preset", spectrum.preset,
                           "Preset <family>-<kind>");
  spectrum_cmd->add_option("--model", spectrum.model, "Model JSON file");
  spectrum_cmd
      ->add_option("--method", spectrum.method,
                   "exact (convolution theorem), eq16 (sinc sum, prints "
                   "rel-L2 distance to exact), dft (numeric oracle)")
      ->check(CLI::IsMember({"exact", "eq16", "dft"}))
      ->capture_default_str();
  spectrum_cmd->add_option("--omega-min", spectrum.omega_min, "Grid start")
      ->capture_default_str();
  spectrum_cmd->add_option("--omega-max", spectrum.omega_max,
                           "Grid end (default 3*max|b_k|)");
  spectrum_cmd->add_option("--points", spectrum.points, "Grid points")
      ->capture_default_str();
  spectrum_cmd
      ->add_option("--output", spectrum.output, "Output path, - for stdout")
      ->capture_default_str();

  InharmArgs inharm;
  CLI::App* inharm_cmd = app.add_subcommand(
      "inharm", "Harmonic-deviation table (k,b,k_omega0,deviation) as CSV");
  inharm_cmd->add_option("--preset", inharm.preset, "Preset <family>-<kind>");
  inharm_cmd->add_option("--model", inharm.model, "Model JSON file");
  inharm_cmd->add_option("--k-assignment", inharm.k_assignment,
                         "Comma-separated strictly increasing harmonic "
                         "indices (default: nearest integer to b/omega0)");
  inharm_cmd->add_option("--output", inharm.output, "Output path, - for stdout")
      ->capture_default_str();

  CwtArgs cwt;
  CLI::App* cwt_cmd = app.add_subcommand(
      "cwt", "Scalogram of a signal against a closed-form kernel");
  cwt_cmd->add_option("--signal", cwt.signal_file, "Signal CSV (t,value)");
  cwt_cmd->add_option("--two-tone", cwt.two_tone,
                      "f1,f2,duration,dt two-tone test signal");
  cwt_cmd->add_option("--preset", cwt.preset, "Kernel preset <family>-<kind>");
  cwt_cmd->add_option("--kernel", cwt.kernel_file, "Kernel model JSON file");
  cwt_cmd->add_option(
             "--scales", cwt.scales,
             "auto (64 log-spaced covering pseudo-frequencies "
             "[2/duration, 0.5/dt]), min:max:count, or a comma list")
      ->capture_default_str();
  cwt_cmd->add_option("--fc", cwt.fc,
                      "Center frequency in cycles/time (default: dominant "
                      "kernel term)");
  cwt_cmd->add_option("--tones", cwt.tones,
                      "Detect this many tones from the scalogram");
  cwt_cmd->add_option("--tone-report", cwt.tone_report,
                      "Tone report JSON path (default stdout)");
  cwt_cmd->add_option("--output", cwt.output, "Scalogram CSV path")
      ->capture_default_str();

  TablesArgs tables;
  CLI::App* tables_cmd = app.add_subcommand(
      "tables", "Emit the bundled coefficient tables with a checksum");
  tables_cmd->add_option("--family", tables.family, "db4, db6 or db8");
  tables_cmd->add_option("--kind", tables.kind, "wavelet or scaling");
  tables_cmd
      ->add_option("--format", tables.format,
                   "csv (verbatim rows + checksum) or json (model format, "
                   "needs --family and --kind)")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  tables_cmd->add_option("--output", tables.output,
                         "Output path, - for stdout")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) run_gen(gen);
    if (fit_cmd->parsed()) run_fit(fit);
    if (eval_cmd->parsed()) run_eval(eval);
    if (spectrum_cmd->parsed()) run_spectrum(spectrum);
    if (inharm_cmd->parsed()) run_inharm(inharm);
    if (cwt_cmd->parsed()) run_cwt(cwt);
    if (tables_cmd->parsed()) run_tables(tables);
  } catch (const CliFailure& failure) {
    std::fprintf(stderr, "error: %s\n", failure.message.c_str());
    return failure.exit_code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumeric;
  }
  return 0;
}
