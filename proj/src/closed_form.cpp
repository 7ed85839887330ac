#include "daublet/closed_form.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "daublet/sine_fit.hpp"

namespace daublet {
namespace {

// Published coefficient tables, kept as the exact printed decimals
// (including the odd trailing digit counts and shared phases). Parsing
// happens once at load; the strings themselves back the `tables` export.
const std::vector<PresetRow> kDb4Wavelet = {
    {"0.3452", "4.586", "-2.316"},
    {"0.2783", "3.460", "1.413"},
    {"0.3015", "5.770", "-0.373"},
    {"0.2129", "6.960", "-4.943"},
    {"0.1293", "2.414", "-1.794"},
    {"0.1120", "8.161", "-3.225"},
    {"0.0295", "9.366", "-7.567"},
    {"0.0223", "1.372", "1.102"},
};

const std::vector<PresetRow> kDb6Wavelet = {
    {"0.2623", "4.850", "-1.655"},
    {"0.2520", "3.993", "3.014"},
    {"0.2287", "5.724", "0.649"},
    {"0.1778", "3.197", "0.649"},
    {"0.1729", "6.590", "-5.635"},
    {"0.1098", "7.459", "-4.613"},
    {"0.0820", "2.436", "4.117"},
    {"0.0504", "8.333", "-9.828"},
};

const std::vector<PresetRow> kDb8Wavelet = {
    {"-0.2054", "5.066", "-17.48"},
    {"0.1334", "3.116", "-6.671"},
    {"0.1926", "3.720", "-10.66"},
    {"-0.0622", "2.532", "-12.39"},
    {"0.2145", "4.379", "-15.39"},
    {"0.1768", "5.750", "-26.04"},
    {"0.1360", "6.419", "-25.21"},
    {"-0.0917", "7.081", "-27.53"},
    {"-0.0468", "7.740", "-32.94"},
};

const std::vector<PresetRow> kDb4Scaling = {
    {"0.3762", "0.672", "0.171"},
    {"0.2113", "3.226", "-2.404"},
    {"0.3900", "1.204", "0.939"},
    {"0.0770", "4.193", "2.098"},
    {"0.2661", "2.384", "-1.379"},
    {"0.0081", "5.586", "-1.379"},
    {"0.0226", "8.537", "-1.184"},
    {"0.0205", "9.424", "3.346"},
};

const std::vector<PresetRow> kDb6Scaling = {
    {"0.2247", "0.648", "1.540"},
    {"0.1244", "1.323", "-0.241"},
    {"0.3148", "2.333", "-1.329"},
    {"0.0111", "0.032", "0.8670"},
    {"0.3007", "2.084", "-2.628"},
    {"0.0489", "4.087", "-5.627"},
    {"0.1224", "3.019", "2.881"},
    {"0.0935", "3.728", "0.425"},
    {"0.0296", "0.338", "0.208"},
    {"0.2088", "0.342", "0.735"},
};

const std::vector<PresetRow> kDb8Scaling = {
    {"0.1417", "-0.004", "1.617"},
    {"0.1214", "1.697", "-1.584"},
    {"0.1480", "2.174", "-2.969"},
    {"0.1840", "-0.271", "0.929"},
    {"0.1603", "2.544", "-3.420"},
    {"0.1057", "2.934", "-4.170"},
    {"0.1136", "3.586", "-1.468"},
    {"0.0877", "3.759", "-0.154"},
    {"0.1234", "0.907", "-0.523"},
    {"0.1419", "1.239", "-0.457"},
};

double parse_number(std::string_view text) {
  return std::strtod(std::string(text).c_str(), nullptr);
}

double preset_support(Family family) {
  switch (family) {
    case Family::db4: return 7.0;
    case Family::db6: return 11.0;
    case Family::db8: return 15.0;
  }
  fail(errc::no_such_preset, "unknown family");
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::db4: return "db4";
    case Family::db6: return "db6";
    case Family::db8: return "db8";
  }
  return "?";
}

std::string_view kind_name(Kind kind) {
  return kind == Kind::wavelet ? "wavelet" : "scaling";
}

Family parse_family(std::string_view name) {
  if (name == "db4") return Family::db4;
  if (name == "db6") return Family::db6;
  if (name == "db8") return Family::db8;
  fail(errc::no_such_preset,
       "no preset family '" + std::string(name) + "' (have db4, db6, db8)");
}

Kind parse_kind(std::string_view name) {
  if (name == "wavelet") return Kind::wavelet;
  if (name == "scaling") return Kind::scaling;
  fail(errc::no_such_preset,
       "no preset kind '" + std::string(name) + "' (have wavelet, scaling)");
}

const std::vector<PresetRow>& preset_rows(const PresetKey& key) {
  if (key.kind == Kind::wavelet) {
    switch (key.family) {
      case Family::db4: return kDb4Wavelet;
      case Family::db6: return kDb6Wavelet;
      case Family::db8: return kDb8Wavelet;
    }
  } else {
    switch (key.family) {
      case Family::db4: return kDb4Scaling;
      case Family::db6: return kDb6Scaling;
      case Family::db8: return kDb8Scaling;
    }
  }
  fail(errc::no_such_preset, "unknown preset key");
}

std::array<PresetKey, 6> preset_keys() {
  return {PresetKey{Family::db4, Kind::wavelet},
          PresetKey{Family::db6, Kind::wavelet},
          PresetKey{Family::db8, Kind::wavelet},
          PresetKey{Family::db4, Kind::scaling},
          PresetKey{Family::db6, Kind::scaling},
          PresetKey{Family::db8, Kind::scaling}};
}

SumOfSines preset(const PresetKey& key) {
  const std::vector<PresetRow>& rows = preset_rows(key);
  SumOfSines model;
  model.support = preset_support(key.family);
  model.terms.reserve(rows.size());
  for (const PresetRow& row : rows)
    model.terms.push_back(
        {parse_number(row.a), parse_number(row.b), parse_number(row.c)});
  return model;
}

double eval_gated(const SumOfSines& model, double t) {
  if (t < 0.0 || t >= model.support) return 0.0;
  return model_eval(model, t);
}

SampledWaveform sample_gated(const SumOfSines& model, double dt) {
  validate(model);
  if (!(dt > 0.0)) fail(errc::bad_input, "dt must be positive");
  if (dt > model.support / 16.0)
    fail(errc::grid_too_coarse, "dt = " + std::to_string(dt) +
                                    " too coarse for support " +
                                    std::to_string(model.support));
  const std::size_t count = static_cast<std::size_t>(
      std::ceil(model.support / dt - 1e-9));
  SampledWaveform wave;
  wave.t0 = 0.0;
  wave.dt = dt;
  wave.values.resize(count);
  for (std::size_t i = 0; i < count; ++i)
    wave.values[i] = eval_gated(model, wave.time(i));
  return wave;
}

}  // namespace daublet
