#ifndef DAUBLET_CLOSED_FORM_HPP
#define DAUBLET_CLOSED_FORM_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "daublet/types.hpp"

namespace daublet {

enum class Family { db4, db6, db8 };
enum class Kind { wavelet, scaling };

struct PresetKey {
  Family family = Family::db4;
  Kind kind = Kind::wavelet;
};

std::string_view family_name(Family family);
std::string_view kind_name(Kind kind);

// Parse "db4" / "db6" / "db8" and "wavelet" / "scaling"; anything else
// raises NoSuchPreset.
Family parse_family(std::string_view name);
Kind parse_kind(std::string_view name);

// The bundled sum-of-sines coefficient sets, exactly as published, with
// support 2N-1 (7, 11, 15). Values are parsed from the verbatim decimal
// strings that preset_rows() exposes.
SumOfSines preset(const PresetKey& key);

// One coefficient row kept as the exact decimal strings of the source
// table, for byte-stable re-emission.
struct PresetRow {
  std::string_view a;
  std::string_view b;
  std::string_view c;
};

const std::vector<PresetRow>& preset_rows(const PresetKey& key);

// All six (family, kind) combinations in table order.
std::array<PresetKey, 6> preset_keys();

// Gate-confined evaluation: model value for t in [0, T), 0 outside.
double eval_gated(const SumOfSines& model, double t);

// Uniform sampling of eval_gated over [0, T). dt must divide the support
// at least 16 times over, else GridTooCoarse.
SampledWaveform sample_gated(const SumOfSines& model, double dt);

}  // namespace daublet

#endif  // DAUBLET_CLOSED_FORM_HPP
