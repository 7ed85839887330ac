#ifndef DAUBLET_IO_HPP
#define DAUBLET_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "daublet/closed_form.hpp"
#include "daublet/inharmonic.hpp"
#include "daublet/scalogram.hpp"
#include "daublet/spectrum.hpp"
#include "daublet/types.hpp"

namespace daublet {

// Shortest-correct is not the goal here: every computed number is printed
// with 17 significant digits so files diff cleanly and parse back exactly.
std::string format_double(double value);

std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

// Model metadata carried by the JSON format.
struct ModelInfo {
  SumOfSines model;
  std::string family;  // "db4", "custom", ...
  std::string kind;    // "wavelet" | "scaling"
};

std::string model_to_json(const ModelInfo& info);
ModelInfo model_from_json(const std::string& text);

// CSV bodies. Headers are part of the format:
//   waveform:   t,value
//   inharmonic: k,b,k_omega0,deviation
//   spectrum:   omega,real,imag,magnitude (empty real/imag when
//               magnitude-only)
//   scalogram:  scale,time,coefficient,energy
std::string waveform_to_csv(const SampledWaveform& wave);
SampledWaveform waveform_from_csv(const std::string& text);

std::string inharmonic_to_csv(const std::vector<InharmonicRow>& rows);
std::string spectrum_to_csv(const SpectrumGrid& grid);
std::string scalogram_to_csv(const ScalogramGrid& gram);
ScalogramGrid scalogram_from_csv(const std::string& text);

std::string tone_report_to_json(double center_freq,
                                const std::vector<Tone>& tones);

// Shipped coefficient tables re-emitted verbatim
// (family,kind,k,a,b,c rows) with a trailing "# fnv1a64 <hex>" line over
// the preceding bytes. Optional filters narrow to one family and/or kind.
std::string tables_to_csv(const std::optional<Family>& family = std::nullopt,
                          const std::optional<Kind>& kind = std::nullopt);

// path "-" means stdout.
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace daublet

#endif  // DAUBLET_IO_HPP
