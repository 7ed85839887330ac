#include "daublet/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace daublet {
namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

double parse_field(const std::string& field, const char* what) {
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (end == field.c_str() || (end && *end != '\0' && *end != '\r'))
    fail(errc::parse_failure,
         std::string("bad ") + what + " field '" + field + "'");
  return v;
}

std::vector<std::string> data_lines(const std::string& text,
                                    const std::string& header,
                                    const char* what) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line))
    fail(errc::parse_failure, std::string(what) + ": empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header)
    fail(errc::parse_failure, std::string(what) + ": expected header '" +
                                  header + "', got '" + line + "'");
  std::vector<std::string> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    rows.push_back(line);
  }
  return rows;
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string fnv1a64_hex(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

std::string model_to_json(const ModelInfo& info) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"family\": \"" << info.family << "\",\n";
  out << "  \"kind\": \"" << info.kind << "\",\n";
  out << "  \"support\": " << format_double(info.model.support) << ",\n";
  out << "  \"terms\": [\n";
  for (std::size_t i = 0; i < info.model.terms.size(); ++i) {
    const SineTerm& t = info.model.terms[i];
    out << "    {\"a\": " << format_double(t.amplitude)
        << ", \"b\": " << format_double(t.frequency)
        << ", \"c\": " << format_double(t.phase) << "}"
        << (i + 1 < info.model.terms.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

ModelInfo model_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_failure, std::string("model JSON: ") + e.what());
  }
  ModelInfo info;
  try {
    info.family = doc.at("family").get<std::string>();
    info.kind = doc.at("kind").get<std::string>();
    info.model.support = doc.at("support").get<double>();
    for (const auto& term : doc.at("terms")) {
      info.model.terms.push_back({term.at("a").get<double>(),
                                  term.at("b").get<double>(),
                                  term.at("c").get<double>()});
    }
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_failure, std::string("model JSON: ") + e.what());
  }
  if (info.kind != "wavelet" && info.kind != "scaling")
    fail(errc::parse_failure,
         "model JSON: kind must be 'wavelet' or 'scaling', got '" +
             info.kind + "'");
  validate(info.model);
  return info;
}

std::string waveform_to_csv(const SampledWaveform& wave) {
  std::ostringstream out;
  out << "t,value\n";
  for (std::size_t i = 0; i < wave.size(); ++i)
    out << format_double(wave.time(i)) << ',' << format_double(wave.values[i])
        << '\n';
  return out.str();
}

SampledWaveform waveform_from_csv(const std::string& text) {
  const std::vector<std::string> rows = data_lines(text, "t,value", "waveform");
  if (rows.size() < 2)
    fail(errc::parse_failure, "waveform: need at least two samples");
  std::vector<double> ts, vs;
  for (const std::string& row : rows) {
    const std::vector<std::string> fields = split(row, ',');
    if (fields.size() != 2)
      fail(errc::parse_failure, "waveform: expected 2 fields per row");
    ts.push_back(parse_field(fields[0], "time"));
    vs.push_back(parse_field(fields[1], "value"));
  }
  SampledWaveform wave;
  wave.t0 = ts.front();
  wave.dt = (ts.back() - ts.front()) / static_cast<double>(ts.size() - 1);
  if (!(wave.dt > 0.0))
    fail(errc::parse_failure, "waveform: time column must be increasing");
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double expect = wave.t0 + static_cast<double>(i) * wave.dt;
    if (std::abs(ts[i] - expect) > 1e-9 * std::max(1.0, std::abs(expect)))
      fail(errc::parse_failure, "waveform: time grid is not uniform");
  }
  wave.values = std::move(vs);
  return wave;
}

std::string inharmonic_to_csv(const std::vector<InharmonicRow>& rows) {
  std::ostringstream out;
  out << "k,b,k_omega0,deviation\n";
  for (const InharmonicRow& row : rows)
    out << row.index << ',' << format_double(row.fitted) << ','
        << format_double(row.harmonic) << ',' << format_double(row.deviation)
        << '\n';
  return out.str();
}

std::string spectrum_to_csv(const SpectrumGrid& grid) {
  std::ostringstream out;
  out << "omega,real,imag,magnitude\n";
  for (std::size_t i = 0; i < grid.omegas.size(); ++i) {
    out << format_double(grid.omegas[i]) << ',';
    if (grid.magnitude_only)
      out << ",," << format_double(std::abs(grid.values[i].real()));
    else
      out << format_double(grid.values[i].real()) << ','
          << format_double(grid.values[i].imag()) << ','
          << format_double(std::abs(grid.values[i]));
    out << '\n';
  }
  return out.str();
}

std::string scalogram_to_csv(const ScalogramGrid& gram) {
  std::ostringstream out;
  out << "scale,time,coefficient,energy\n";
  for (std::size_t i = 0; i < gram.scales.size(); ++i)
    for (std::size_t j = 0; j < gram.times(); ++j)
      out << format_double(gram.scales[i]) << ',' << format_double(gram.time(j))
          << ',' << format_double(gram.coefficient(i, j)) << ','
          << format_double(gram.energy_at(i, j)) << '\n';
  return out.str();
}

ScalogramGrid scalogram_from_csv(const std::string& text) {
  const std::vector<std::string> rows =
      data_lines(text, "scale,time,coefficient,energy", "scalogram");
  if (rows.empty()) fail(errc::parse_failure, "scalogram: no rows");

  ScalogramGrid gram;
  std::vector<double> times;
  double current_scale = 0.0;
  bool first_block = true;
  std::size_t column = 0;
  for (const std::string& row : rows) {
    const std::vector<std::string> fields = split(row, ',');
    if (fields.size() != 4)
      fail(errc::parse_failure, "scalogram: expected 4 fields per row");
    const double scale = parse_field(fields[0], "scale");
    const double time = parse_field(fields[1], "time");
    const double coeff = parse_field(fields[2], "coefficient");
    const double energy = parse_field(fields[3], "energy");
    if (gram.scales.empty() || scale != current_scale) {
      if (!gram.scales.empty() && first_block) first_block = false;
      if (!first_block && column != times.size())
        fail(errc::parse_failure, "scalogram: ragged scale blocks");
      gram.scales.push_back(scale);
      current_scale = scale;
      column = 0;
    }
    if (first_block) times.push_back(time);
    gram.coefficients.push_back(coeff);
    gram.energy.push_back(energy);
    ++column;
  }
  if (times.empty()) fail(errc::parse_failure, "scalogram: no time grid");
  gram.dt = times.size() > 1 ? times[1] - times[0] : 1.0;
  gram.time_grid = std::move(times);
  if (gram.coefficients.size() != gram.scales.size() * gram.times())
    fail(errc::parse_failure, "scalogram: ragged scale blocks");
  gram.interior_end.assign(gram.scales.size(), gram.times());
  return gram;
}

std::string tone_report_to_json(double center_freq,
                                const std::vector<Tone>& tones) {
  std::ostringstream out;
  out << "{\n  \"Fc\": " << format_double(center_freq) << ",\n  \"tones\": [";
  for (std::size_t i = 0; i < tones.size(); ++i) {
    out << (i == 0 ? "\n" : ",\n");
    out << "    {\"frequency\": " << format_double(tones[i].frequency)
        << ", \"energy\": " << format_double(tones[i].energy) << "}";
  }
  out << (tones.empty() ? "]" : "\n  ]") << "\n}\n";
  return out.str();
}

std::string tables_to_csv(const std::optional<Family>& family,
                          const std::optional<Kind>& kind) {
  std::ostringstream out;
  out << "family,kind,k,a,b,c\n";
  for (const PresetKey& key : preset_keys()) {
    if (family && key.family != *family) continue;
    if (kind && key.kind != *kind) continue;
    const std::vector<PresetRow>& rows = preset_rows(key);
    for (std::size_t i = 0; i < rows.size(); ++i)
      out << family_name(key.family) << ',' << kind_name(key.kind) << ','
          << i + 1 << ',' << rows[i].a << ',' << rows[i].b << ',' << rows[i].c
          << '\n';
  }
  std::string body = out.str();
  body += "# fnv1a64 " + fnv1a64_hex(body) + "\n";
  return body;
}

void write_text_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::io_failure, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) fail(errc::io_failure, "failed writing '" + path + "'");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_failure, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace daublet
