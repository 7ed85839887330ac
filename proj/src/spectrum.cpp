#include "daublet/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "daublet/fft.hpp"

namespace daublet {
namespace {

using cplx = std::complex<double>;

// Gate transform G(w) = T sinc(wT/2pi) e^{-jwT/2}.
cplx gate_transform(double omega, double support) {
  const double x = omega * support / (2.0 * std::numbers::pi);
  const cplx phase = std::polar(1.0, -omega * support / 2.0);
  return support * sinc(x) * phase;
}

}  // namespace

double sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

std::vector<SpectralLine> line_spectrum(const SumOfSines& model) {
  validate(model);
  std::vector<SpectralLine> lines;
  lines.reserve(2 * model.terms.size());
  const cplx j(0.0, 1.0);
  for (const SineTerm& term : model.terms) {
    const double pia = std::numbers::pi * term.amplitude;
    lines.push_back(
        {term.frequency, -j * pia * std::polar(1.0, term.phase)});
    lines.push_back(
        {-term.frequency, j * pia * std::polar(1.0, -term.phase)});
  }
  return lines;
}

cplx truncated_spectrum(const SumOfSines& model, double omega) {
  validate(model);
  const cplx half_over_j(0.0, -0.5);  // 1/(2j)
  cplx acc(0.0, 0.0);
  for (const SineTerm& term : model.terms) {
    const cplx plus = std::polar(1.0, term.phase) *
                      gate_transform(omega - term.frequency, model.support);
    const cplx minus = std::polar(1.0, -term.phase) *
                       gate_transform(omega + term.frequency, model.support);
    acc += term.amplitude * half_over_j * (plus - minus);
  }
  return acc;
}

double magnitude_eq16(const SumOfSines& model, double omega) {
  validate(model);
  double acc = 0.0;
  for (const SineTerm& term : model.terms)
    acc += term.amplitude *
           sinc((omega - term.frequency) * model.support /
                (2.0 * std::numbers::pi));
  return 0.5 * model.support * acc;
}

SpectrumGrid dft_oracle(const SampledWaveform& wave, std::size_t zero_pad_to) {
  if (wave.values.empty()) fail(errc::bad_input, "waveform is empty");
  if (!(wave.dt > 0.0)) fail(errc::bad_input, "waveform dt must be positive");
  if (zero_pad_to < wave.size())
    fail(errc::bad_input, "zero_pad_to " + std::to_string(zero_pad_to) +
                              " is smaller than the waveform (" +
                              std::to_string(wave.size()) + ")");

  const std::size_t m = zero_pad_to;
  const std::vector<cplx> bins = dft_real(wave.values, m);

  // fftshift so omegas ascend; scale by dt and restore the t0 phase so the
  // grid approximates integral x(t) e^{-jwt} dt.
  SpectrumGrid grid;
  grid.omegas.resize(m);
  grid.values.resize(m);
  const double domega =
      2.0 * std::numbers::pi / (static_cast<double>(m) * wave.dt);
  const long long half = static_cast<long long>(m) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    const long long signed_idx = static_cast<long long>(i) - half;
    const double omega = static_cast<double>(signed_idx) * domega;
    const std::size_t src =
        static_cast<std::size_t>((signed_idx + static_cast<long long>(m)) %
                                 static_cast<long long>(m));
    grid.omegas[i] = omega;
    grid.values[i] = bins[src] * wave.dt * std::polar(1.0, -omega * wave.t0);
  }
  return grid;
}

}  // namespace daublet
