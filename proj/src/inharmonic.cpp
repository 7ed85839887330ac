#include "daublet/inharmonic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace daublet {

namespace {
constexpr double kHalfAngleGuard = 1e-9;
}

double phase_from_frequency(double omega, double support) {
  if (!(support > 0.0)) fail(errc::bad_input, "support must be positive");
  if (!std::isfinite(omega)) fail(errc::bad_input, "omega must be finite");
  const double arg = omega * support;
  if (arg <= 0.0 || arg >= std::numbers::pi)
    fail(errc::branch_singularity,
         "omega*T = " + std::to_string(arg) +
             " is outside the principal branch (0, pi)");
  const double c = std::cos(arg);
  const double denom_sq = 1.0 - c * c;
  if (denom_sq <= 0.0)
    fail(errc::branch_singularity, "sin(omega*T) vanishes at omega*T = " +
                                       std::to_string(arg));
  const double denom = std::sqrt(denom_sq);
  if (denom < kHalfAngleGuard) return -0.5 * arg;  // half-angle identity
  return -std::atan((1.0 - c) / denom);
}

double frequency_from_phase(double theta, double support) {
  if (!(support > 0.0)) fail(errc::bad_input, "support must be positive");
  if (!std::isfinite(theta)) fail(errc::bad_input, "theta must be finite");
  if (std::abs(theta) >= std::numbers::pi / 2.0)
    fail(errc::tangent_singularity,
         "|theta| >= pi/2, tan(theta) is singular");
  // (1 - tan^2)/(1 + tan^2) == cos(2*theta); the direct form avoids the
  // blow-up of tan near the edges of the interval.
  const double x = std::cos(2.0 * theta);
  return std::acos(std::clamp(x, -1.0, 1.0)) / support;
}

double zero_mean_residual(double a, double b, double c, double support) {
  if (!(support > 0.0)) fail(errc::bad_input, "support must be positive");
  if (b == 0.0) return a * support * std::sin(c);
  return a * (std::cos(c) - std::cos(b * support + c)) / b;
}

std::vector<InharmonicRow> inharmonic_table(
    const SumOfSines& model,
    const std::optional<std::vector<int>>& k_assignment) {
  validate(model);
  const std::size_t count = model.terms.size();
  for (std::size_t i = 1; i < count; ++i)
    if (model.terms[i].frequency < model.terms[i - 1].frequency)
      fail(errc::input_not_sorted,
           "model frequencies must be sorted ascending");

  const double omega0 = 2.0 * std::numbers::pi / model.support;

  std::vector<int> ks;
  if (k_assignment) {
    if (k_assignment->size() != count)
      fail(errc::bad_input, "k assignment length " +
                                std::to_string(k_assignment->size()) +
                                " does not match " + std::to_string(count) +
                                " terms");
    for (std::size_t i = 0; i < k_assignment->size(); ++i) {
      const int k = (*k_assignment)[i];
      if (k < 1) fail(errc::bad_input, "k indices must be positive");
      if (i > 0 && k <= (*k_assignment)[i - 1])
        fail(errc::bad_input, "k indices must be strictly increasing");
    }
    ks = *k_assignment;
  } else {
    ks.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
      int k = static_cast<int>(
          std::lround(model.terms[i].frequency / omega0));
      k = std::max(k, 1);
      if (i > 0 && k <= ks[i - 1]) k = ks[i - 1] + 1;
      ks[i] = k;
    }
  }

  std::vector<InharmonicRow> rows(count);
  for (std::size_t i = 0; i < count; ++i) {
    rows[i].index = ks[i];
    rows[i].fitted = model.terms[i].frequency;
    rows[i].harmonic = ks[i] * omega0;
    rows[i].deviation = rows[i].fitted - rows[i].harmonic;
  }
  return rows;
}

}  // namespace daublet
