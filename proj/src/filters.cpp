#include "daublet/filters.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace daublet {
namespace {

using cplx = std::complex<double>;

// Evaluates a monic-stored polynomial sum coeff[i]*z^i (coeff.back() != 0).
cplx poly_eval(const std::vector<double>& coeff, cplx z) {
  cplx acc(0.0, 0.0);
  for (std::size_t i = coeff.size(); i-- > 0;) acc = acc * z + coeff[i];
  return acc;
}

cplx poly_eval_deriv(const std::vector<double>& coeff, cplx z) {
  cplx acc(0.0, 0.0);
  for (std::size_t i = coeff.size(); i-- > 1;)
    acc = acc * z + static_cast<double>(i) * coeff[i];
  return acc;
}

// Durand-Kerner iteration. Degree here never exceeds 9 (order 10), where
// the roots of the Daubechies polynomial are well separated.
std::vector<cplx> find_roots(const std::vector<double>& coeff) {
  const std::size_t degree = coeff.size() - 1;
  std::vector<cplx> roots(degree);
  if (degree == 0) return roots;

  double radius = 0.0;
  for (std::size_t i = 0; i < degree; ++i)
    radius = std::max(radius, std::abs(coeff[i] / coeff[degree]));
  radius = 1.0 + radius;

  const cplx seed(0.4, 0.9);  // not a root of unity
  cplx power(1.0, 0.0);
  for (std::size_t i = 0; i < degree; ++i) {
    power *= seed;
    roots[i] = radius * power;
  }

  const double lead = coeff[degree];
  for (int iter = 0; iter < 200; ++iter) {
    double shift = 0.0;
    for (std::size_t i = 0; i < degree; ++i) {
      cplx denom(lead, 0.0);
      for (std::size_t j = 0; j < degree; ++j)
        if (j != i) denom *= roots[i] - roots[j];
      const cplx delta = poly_eval(coeff, roots[i]) / denom;
      roots[i] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-14 * radius) break;
  }

  // Newton polish sharpens each root independently.
  for (auto& r : roots) {
    for (int k = 0; k < 3; ++k) {
      const cplx d = poly_eval_deriv(coeff, r);
      if (std::abs(d) == 0.0) break;
      r -= poly_eval(coeff, r) / d;
    }
  }
  return roots;
}

std::vector<double> binomial_row(int n) {
  std::vector<double> row(static_cast<std::size_t>(n) + 1, 0.0);
  row[0] = 1.0;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j > 0; --j) row[j] += row[j - 1];
  return row;
}

}  // namespace

DaubechiesSpec daubechies_filter(int order) {
  if (order < kMinDaubechiesOrder || order > kMaxDaubechiesOrder)
    fail(errc::order_unsupported,
         "daubechies order must be in 1..10, got " + std::to_string(order));

  DaubechiesSpec spec;
  spec.order = order;

  if (order == 1) {
    const double c = 1.0 / std::sqrt(2.0);
    spec.lowpass = {c, c};
    return spec;
  }

  // Half-band remainder P(y) = sum_{k=0}^{N-1} C(N-1+k, k) y^k.
  std::vector<double> half_band(static_cast<std::size_t>(order), 0.0);
  half_band[0] = 1.0;
  for (int k = 1; k < order; ++k)
    half_band[k] = half_band[k - 1] * static_cast<double>(order - 1 + k) /
                   static_cast<double>(k);

  const std::vector<cplx> y_roots = find_roots(half_band);

  // Each y root gives a z-plane pair (z, 1/z) via y = -(z-1)^2/(4z).
  // Keeping one member per pair selects the extremal-phase spectral factor;
  // the conventional dbN taps come from the |z| > 1 member with coefficients
  // read in ascending powers.
  std::vector<cplx> factor(static_cast<std::size_t>(2 * order), cplx(0.0, 0.0));
  const std::vector<double> binom = binomial_row(order);
  for (int i = 0; i <= order; ++i) factor[i] = cplx(binom[i], 0.0);

  std::size_t factor_len = static_cast<std::size_t>(order) + 1;
  for (const cplx& y : y_roots) {
    const cplx u = 1.0 - 2.0 * y;
    const cplx part = std::sqrt(u * u - 1.0);
    cplx z = u + part;
    if (std::abs(z) < 1.0) z = u - part;
    // multiply by (x - z) in place
    for (std::size_t i = factor_len; i-- > 0;) {
      const cplx v = factor[i];
      factor[i + 1] += v;
      factor[i] = -z * v;
    }
    ++factor_len;
  }

  std::vector<double> taps(static_cast<std::size_t>(2 * order));
  double sum = 0.0;
  for (int n = 0; n < 2 * order; ++n) {
    taps[n] = factor[n].real();  // imaginary residue is conjugate-pair noise
    sum += taps[n];
  }
  const double scale = std::sqrt(2.0) / sum;
  for (double& t : taps) t *= scale;

  spec.lowpass = std::move(taps);
  return spec;
}

std::vector<double> highpass_from_lowpass(const DaubechiesSpec& spec) {
  const std::size_t len = spec.lowpass.size();
  if (len == 0 || len != static_cast<std::size_t>(2 * spec.order))
    fail(errc::bad_input, "filter spec has no taps");
  std::vector<double> g(len);
  for (std::size_t n = 0; n < len; ++n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    g[n] = sign * spec.lowpass[len - 1 - n];
  }
  return g;
}

}  // namespace daublet
