#include "daublet/fft.hpp"

#include <cmath>
#include <numbers>

namespace daublet {
namespace {

using cplx = std::complex<double>;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// In-place iterative radix-2 transform, sign = -1 forward / +1 inverse
// (inverse leaves out the 1/n factor).
void fft_pow2(std::vector<cplx>& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    const cplx wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cplx u = a[i + j];
        const cplx v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

// Chirp angle exp(sign*pi*i*n^2/M) with the quadratic reduced mod 2M to
// keep the trig argument small.
cplx chirp(long long n, long long m, int sign) {
  const long long q = (n % (2 * m)) * (n % (2 * m)) % (2 * m);
  const double ang =
      sign * std::numbers::pi * static_cast<double>(q) / static_cast<double>(m);
  return {std::cos(ang), std::sin(ang)};
}

// Bluestein: arbitrary-size DFT as a circular convolution with a chirp.
std::vector<cplx> dft_bluestein(const std::vector<cplx>& x, std::size_t m) {
  const std::size_t conv = next_pow2(2 * m - 1);
  std::vector<cplx> a(conv, cplx(0.0, 0.0));
  std::vector<cplx> b(conv, cplx(0.0, 0.0));
  const long long mm = static_cast<long long>(m);
  for (std::size_t n = 0; n < m && n < x.size(); ++n)
    a[n] = x[n] * chirp(static_cast<long long>(n), mm, -1);
  for (std::size_t n = 0; n < m; ++n) {
    const cplx c = chirp(static_cast<long long>(n), mm, +1);
    b[n] = c;
    if (n != 0) b[conv - n] = c;
  }
  fft_pow2(a, -1);
  fft_pow2(b, -1);
  for (std::size_t i = 0; i < conv; ++i) a[i] *= b[i];
  fft_pow2(a, +1);
  const double scale = 1.0 / static_cast<double>(conv);
  std::vector<cplx> out(m);
  for (std::size_t k = 0; k < m; ++k)
    out[k] = a[k] * scale * chirp(static_cast<long long>(k), mm, -1);
  return out;
}

}  // namespace

std::vector<cplx> dft(const std::vector<cplx>& x, std::size_t size) {
  if (size == 0) return {};
  if (is_pow2(size)) {
    std::vector<cplx> a(size, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < x.size() && i < size; ++i) a[i] = x[i];
    fft_pow2(a, -1);
    return a;
  }
  return dft_bluestein(x, size);
}

std::vector<cplx> dft_real(const std::vector<double>& x, std::size_t size) {
  std::vector<cplx> tmp(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) tmp[i] = cplx(x[i], 0.0);
  return dft(tmp, size);
}

}  // namespace daublet
