#ifndef DAUBLET_FFT_HPP
#define DAUBLET_FFT_HPP

#include <complex>
#include <vector>

namespace daublet {

// Forward DFT X[k] = sum_n x[n] exp(-2*pi*i*n*k/M) of exactly M points
// (input zero-padded or truncated to M). Radix-2 when M is a power of
// two, Bluestein otherwise.
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& x,
                                      std::size_t size);
std::vector<std::complex<double>> dft_real(const std::vector<double>& x,
                                           std::size_t size);

}  // namespace daublet

#endif  // DAUBLET_FFT_HPP
