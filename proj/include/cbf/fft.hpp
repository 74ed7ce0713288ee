#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace cbf::fft {

// Thin FFTW wrappers. Plans are created once per size and reused; execution
// is safe from concurrent threads.

// Unnormalized forward transform: out[k] = sum_n in[n] exp(-2 pi i k n / size).
void forward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out);

// Unnormalized inverse transform: out[n] = sum_k in[k] exp(+2 pi i k n / size).
void inverse(std::span<const std::complex<double>> in, std::span<std::complex<double>> out);

// Real-input forward transform; out has size in.size() / 2 + 1.
void forward_real(std::span<const double> in, std::span<std::complex<double>> out);

}  // namespace cbf::fft
