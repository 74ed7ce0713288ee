#pragma once

// Compressed beamforming: per-element kernels whose projections reproduce the
// Fourier coefficients of the dynamically focused line, their Fourier-series
// spectra, truncation windows, per-element index sets and the linear operators
// that map low-rate element coefficients to beamformed coefficients.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cbf/geometry.hpp"
#include "cbf/pulse.hpp"

namespace cbf {

using cdouble = std::complex<double>;

// K distinct sorted Fourier indices of the beamformed line.
struct FourierIndexSet {
  std::vector<std::int64_t> indices;

  std::size_t size() const noexcept { return indices.size(); }

  // K consecutive integers centered on round(f_c T).
  static FourierIndexSet centered(double center_frequency, double duration, std::size_t count);

  // Throws ArgumentError for unsorted/duplicate indices or K < 2L, and
  // BandViolation when |H(2 pi k / T)| < h_min for some k.
  void validate(std::size_t sparsity, const PulseSpec& pulse, double duration, double h_min) const;
};

// Everything a kernel for element m on beam theta depends on.
struct KernelContext {
  double gamma = 0.0;  // gamma_m, seconds
  BeamDirection beam;
  double duration = 0.0;  // T

  double support_begin() const;  // |gamma_m|
  double support_end() const;    // T_m(theta)
};

// Channel time u -> (beamformed time t, Jacobian dt/du). Valid for u >= |gamma|.
struct WarpPoint {
  double beamformed_time;
  double jacobian;
};
WarpPoint inverse_warp(const KernelContext& ctx, double u);

// q_{k}(u) e^{-i 2 pi k u / T}; zero outside [|gamma|, T_m).
cdouble kernel_time_function(std::int64_t k, const KernelContext& ctx, double u);

// (1/T) integral of g_k(u) phi(u) du over the kernel support. The rectangle
// rule on the sample grid u_n = n / sample_rate covers the support except near
// the pole u = gamma sin(theta), where Gauss panels in beamformed time act on
// the trigonometric interpolant of the samples. One value per index in kappa.
std::vector<cdouble> exact_channel_projection(std::span<const double> waveform, double sample_rate,
                                              std::span<const std::int64_t> kappa,
                                              const KernelContext& ctx);

struct KernelSpectrumParams {
  std::size_t n_max = 256;     // coefficients computed for n in [-n_max, n_max]
  std::size_t oversample = 8;  // dense grid has oversample * 2 n_max points

  void validate() const;
};

// Fourier-series coefficients Q[n] of q_k over [0, T).
struct KernelSpectrum {
  std::int64_t k = 0;
  std::int64_t n_min = 0;
  std::vector<cdouble> coefficients;  // n = n_min + i

  std::int64_t n_max() const noexcept {
    return n_min + static_cast<std::int64_t>(coefficients.size()) - 1;
  }
  cdouble at(std::int64_t n) const;
  std::vector<double> energies() const;
  double total_energy() const;
};

// Spectra for every index in kappa. Uses a dense channel-time grid and an FFT,
// except near the left support edge where the kernel chirps faster than the
// grid can represent; that stretch is integrated in beamformed time instead.
std::vector<KernelSpectrum> kernel_spectra(std::span<const std::int64_t> kappa,
                                           const KernelContext& ctx,
                                           const KernelSpectrumParams& params);

KernelSpectrum kernel_spectrum(std::int64_t k, const KernelContext& ctx,
                               const KernelSpectrumParams& params);

struct TruncationWindow {
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;

  std::int64_t width() const noexcept { return n2 - n1 + 1; }
  bool operator==(const TruncationWindow&) const = default;
};

// Narrowest contiguous [n1, n2] holding at least rho of the energy; among
// equally narrow windows the most energetic, then the most centered, then the
// smallest n1.
TruncationWindow select_truncation_window(std::span<const double> energies, std::int64_t n_min,
                                          double rho);
TruncationWindow select_truncation_window(const KernelSpectrum& spectrum, double rho);

struct ChannelIndexSet {
  std::vector<std::int64_t> indices;  // sorted, distinct

  std::size_t size() const noexcept { return indices.size(); }
};

// Union over j of {k_j - n : n1_j <= n <= n2_j}.
ChannelIndexSet build_channel_index_set(std::span<const std::int64_t> kappa,
                                        std::span<const TruncationWindow> windows);

// K x K_m matrix, row-major. Row j holds Q_j[n] in the column of k_j - n.
struct ApproxOperator {
  std::vector<std::int64_t> kappa;
  ChannelIndexSet channel;
  std::vector<TruncationWindow> windows;
  std::vector<cdouble> matrix;

  std::size_t rows() const noexcept { return kappa.size(); }
  std::size_t cols() const noexcept { return channel.size(); }
  std::span<const cdouble> row(std::size_t j) const {
    return std::span<const cdouble>(matrix).subspan(j * cols(), cols());
  }
};

ApproxOperator build_approx_operator(std::span<const std::int64_t> kappa,
                                     const ChannelIndexSet& channel,
                                     std::span<const KernelSpectrum> spectra,
                                     std::span<const TruncationWindow> windows);

// Spectra, windows, index set and operator for one (element, beam).
ApproxOperator plan_channel(std::span<const std::int64_t> kappa, const KernelContext& ctx,
                            const KernelSpectrumParams& params, double rho);

// c_hat_m = A_m Phi_m, where phi holds the element's Fourier coefficients on
// the operator's channel index set.
std::vector<cdouble> approx_channel_coefficients(const ApproxOperator& op,
                                                 std::span<const cdouble> phi);

// Elementwise mean over elements.
std::vector<cdouble> aggregate_coefficients(std::span<const std::vector<cdouble>> per_channel);

}  // namespace cbf
