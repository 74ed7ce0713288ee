#pragma once

// Known pulse shape h(t), its continuous-time spectrum, and finite-rate-of-
// innovation parameter sets for single channels and beamformed lines.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cbf/geometry.hpp"

namespace cbf {

// Gaussian-modulated cosine: h(t) = A exp(-t^2 / (2 sigma^2)) cos(2 pi f_c t).
struct PulseSpec {
  double center_frequency = 3.4e6;  // hertz
  double envelope_sigma = 0.0;      // seconds; 0 means "derive from bandwidth"
  double amplitude = 1.0;

  void validate() const;
};

// Envelope sigma whose spectrum falls to half amplitude (-6 dB) at
// +/- bandwidth/2 around the center frequency.
double sigma_for_bandwidth(double two_sided_bandwidth);

// Pulse with f_c = 3.4 MHz and a 2 MHz two-sided -6 dB bandwidth.
PulseSpec default_pulse();

double pulse_value(const PulseSpec& pulse, double t);

// H(omega) = integral h(t) exp(-i omega t) dt. Real because h is even.
std::complex<double> pulse_ctft(const PulseSpec& pulse, double omega);

// Peak of |H| (attained at +/- omega_c up to the negligible mirror term).
double pulse_peak_spectrum(const PulseSpec& pulse);

// Integral of h^2 over the real line.
double pulse_energy(const PulseSpec& pulse);

struct Arrival {
  double time = 0.0;       // t_{l,m}, seconds
  double amplitude = 0.0;  // a_{l,m}
};

// Echoes seen by one element: sorted, distinct arrival times in [0, T).
struct FRIChannelParams {
  std::vector<Arrival> arrivals;

  void validate(double duration) const;
};

struct GridEcho {
  std::int64_t index = 0;                // q_l
  std::complex<double> amplitude = 0.0;  // b_l
};

// Delay grid of N cells of width T / N over the acquisition window.
struct DelayGrid {
  double duration = 207e-6;  // T
  std::size_t size = 1662;   // N

  double step() const { return duration / static_cast<double>(size); }
};

// Beamformed line as L echoes on the delay grid.
struct BeamformedFRIParams {
  std::vector<GridEcho> echoes;
  DelayGrid grid;

  void validate() const;
};

// exp(-2 pi i k q / N) with the argument reduced exactly in integers.
std::complex<double> grid_phase(std::int64_t k, std::int64_t q, std::size_t n);

// Adds a * h(t - t0) at t = n / f_s into `out`, touching only samples where the
// envelope is non-negligible.
void add_pulse(std::span<double> out, const PulseSpec& pulse, double sample_rate, double t0,
               double amplitude);

// floor(T f_s) samples of sum_l a_l h(t - t_l).
std::vector<double> synthesize_channel(const FRIChannelParams& params, const PulseSpec& pulse,
                                       const AcquisitionWindow& window);

// Rectangle-rule Fourier-series coefficients (1/S) sum_n x[n] exp(-2 pi i k n / S)
// over the stored samples, for each requested k with |k| <= floor(S / 2).
std::vector<std::complex<double>> channel_fourier_coefficients(std::span<const double> waveform,
                                                               std::span<const std::int64_t> indices);

// c_j = (1/T) H(2 pi k_j / T) sum_l b_l exp(-2 pi i k_j q_l / N).
std::vector<std::complex<double>> beamformed_coefficient_model(
    const BeamformedFRIParams& params, const PulseSpec& pulse,
    std::span<const std::int64_t> kappa);

}  // namespace cbf
