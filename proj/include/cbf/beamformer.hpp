#pragma once

// Nyquist-rate dynamic-focusing beamformer: the reference path.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "cbf/geometry.hpp"
#include "cbf/phantom.hpp"
#include "cbf/pulse.hpp"

namespace cbf {

// Output sample n is the input linearly interpolated at warp_time(n / f_s);
// points past the last stored sample read as zero.
std::vector<double> dynamic_focus_channel(std::span<const double> waveform, BeamDirection beam,
                                          double gamma_m, const AcquisitionWindow& window);

// Elementwise mean of M equal-length channels.
std::vector<double> beamform(std::span<const std::vector<double>> channels);

// Magnitude of the analytic signal, keeping spectral content in (0, 2 f_c].
std::vector<double> envelope(std::span<const double> line, const AcquisitionWindow& window,
                             double center_frequency);

struct DownsampleParams {
  std::size_t real_samples = 1662;  // stored as real_samples / 2 complex pairs
  double passband = 4e6;            // two-sided, hertz
  double center_frequency = 3.4e6;
};

// Complex baseband line: mix to DC at f_c, windowed-sinc low-pass to the
// passband, resample to real_samples / 2 points over [0, T). Scaled so the
// magnitude tracks the RF envelope.
std::vector<std::complex<double>> downsample_line(std::span<const double> line,
                                                  const AcquisitionWindow& window,
                                                  const DownsampleParams& params);

// 2 * floor(T * passband): real-valued samples left after basebanding.
std::size_t downsampled_real_count(double duration, double passband);

struct ReferenceLine {
  std::vector<double> line;      // beamformed RF at f_s
  std::vector<double> envelope;  // at f_s
  std::vector<std::complex<double>> downsampled;
  std::vector<double> polar;     // envelope on the delay grid
};

ReferenceLine reference_line(const RawChannelData& raw, std::size_t beam_index,
                             BeamDirection beam, const ScanGeometry& geom,
                             const DownsampleParams& downsample, const DelayGrid& grid);

// Samples a line stored at f_s onto the delay grid by linear interpolation.
std::vector<double> resample_to_grid(std::span<const double> line, double sample_rate,
                                     const DelayGrid& grid);

}  // namespace cbf
