#pragma once

// Scatterer phantoms and Nyquist-rate multi-element channel data synthesis.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "cbf/geometry.hpp"
#include "cbf/pulse.hpp"

namespace cbf {

struct Scatterer {
  double range = 0.0;         // meters from the origin
  double angle = 0.0;         // radians, same convention as BeamDirection
  double reflectivity = 0.0;
};

struct Phantom {
  std::vector<Scatterer> scatterers;
  double speckle_density = 0.0;          // scatterers per cm^2 of sector area
  double speckle_amplitude_sigma = 0.0;  // std of Gaussian speckle reflectivities
  double noise_sigma = 0.0;              // additive white Gaussian noise, per sample

  // Ranges in (0, cT/2] and angles within [sector_min, sector_max].
  void validate(double max_range, double sector_min, double sector_max) const;
};

struct SimulationOptions {
  double profile_sigma = 0.0;        // lateral beam-profile std, radians
  bool spherical_spreading = false;  // scale amplitudes by (1 cm) / r
  std::size_t threads = 0;
};

struct RngSeed {
  std::uint64_t seed = 0;
};

enum class RngPurpose : std::uint64_t { speckle = 1, noise = 2 };

// Independent stream seed for (purpose, beam); beam is ignored for
// phantom-wide streams.
std::uint64_t derive_stream(RngSeed seed, RngPurpose purpose, std::uint64_t beam = 0);

// Per-element echo from one scatterer on one beam; elements whose arrival falls
// at or beyond T get no arrival.
std::vector<FRIChannelParams> scatterer_arrivals(const Scatterer& scatterer, BeamDirection beam,
                                                 const ScanGeometry& geom, double profile_sigma,
                                                 double duration, bool spherical_spreading = false);

// Raw element data at f_s, stored as 32-bit floats in (beam, element, sample)
// order.
struct RawChannelData {
  std::size_t beam_count = 0;
  std::size_t element_count = 0;
  std::size_t sample_count = 0;
  AcquisitionWindow window;
  double sound_speed = 1540.0;
  std::uint32_t geometry_hash = 0;
  std::vector<float> samples;

  std::span<const float> channel(std::size_t beam, std::size_t element) const;
  bool operator==(const RawChannelData&) const = default;
};

// Noise-free echoes of every scatterer (fixed plus the supplied speckle) for one
// beam, as M x S doubles in element-major order.
std::vector<double> synthesize_beam(std::span<const Scatterer> scatterers, const ScanGeometry& geom,
                                    BeamDirection beam, const AcquisitionWindow& window,
                                    const PulseSpec& pulse, const SimulationOptions& options);

// Speckle realization: Poisson count over the sector area, uniform positions,
// zero-mean Gaussian reflectivities.
std::vector<Scatterer> draw_speckle(const Phantom& phantom, double max_range, double sector_min,
                                    double sector_max, RngSeed seed);

RawChannelData generate_raw_data(const Phantom& phantom, const ScanGeometry& geom,
                                 std::span<const BeamDirection> beams,
                                 const AcquisitionWindow& window, const PulseSpec& pulse,
                                 RngSeed seed, const SimulationOptions& options);

// Binary container "SNBF0001"; see README for the layout.
void save_raw(const RawChannelData& data, const std::filesystem::path& path);
RawChannelData load_raw(const std::filesystem::path& path);

}  // namespace cbf
