#pragma once

// Receive-array geometry, round-trip propagation delays and the dynamic
// focusing time warp.
//
// Angles follow the array convention used throughout the library: a pulse
// launched at t = 0 along direction theta crosses (c t cos(theta), c t sin(theta))
// at time t, broadside is theta = pi/2, and the default scan sector is
// symmetric about broadside. Times are in seconds, distances in meters.

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

namespace cbf {

struct MediumParams {
  double sound_speed = 1540.0;  // m/s
};

struct BeamDirection {
  double theta = std::numbers::pi / 2;  // radians
};

struct AcquisitionWindow {
  double duration = 207e-6;    // T, seconds
  double sample_rate = 50e6;   // f_s, hertz

  // floor(T * f_s), tolerant of the representation error in the product.
  std::size_t sample_count() const;
  void validate() const;
  bool operator==(const AcquisitionWindow&) const = default;
};

// Linear receive array. Offsets are signed distances of each element from the
// origin; the reference element sits exactly at the origin.
class ScanGeometry {
 public:
  ScanGeometry(std::vector<double> element_offsets, std::size_t reference_index,
               MediumParams medium = {});

  // M elements at uniform pitch with element M/2 (0-indexed) at the origin.
  static ScanGeometry uniform_linear(std::size_t elements, double pitch, MediumParams medium = {});

  std::size_t size() const noexcept { return offsets_.size(); }
  std::size_t reference_index() const noexcept { return reference_index_; }
  const MediumParams& medium() const noexcept { return medium_; }
  std::span<const double> offsets() const noexcept { return offsets_; }
  double offset(std::size_t m) const;

 private:
  std::vector<double> offsets_;
  std::size_t reference_index_;
  MediumParams medium_;
};

// gamma_m = delta_m / c.
double gamma(const ScanGeometry& geom, std::size_t m);

// Arrival time at an element with normalized offset gamma_m of the echo from
// the point the pulse crosses at time t.
double round_trip_delay(double t, BeamDirection beam, double gamma_m);

// Inverse focusing map: warp_time(2t) == round_trip_delay(t).
double warp_time(double t, BeamDirection beam, double gamma_m);

// Largest channel time mapped into [0, T) by the warp, clipped to T.
double channel_window_end(BeamDirection beam, double gamma_m, double duration);

// `count` beam centers evenly covering a sector of `sector` radians about
// broadside.
std::vector<BeamDirection> sector_beams(std::size_t count, double sector);

// CRC-32 over the geometry, beam set and acquisition window. Stored in the
// binary containers to detect mismatched inputs.
std::uint32_t geometry_fingerprint(const ScanGeometry& geom, std::span<const BeamDirection> beams,
                                   const AcquisitionWindow& window);

}  // namespace cbf
