#pragma once

// Sector images: polar line stacks, log compression, scan conversion, image
// files and image comparison metrics.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "cbf/geometry.hpp"
#include "cbf/phantom.hpp"

namespace cbf {

// B lines of R nonnegative samples; sample i of every line sits at range
// i * radial_step.
struct PolarImage {
  std::size_t beams = 0;
  std::size_t samples = 0;
  std::vector<double> angles;  // radians, ascending
  double radial_step = 0.0;    // meters per sample
  std::vector<double> values;  // beam-major

  double at(std::size_t beam, std::size_t sample) const { return values[beam * samples + sample]; }
  std::span<const double> line(std::size_t beam) const {
    return std::span<const double>(values).subspan(beam * samples, samples);
  }
  void validate() const;
};

// Stacks equal-length lines into a polar image.
PolarImage assemble_polar(std::span<const std::vector<double>> lines,
                          std::span<const BeamDirection> beams, double radial_step);

struct RenderParams {
  double dynamic_range_db = 40.0;
  std::size_t width = 512;
  std::size_t height = 512;
  double background = 0.0;

  void validate() const;
};

// v -> max(0, 1 + 20 log10(v / v_max) / dr). Throws EmptyImage if v_max == 0.
PolarImage log_compress(const PolarImage& image, double dynamic_range_db);

struct CartesianImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<double> pixels;       // row-major, row 0 at the array
  std::vector<std::uint8_t> mask;   // 1 inside the imaged sector
  double pixel_size = 0.0;          // meters
  double x_origin = 0.0;            // lateral position of column 0's center

  double at(std::size_t row, std::size_t col) const { return pixels[row * width + col]; }
};

// Bilinear resampling onto a width x height grid with isotropic pixels. Depth z
// runs down the rows, lateral x = r sin(theta - pi/2) across the columns.
// The sector spans the beam centers plus half a beam spacing on each side;
// pixels outside it hold the background value.
CartesianImage scan_convert(const PolarImage& image, const RenderParams& params);

enum class ImageFormat { pgm, png };

// 8-bit grayscale, value v stored as round(clamp(v, 0, 1) * 255).
void write_image(const CartesianImage& image, const std::filesystem::path& path,
                 ImageFormat format = ImageFormat::pgm);

// Reads an 8-bit binary PGM back as values in [0, 1] with a full mask.
CartesianImage read_pgm(const std::filesystem::path& path);

struct ImageMetrics {
  double nrmse = 0.0;       // ||a' - b'|| / ||a'|| over the sector, each max-normalized
  double peak_ratio = 0.0;  // max(b) / max(a) over the sector
};

ImageMetrics compare_images(const CartesianImage& a, const CartesianImage& b);

// Relative L2 distance between two polar images after max-normalizing each.
double polar_nrmse(const PolarImage& a, const PolarImage& b);

struct TargetLocation {
  std::int64_t true_sample = 0;
  std::int64_t true_beam = 0;
  std::int64_t found_sample = 0;
  std::int64_t found_beam = 0;
  double peak = 0.0;

  std::int64_t radial_error() const { return found_sample - true_sample; }
  std::int64_t beam_error() const { return found_beam - true_beam; }
};

// For each target, the brightest polar sample within +/- search_samples and
// +/- search_beams of its nominal cell.
std::vector<TargetLocation> localize_targets(const PolarImage& image,
                                             std::span<const Scatterer> targets,
                                             std::size_t search_samples, std::size_t search_beams);

}  // namespace cbf
