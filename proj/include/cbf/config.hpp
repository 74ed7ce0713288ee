#pragma once

// Pipeline configuration: INI-style text with a few top-level keys and named
// sections. The grammar and every key are documented in README.md.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cbf/beamformer.hpp"
#include "cbf/geometry.hpp"
#include "cbf/imaging.hpp"
#include "cbf/phantom.hpp"
#include "cbf/pulse.hpp"
#include "cbf/xampling.hpp"

namespace cbf {

enum class PipelineMode { reference, exact, approx };

const char* to_string(PipelineMode mode) noexcept;
std::optional<PipelineMode> parse_mode(const std::string& text);

// A scatterer as written in the config: range either in millimeters or as a
// delay-grid cell ("q<cell>"), angle either in degrees from broadside or as a
// beam center ("b<beam>").
struct ScattererSpec {
  double range_mm = 0.0;
  std::optional<std::int64_t> range_cell;
  double angle_deg = 0.0;
  std::optional<std::int64_t> beam;
  double reflectivity = 1.0;
};

// Parses "r:angle:reflectivity" items separated by ';'. Throws ArgumentError.
std::vector<ScattererSpec> parse_scatterers(const std::string& text);

struct PipelineConfig {
  std::uint64_t seed = 1;
  PipelineMode mode = PipelineMode::approx;
  std::filesystem::path out = "out";
  std::size_t threads = 0;
  std::filesystem::path cache;  // empty: operators are built per run and not stored

  struct {
    std::size_t elements = 64;
    double pitch_mm = 0.308;
    double sound_speed = 1540.0;
  } geometry;

  struct {
    std::size_t beams = 120;
    double sector_deg = 60.0;
  } scan;

  struct {
    double duration_us = 207.0;
    double sample_rate_mhz = 50.0;
  } acquisition;

  struct {
    double center_mhz = 3.4;
    double bandwidth_mhz = 2.0;
    double amplitude = 1.0;
  } pulse;

  struct {
    std::size_t size = 1662;
  } grid;

  struct {
    std::size_t reflectors = 25;
    std::size_t oversampling = 2;
    std::size_t coefficients = 0;  // 0: 2 * oversampling * reflectors
    double residual_tol = 1e-6;
  } sparsity;

  struct {
    double rho = 0.95;
    std::size_t n_max = 256;
    std::size_t oversample = 8;
  } truncation;

  struct {
    std::vector<ScattererSpec> scatterers{
        {40.0, {}, -10.0, {}, 1.0}, {80.0, {}, 0.0, {}, 1.0}, {120.0, {}, 12.0, {}, 0.8}};
    double speckle_density = 0.0;
    double speckle_sigma = 0.0;
    double noise_sigma = 0.1;
    double profile_sigma_deg = 0.0;  // 0: half the beam spacing
    bool spreading = false;
  } phantom;

  struct {
    std::size_t real_samples = 1662;
    double passband_mhz = 4.0;
  } reference;

  struct {
    double dynamic_range_db = 40.0;
    std::size_t width = 512;
    std::size_t height = 512;
    ImageFormat format = ImageFormat::pgm;
  } render;

  std::size_t fourier_count() const;  // K

  ScanGeometry scan_geometry() const;
  std::vector<BeamDirection> beam_directions() const;
  AcquisitionWindow window() const;
  PulseSpec pulse_spec() const;
  DelayGrid delay_grid() const;
  FourierIndexSet fourier_indices() const;
  KernelSpectrumParams spectrum_params() const;
  DownsampleParams downsample_params() const;
  RenderParams render_params() const;
  Phantom phantom_model() const;
  std::vector<Scatterer> targets() const;  // scatterers resolved to meters and radians
  SimulationOptions simulation_options() const;
};

// Every invariant violation as "key.path: message". Empty when valid.
std::vector<std::string> validation_errors(const PipelineConfig& config);

// Throws ValidationError listing every violation.
void validate(const PipelineConfig& config);

// Parses configuration text; missing keys keep their defaults. Throws
// ConfigSyntaxError for unparsable text and ValidationError for unknown keys,
// bad values or violated invariants. A relative phantom file is resolved
// against base_dir.
PipelineConfig parse_config_text(const std::string& text,
                                 const std::filesystem::path& base_dir = {});

// As parse_config_text; throws IoError if the file cannot be read.
PipelineConfig parse_config(const std::filesystem::path& path);

}  // namespace cbf
