#pragma once

// Stage orchestration: simulation, reference beamforming, compressed
// acquisition, sparse recovery, rendering, metrics and the text report.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cbf/artifacts.hpp"
#include "cbf/config.hpp"
#include "cbf/imaging.hpp"
#include "cbf/operator_cache.hpp"
#include "cbf/phantom.hpp"
#include "cbf/sparse_recovery.hpp"

namespace cbf {

RawChannelData simulate(const PipelineConfig& config);

// Envelope lines of the Nyquist-rate beamformer on the delay grid.
PolarImage beamform_reference(const PipelineConfig& config, const RawChannelData& raw);

// Beamformed Fourier coefficients on kappa for every beam, through exact
// kernel projections or the truncated operators. In approx mode the operators
// come from `cache` when given, otherwise they are built per beam.
CoefficientSet xample(const PipelineConfig& config, const RawChannelData& raw, PipelineMode mode,
                      const OperatorCache* cache = nullptr);

OperatorCacheKey operator_cache_key(const PipelineConfig& config);

// In approx mode with a cache path: loads the cache, or builds and stores it
// when the file does not exist yet. Otherwise returns nothing.
std::optional<OperatorCache> prepare_operator_cache(const PipelineConfig& config);

struct RecoveredLines {
  std::vector<SparseVector> sparse;  // one per beam
  std::vector<double> residuals;     // final ||r|| / ||c|| per beam
  PolarImage polar;
};

RecoveredLines recover(const PipelineConfig& config, const CoefficientSet& coefficients);

// Pulse-envelope width on the delay grid, in cells.
double envelope_cells(const PipelineConfig& config);

// Log-compressed, scan-converted display image.
CartesianImage render_display(const PipelineConfig& config, const PolarImage& polar);

// Linear, max-normalizable image used for comparisons.
CartesianImage render_linear(const PipelineConfig& config, const PolarImage& polar);

struct RateReport {
  std::size_t reference_real_samples = 0;    // configured down-sampled baseline
  std::size_t raw_real_samples = 0;          // floor(T f_s)
  std::size_t band_limited_real_samples = 0;  // 2 floor(T B)
  std::size_t fourier_count = 0;             // K complex samples per line, exact mode
  double exact_reduction = 0.0;
  bool has_channel_counts = false;
  double mean_channel_count = 0.0;
  std::size_t max_channel_count = 0;
  std::size_t min_channel_count = 0;
  double approx_reduction = 0.0;
};

RateReport make_rate_report(const PipelineConfig& config, const CoefficientSet* approx);

struct PipelineMetrics {
  std::optional<ImageMetrics> image;  // reference vs compressed
  std::optional<double> polar_nrmse;
  std::vector<TargetLocation> reference_targets;
  std::vector<TargetLocation> compressed_targets;
  double mean_residual = 0.0;
};

struct PipelineResult {
  RawChannelData raw;
  PolarImage reference;
  std::optional<CoefficientSet> coefficients;
  std::optional<RecoveredLines> recovered;
  RateReport rates;
  PipelineMetrics metrics;
  std::string report;
};

PipelineMetrics compute_metrics(const PipelineConfig& config, const PolarImage& reference,
                                const RecoveredLines* recovered);

// Flat key=value text, one entry per line, deterministic for a given input.
std::string format_report(const PipelineConfig& config, const RateReport& rates,
                          const PipelineMetrics& metrics);

// Runs every stage and, when write_outputs is set, writes the artifacts into
// config.out: raw.snbf, reference.lines, reference image, and for compressed
// modes <mode>.coef, <mode>.lines and <mode> image, plus report.txt.
PipelineResult run_pipeline(const PipelineConfig& config, bool write_outputs = true);

// Output file names inside config.out.
std::filesystem::path raw_path(const PipelineConfig& config);
std::filesystem::path lines_path(const PipelineConfig& config, PipelineMode mode);
std::filesystem::path coefficients_path(const PipelineConfig& config, PipelineMode mode);
std::filesystem::path image_path(const PipelineConfig& config, PipelineMode mode);
std::filesystem::path report_path(const PipelineConfig& config);

}  // namespace cbf
