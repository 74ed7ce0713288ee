#pragma once

// Binary containers for intermediate pipeline artifacts so that stages can be
// rerun independently. Layouts are documented in README.md.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "cbf/imaging.hpp"

namespace cbf {

// "SNBL0001": polar lines.
void save_polar(const PolarImage& image, const std::filesystem::path& path);
PolarImage load_polar(const std::filesystem::path& path);

// Beamformed Fourier coefficients of every line, with the per-element index
// set sizes that produced them (all equal to K in exact mode).
struct CoefficientSet {
  std::uint32_t geometry_hash = 0;
  std::uint32_t mode = 0;  // PipelineMode value
  std::size_t beams = 0;
  std::size_t elements = 0;
  std::vector<std::int64_t> kappa;
  std::vector<std::complex<double>> values;  // beams x K
  std::vector<std::uint32_t> channel_counts;  // beams x elements

  std::size_t fourier_count() const noexcept { return kappa.size(); }
  bool operator==(const CoefficientSet&) const = default;
};

// "SNBC0001".
void save_coefficients(const CoefficientSet& set, const std::filesystem::path& path);
CoefficientSet load_coefficients(const std::filesystem::path& path);

}  // namespace cbf
