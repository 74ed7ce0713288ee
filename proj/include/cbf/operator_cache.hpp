#pragma once

// Offline store of per-(beam, element) approximation operators.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "cbf/geometry.hpp"
#include "cbf/xampling.hpp"

namespace cbf {

// Everything the operators depend on; a cache whose key differs is stale.
struct OperatorCacheKey {
  std::uint32_t geometry_hash = 0;
  std::uint32_t beams = 0;
  std::uint32_t elements = 0;
  std::vector<std::int64_t> kappa;
  double rho = 0.0;
  std::uint32_t n_max = 0;
  std::uint32_t oversample = 0;

  bool operator==(const OperatorCacheKey&) const = default;
};

struct OperatorCache {
  OperatorCacheKey key;
  std::vector<ApproxOperator> operators;  // beam-major, beams x elements

  const ApproxOperator& at(std::size_t beam, std::size_t element) const;
};

OperatorCache build_operator_cache(const ScanGeometry& geom, std::span<const BeamDirection> beams,
                                   const AcquisitionWindow& window,
                                   std::span<const std::int64_t> kappa,
                                   const KernelSpectrumParams& params, double rho,
                                   std::size_t threads);

// Container "SNBO0001"; see README for the layout.
void save_operator_cache(const OperatorCache& cache, const std::filesystem::path& path);

// Throws FormatError(stale_cache) when the stored key differs from `expected`.
OperatorCache load_operator_cache(const std::filesystem::path& path,
                                  const OperatorCacheKey& expected);

}  // namespace cbf
