#pragma once

// Partial-Fourier measurement model of a beamformed line and its greedy
// sparse recovery.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cbf/pulse.hpp"

namespace cbf {

using cdouble = std::complex<double>;

// c = (1/T) H A x with A[j, q] = exp(-2 pi i k_j q / N).
struct MeasurementModel {
  std::vector<std::int64_t> kappa;
  DelayGrid grid;
  std::vector<cdouble> h_diag;     // H(2 pi k_j / T)
  std::vector<cdouble> composite;  // K x N, column-major
  std::vector<double> column_norms;

  std::size_t rows() const noexcept { return kappa.size(); }
  std::size_t cols() const noexcept { return grid.size; }
  std::span<const cdouble> column(std::size_t q) const {
    return std::span<const cdouble>(composite).subspan(q * rows(), rows());
  }
};

// Throws BandViolation when some |H(2 pi k_j / T)| < h_min. A negative h_min
// selects 1e-3 of the pulse's peak spectrum.
MeasurementModel build_measurement_model(std::span<const std::int64_t> kappa,
                                         const PulseSpec& pulse, const DelayGrid& grid,
                                         double h_min = -1.0);

struct SparseVector {
  std::vector<std::int64_t> support;  // ascending grid indices
  std::vector<cdouble> values;
  std::size_t size = 0;               // N

  std::vector<cdouble> dense() const;
};

std::vector<cdouble> apply(const MeasurementModel& model, const SparseVector& x);
std::vector<cdouble> apply(const MeasurementModel& model, std::span<const cdouble> dense_x);

struct OmpResult {
  SparseVector x;
  double residual_norm = 0.0;
  std::size_t iterations = 0;
};

// Orthogonal matching pursuit with norm-normalized correlations, lowest index
// on ties, and a joint complex least-squares refit after each selection.
// Stops after max_atoms selections or once ||r|| <= residual_tol ||c||.
// Throws DegenerateSupport if a refit is rank deficient.
OmpResult omp_recover(std::span<const cdouble> c, const MeasurementModel& model,
                      std::size_t max_atoms, double residual_tol);

enum class LineRender {
  stems,     // |b_l| at q_l
  envelope,  // stems convolved with a Gaussian of width envelope_cells
};

// Length-N nonnegative line from a sparse vector.
std::vector<double> reconstruct_line(const SparseVector& x, LineRender mode,
                                     double envelope_cells = 0.0);

}  // namespace cbf
