#pragma once

// Inner-loop kernels shared by the projection, operator and recovery stages.
// Each kernel has a portable scalar reference and, on x86-64, an AVX2/FMA
// variant. The active table is chosen once at first use from the CPU
// features; CBF_SIMD=scalar|avx2 in the environment overrides the choice.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace cbf::simd {

using cdouble = std::complex<double>;

enum class Backend { scalar, avx2 };

struct KernelTable {
  Backend backend;
  // sum_i a[i] * b[i]
  cdouble (*dotu)(const cdouble* a, const cdouble* b, std::size_t n);
  // sum_i conj(a[i]) * b[i]
  cdouble (*dotc)(const cdouble* a, const cdouble* b, std::size_t n);
  // sum_i x[i] * w[i]
  cdouble (*dot_real)(const double* x, const cdouble* w, std::size_t n);
  // returns sum_i w[i], then w[i] *= z[i]
  cdouble (*sum_then_scale)(cdouble* w, const cdouble* z, std::size_t n);
  // w[i] *= z[i]
  void (*cmul_inplace)(cdouble* w, const cdouble* z, std::size_t n);
  // acc[i] += x[i]
  void (*accumulate)(double* acc, const double* x, std::size_t n);
  // out[i] = |w[i]|^2
  void (*abs2)(const cdouble* w, double* out, std::size_t n);
  // out[i] = linear interpolation of x at fractional index pos[i]; 0 when
  // pos[i] lies beyond the last sample. pos[i] >= 0 is required.
  void (*lerp)(const double* x, std::size_t len, const double* pos, double* out,
               std::size_t n);
};

const KernelTable& scalar_table() noexcept;
#if defined(CBF_HAVE_AVX2_KERNELS)
const KernelTable& avx2_table() noexcept;
#endif

bool available(Backend backend) noexcept;
const KernelTable& table_for(Backend backend);
const KernelTable& active() noexcept;
void set_backend(Backend backend);
Backend active_backend() noexcept;
std::string_view name(Backend backend) noexcept;

inline cdouble dotu(std::span<const cdouble> a, std::span<const cdouble> b) {
  return active().dotu(a.data(), b.data(), a.size());
}
inline cdouble dotc(std::span<const cdouble> a, std::span<const cdouble> b) {
  return active().dotc(a.data(), b.data(), a.size());
}
inline cdouble dot_real(std::span<const double> x, std::span<const cdouble> w) {
  return active().dot_real(x.data(), w.data(), x.size());
}
inline cdouble sum_then_scale(std::span<cdouble> w, std::span<const cdouble> z) {
  return active().sum_then_scale(w.data(), z.data(), w.size());
}
inline void cmul_inplace(std::span<cdouble> w, std::span<const cdouble> z) {
  active().cmul_inplace(w.data(), z.data(), w.size());
}
inline void accumulate(std::span<double> acc, std::span<const double> x) {
  active().accumulate(acc.data(), x.data(), acc.size());
}
inline void abs2(std::span<const cdouble> w, std::span<double> out) {
  active().abs2(w.data(), out.data(), w.size());
}
inline void lerp(std::span<const double> x, std::span<const double> pos, std::span<double> out) {
  active().lerp(x.data(), x.size(), pos.data(), out.data(), pos.size());
}

}  // namespace cbf::simd
