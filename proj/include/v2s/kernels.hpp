#pragma once

// Data-parallel inner loops shared by the DSP code: windowing products,
// overlap-add accumulation, resampler tap dot products, power spectra and
// the usual reductions. Each operation has a scalar reference
// implementation; on x86-64 an AVX2 variant and on aarch64 a NEON variant
// are selected once at startup from CPU capabilities. Element-wise variants
// match the scalar results bit for bit; reductions reassociate and agree to
// ~1e-12 relative (see tests/test_kernels.cpp).

#include <complex>
#include <cstddef>
#include <string_view>

namespace v2s::kernels {

/// dst[i] = a[i] * b[i]
void multiply(double* dst, const double* a, const double* b, std::size_t n);

/// dst[i] += gain * src[i]
void axpy(double* dst, double gain, const double* src, std::size_t n);

/// sum of a[i] * b[i]
double dot(const double* a, const double* b, std::size_t n);

/// sum of a[i]^2
double sum_squares(const double* a, std::size_t n);

/// max |a[i]|, 0 for empty input
double peak_abs(const double* a, std::size_t n);

/// dst[i] = re^2 + im^2 of src[i]
void power_from_complex(double* dst, const std::complex<double>* src,
                        std::size_t n);

/// Name of the backend in use: "scalar", "avx2" or "neon".
std::string_view backend_name();

namespace detail {

struct Backend {
  void (*multiply)(double*, const double*, const double*, std::size_t);
  void (*axpy)(double*, double, const double*, std::size_t);
  double (*dot)(const double*, const double*, std::size_t);
  double (*sum_squares)(const double*, std::size_t);
  double (*peak_abs)(const double*, std::size_t);
  void (*power_from_complex)(double*, const std::complex<double>*,
                             std::size_t);
  const char* name;
};

const Backend& scalar_backend();
#if defined(__x86_64__) || defined(_M_X64)
const Backend& avx2_backend();
#endif
#if defined(__aarch64__)
const Backend& neon_backend();
#endif
const Backend& active_backend();

}  // namespace detail

}  // namespace v2s::kernels
