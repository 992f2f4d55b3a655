#include "v2s/kernels.hpp"

#include <cmath>

namespace v2s::kernels {
namespace {

void multiply_scalar(double* dst, const double* a, const double* b,
                     std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] * b[i];
}

void axpy_scalar(double* dst, double gain, const double* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] += gain * src[i];
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_squares_scalar(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * a[i];
  return acc;
}

double peak_abs_scalar(const double* a, std::size_t n) {
  double peak = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double v = std::fabs(a[i]);
    if (v > peak) peak = v;
  }
  return peak;
}

void power_from_complex_scalar(double* dst, const std::complex<double>* src,
                               std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double re = src[i].real();
    double im = src[i].imag();
    dst[i] = re * re + im * im;
  }
}

const detail::Backend& pick_backend() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2")) return detail::avx2_backend();
#elif defined(__aarch64__)
  return detail::neon_backend();
#endif
  return detail::scalar_backend();
}

}  // namespace

namespace detail {

const Backend& scalar_backend() {
  static const Backend backend{multiply_scalar,   axpy_scalar,
                               dot_scalar,        sum_squares_scalar,
                               peak_abs_scalar,   power_from_complex_scalar,
                               "scalar"};
  return backend;
}

const Backend& active_backend() {
  static const Backend& backend = pick_backend();
  return backend;
}

}  // namespace detail

void multiply(double* dst, const double* a, const double* b, std::size_t n) {
  detail::active_backend().multiply(dst, a, b, n);
}

void axpy(double* dst, double gain, const double* src, std::size_t n) {
  detail::active_backend().axpy(dst, gain, src, n);
}

double dot(const double* a, const double* b, std::size_t n) {
  return detail::active_backend().dot(a, b, n);
}

double sum_squares(const double* a, std::size_t n) {
  return detail::active_backend().sum_squares(a, n);
}

double peak_abs(const double* a, std::size_t n) {
  return detail::active_backend().peak_abs(a, n);
}

void power_from_complex(double* dst, const std::complex<double>* src,
                        std::size_t n) {
  detail::active_backend().power_from_complex(dst, src, n);
}

std::string_view backend_name() { return detail::active_backend().name; }

}  // namespace v2s::kernels
