// AVX2 variants of the kernel operations. Compiled with -mavx2 and only
// ever called after a runtime cpuid check. Element-wise kernels use
// mul/add (no FMA) so they stay bit-identical to the scalar reference.

#include <immintrin.h>

#include <cmath>

#include "v2s/kernels.hpp"

namespace v2s::kernels {
namespace {

void multiply_avx2(double* dst, const double* a, const double* b,
                   std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d va = _mm256_loadu_pd(a + i);
    __m256d vb = _mm256_loadu_pd(b + i);
    _mm256_storeu_pd(dst + i, _mm256_mul_pd(va, vb));
  }
  for (; i < n; ++i) dst[i] = a[i] * b[i];
}

void axpy_avx2(double* dst, double gain, const double* src, std::size_t n) {
  __m256d vg = _mm256_set1_pd(gain);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vs = _mm256_loadu_pd(src + i);
    __m256d vd = _mm256_loadu_pd(dst + i);
    _mm256_storeu_pd(dst + i, _mm256_add_pd(vd, _mm256_mul_pd(vg, vs)));
  }
  for (; i < n; ++i) dst[i] += gain * src[i];
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d va = _mm256_loadu_pd(a + i);
    __m256d vb = _mm256_loadu_pd(b + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(va, vb));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

double sum_squares_avx2(const double* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d va = _mm256_loadu_pd(a + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(va, va));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) sum += a[i] * a[i];
  return sum;
}

double peak_abs_avx2(const double* a, std::size_t n) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d vmax = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d va = _mm256_andnot_pd(sign_mask, _mm256_loadu_pd(a + i));
    vmax = _mm256_max_pd(vmax, va);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, vmax);
  double peak = std::max(std::max(lanes[0], lanes[1]),
                         std::max(lanes[2], lanes[3]));
  for (; i < n; ++i) {
    double v = std::fabs(a[i]);
    if (v > peak) peak = v;
  }
  return peak;
}

void power_from_complex_avx2(double* dst, const std::complex<double>* src,
                             std::size_t n) {
  const double* p = reinterpret_cast<const double*>(src);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    // two registers of (re, im) pairs -> four |c|^2 values
    __m256d lo = _mm256_loadu_pd(p + 2 * i);
    __m256d hi = _mm256_loadu_pd(p + 2 * i + 4);
    __m256d sq_lo = _mm256_mul_pd(lo, lo);
    __m256d sq_hi = _mm256_mul_pd(hi, hi);
    // hadd interleaves the two sources: fix lane order with a permute
    __m256d sums = _mm256_hadd_pd(sq_lo, sq_hi);
    sums = _mm256_permute4x64_pd(sums, 0xD8);
    _mm256_storeu_pd(dst + i, sums);
  }
  for (; i < n; ++i) {
    double re = src[i].real();
    double im = src[i].imag();
    dst[i] = re * re + im * im;
  }
}

}  // namespace

namespace detail {

const Backend& avx2_backend() {
  static const Backend backend{multiply_avx2,   axpy_avx2,
                               dot_avx2,        sum_squares_avx2,
                               peak_abs_avx2,   power_from_complex_avx2,
                               "avx2"};
  return backend;
}

}  // namespace detail

}  // namespace v2s::kernels
