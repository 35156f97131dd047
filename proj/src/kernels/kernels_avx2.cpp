// AVX2 + FMA variants. This translation unit is the only one compiled with
// -mavx2 -mfma; nothing here may run before the dispatcher has confirmed
// CPU support.
//
// A __m256d holds two interleaved complex values [re0, im0, re1, im1].

#include "tcqed/kernels.hpp"

#include <immintrin.h>

namespace tcqed::kernels::avx2 {
namespace {

inline const double* as_doubles(const Complex* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(Complex* p) { return reinterpret_cast<double*>(p); }

// [x0r, x0i, x1r, x1i] -> [x0i, x0r, x1i, x1r]
inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0x5); }

// Elementwise complex product of two packed pairs.
inline __m256d cmul(__m256d x, __m256d y) {
  const __m256d yr = _mm256_movedup_pd(y);
  const __m256d yi = _mm256_permute_pd(y, 0xF);
  return _mm256_fmaddsub_pd(x, yr, _mm256_mul_pd(swap_re_im(x), yi));
}

inline Complex cmul_scalar(Complex x, Complex y) {
  return {x.real() * y.real() - x.imag() * y.imag(), x.imag() * y.real() + x.real() * y.imag()};
}

}  // namespace

void gemm(const Complex* a, const Complex* b, Complex* c, std::size_t m, std::size_t k,
          std::size_t n) noexcept {
  for (std::size_t i = 0; i < m; ++i) {
    const Complex* arow = a + i * k;
    Complex* crow = c + i * n;
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
      __m256d re0 = _mm256_setzero_pd(), im0 = _mm256_setzero_pd();
      __m256d re1 = _mm256_setzero_pd(), im1 = _mm256_setzero_pd();
      for (std::size_t p = 0; p < k; ++p) {
        const __m256d ar = _mm256_set1_pd(arow[p].real());
        const __m256d ai = _mm256_set1_pd(arow[p].imag());
        const double* bp = as_doubles(b + p * n + j);
        const __m256d b0 = _mm256_loadu_pd(bp);
        const __m256d b1 = _mm256_loadu_pd(bp + 4);
        re0 = _mm256_fmadd_pd(b0, ar, re0);
        im0 = _mm256_fmadd_pd(b0, ai, im0);
        re1 = _mm256_fmadd_pd(b1, ar, re1);
        im1 = _mm256_fmadd_pd(b1, ai, im1);
      }
      _mm256_storeu_pd(as_doubles(crow + j), _mm256_addsub_pd(re0, swap_re_im(im0)));
      _mm256_storeu_pd(as_doubles(crow + j + 2), _mm256_addsub_pd(re1, swap_re_im(im1)));
    }
    for (; j + 2 <= n; j += 2) {
      __m256d re = _mm256_setzero_pd(), im = _mm256_setzero_pd();
      for (std::size_t p = 0; p < k; ++p) {
        const __m256d bv = _mm256_loadu_pd(as_doubles(b + p * n + j));
        re = _mm256_fmadd_pd(bv, _mm256_set1_pd(arow[p].real()), re);
        im = _mm256_fmadd_pd(bv, _mm256_set1_pd(arow[p].imag()), im);
      }
      _mm256_storeu_pd(as_doubles(crow + j), _mm256_addsub_pd(re, swap_re_im(im)));
    }
    for (; j < n; ++j) {
      Complex acc{};
      for (std::size_t p = 0; p < k; ++p) acc += cmul_scalar(b[p * n + j], arow[p]);
      crow[j] = acc;
    }
  }
}

void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t len) noexcept {
  const __m256d av = _mm256_setr_pd(alpha.real(), alpha.imag(), alpha.real(), alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const __m256d xv = _mm256_loadu_pd(as_doubles(x + i));
    const __m256d yv = _mm256_loadu_pd(as_doubles(y + i));
    _mm256_storeu_pd(as_doubles(y + i), _mm256_add_pd(yv, cmul(xv, av)));
  }
  for (; i < len; ++i) y[i] += cmul_scalar(x[i], alpha);
}

void hadamard(const Complex* x, const Complex* y, Complex* out, std::size_t len) noexcept {
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const __m256d xv = _mm256_loadu_pd(as_doubles(x + i));
    const __m256d yv = _mm256_loadu_pd(as_doubles(y + i));
    _mm256_storeu_pd(as_doubles(out + i), cmul(xv, yv));
  }
  for (; i < len; ++i) out[i] = cmul_scalar(x[i], y[i]);
}

}  // namespace tcqed::kernels::avx2
