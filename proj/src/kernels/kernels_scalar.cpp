#include "tcqed/kernels.hpp"

namespace tcqed::kernels::scalar {

// Written out on re/im pairs so the reference does not depend on how the
// standard library implements complex multiplication (NaN/Inf recovery paths).
void gemm(const Complex* a, const Complex* b, Complex* c, std::size_t m, std::size_t k,
          std::size_t n) noexcept {
  for (std::size_t i = 0; i < m; ++i) {
    Complex* crow = c + i * n;
    for (std::size_t j = 0; j < n; ++j) crow[j] = Complex{};
    for (std::size_t p = 0; p < k; ++p) {
      const double ar = a[i * k + p].real();
      const double ai = a[i * k + p].imag();
      const Complex* brow = b + p * n;
      for (std::size_t j = 0; j < n; ++j) {
        const double br = brow[j].real();
        const double bi = brow[j].imag();
        crow[j] = Complex{crow[j].real() + (br * ar - bi * ai), crow[j].imag() + (bi * ar + br * ai)};
      }
    }
  }
}

void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t len) noexcept {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  for (std::size_t i = 0; i < len; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = Complex{y[i].real() + (xr * ar - xi * ai), y[i].imag() + (xi * ar + xr * ai)};
  }
}

void hadamard(const Complex* x, const Complex* y, Complex* out, std::size_t len) noexcept {
  for (std::size_t i = 0; i < len; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    const double yr = y[i].real();
    const double yi = y[i].imag();
    out[i] = Complex{xr * yr - xi * yi, xi * yr + xr * yi};
  }
}

}  // namespace tcqed::kernels::scalar
