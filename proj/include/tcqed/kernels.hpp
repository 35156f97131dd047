#pragma once

// Data-parallel complex kernels behind the dense linear algebra.
//
// Every kernel has a portable scalar reference implementation. On x86-64 an
// AVX2+FMA variant is compiled into a separate translation unit and picked at
// runtime when the CPU supports it. The environment variable TCQED_KERNELS
// (values "scalar" or "avx2") overrides the automatic choice.
//
// All matrices are row-major and densely packed.

#include <complex>
#include <cstddef>
#include <span>

namespace tcqed::kernels {

using Complex = std::complex<double>;

enum class Backend { Scalar, Avx2 };

const char* backend_name(Backend b) noexcept;
bool backend_available(Backend b) noexcept;

Backend active_backend() noexcept;
// Throws tcqed::Error(InvalidArgument) if the backend is not available.
void set_backend(Backend b);

// c (m x n) = a (m x k) * b (k x n)
void gemm(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
          std::size_t m, std::size_t k, std::size_t n);

// y += alpha * x
void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y);

// out[i] = x[i] * y[i]
void hadamard(std::span<const Complex> x, std::span<const Complex> y, std::span<Complex> out);

namespace scalar {
void gemm(const Complex* a, const Complex* b, Complex* c, std::size_t m, std::size_t k,
          std::size_t n) noexcept;
void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t len) noexcept;
void hadamard(const Complex* x, const Complex* y, Complex* out, std::size_t len) noexcept;
}  // namespace scalar

#if defined(TCQED_HAVE_AVX2)
namespace avx2 {
void gemm(const Complex* a, const Complex* b, Complex* c, std::size_t m, std::size_t k,
          std::size_t n) noexcept;
void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t len) noexcept;
void hadamard(const Complex* x, const Complex* y, Complex* out, std::size_t len) noexcept;
}  // namespace avx2
#endif

}  // namespace tcqed::kernels
