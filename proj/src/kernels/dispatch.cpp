#include "tcqed/error.hpp"
#include "tcqed/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace tcqed::kernels {
namespace {

struct Table {
  void (*gemm)(const Complex*, const Complex*, Complex*, std::size_t, std::size_t, std::size_t) noexcept;
  void (*axpy)(Complex, const Complex*, Complex*, std::size_t) noexcept;
  void (*hadamard)(const Complex*, const Complex*, Complex*, std::size_t) noexcept;
};

constexpr Table kScalar{&scalar::gemm, &scalar::axpy, &scalar::hadamard};
#if defined(TCQED_HAVE_AVX2)
constexpr Table kAvx2{&avx2::gemm, &avx2::axpy, &avx2::hadamard};
#endif

bool cpu_has_avx2() noexcept {
#if defined(TCQED_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Table* table_for(Backend b) noexcept {
#if defined(TCQED_HAVE_AVX2)
  if (b == Backend::Avx2) return &kAvx2;
#endif
  (void)b;
  return &kScalar;
}

Backend initial_backend() noexcept {
  if (const char* env = std::getenv("TCQED_KERNELS")) {
    const std::string_view v{env};
    if (v == "scalar") return Backend::Scalar;
    if (v == "avx2" && cpu_has_avx2()) return Backend::Avx2;
  }
  return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& active() {
  static std::atomic<Backend> backend{initial_backend()};
  return backend;
}

void check_len(std::size_t have, std::size_t need, const char* what) {
  if (have < need) throw Error(Errc::BadDimension, std::string("kernel buffer too small: ") + what);
}

}  // namespace

const char* backend_name(Backend b) noexcept {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend b) noexcept {
  return b == Backend::Scalar || (b == Backend::Avx2 && cpu_has_avx2());
}

Backend active_backend() noexcept { return active().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_available(b)) {
    throw Error(Errc::InvalidArgument, std::string("kernel backend not available: ") + backend_name(b));
  }
  active().store(b, std::memory_order_relaxed);
}

void gemm(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
          std::size_t m, std::size_t k, std::size_t n) {
  check_len(a.size(), m * k, "gemm a");
  check_len(b.size(), k * n, "gemm b");
  check_len(c.size(), m * n, "gemm c");
  table_for(active_backend())->gemm(a.data(), b.data(), c.data(), m, k, n);
}

void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  check_len(y.size(), x.size(), "axpy y");
  table_for(active_backend())->axpy(alpha, x.data(), y.data(), x.size());
}

void hadamard(std::span<const Complex> x, std::span<const Complex> y, std::span<Complex> out) {
  check_len(y.size(), x.size(), "hadamard y");
  check_len(out.size(), x.size(), "hadamard out");
  table_for(active_backend())->hadamard(x.data(), y.data(), out.data(), x.size());
}

}  // namespace tcqed::kernels
