#pragma once

// Small dense complex linear algebra (dimension up to a few dozen).
//
// Two-qubit matrices use the basis order |gg>, |ge>, |eg>, |ee> with atom A as
// the most significant index. Atom-atom-field matrices are ordered
// atomA (x) atomB (x) field.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace tcqed {

using Complex = std::complex<double>;

class CMatrix {
 public:
  CMatrix() = default;
  // Zero-filled. Throws BadDimension for a zero extent.
  CMatrix(std::size_t rows, std::size_t cols);
  // Row-major values; throws BadDimension on size mismatch, NonFinite on NaN/Inf.
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> values);

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(std::span<const double> d);
  static CMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  std::span<Complex> values() noexcept { return data_; }
  std::span<const Complex> values() const noexcept { return data_; }

  CMatrix adjoint() const;
  CMatrix transpose() const;
  Complex trace() const;
  double max_abs() const noexcept;
  bool all_finite() const noexcept;

  CMatrix& operator+=(const CMatrix& rhs);
  CMatrix& operator-=(const CMatrix& rhs);
  CMatrix& operator*=(Complex s) noexcept;

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

CMatrix operator+(CMatrix lhs, const CMatrix& rhs);
CMatrix operator-(CMatrix lhs, const CMatrix& rhs);
CMatrix operator*(CMatrix m, Complex s);
CMatrix operator*(Complex s, CMatrix m);
// Matrix product; routed through the active kernel backend.
CMatrix operator*(const CMatrix& a, const CMatrix& b);

// Largest entrywise deviation |a - b|; throws BadDimension on shape mismatch.
double max_abs_diff(const CMatrix& a, const CMatrix& b);
// max |M - M^dagger|
double hermiticity_defect(const CMatrix& m);

// (M + M^dagger) / 2
CMatrix hermitian_part(const CMatrix& m);

// Outer product |v><v|
CMatrix projector(std::span<const Complex> v);

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // column k is the eigenvector for values[k]
};

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kDensityTol = 1e-9;
inline constexpr int kMaxJacobiSweeps = 100;

CMatrix kron(const CMatrix& a, const CMatrix& b);

// Cyclic complex Jacobi. Throws NotHermitian if ||M - M^dagger||_max > 1e-10,
// NoConvergence after kMaxJacobiSweeps sweeps.
EigenDecomposition hermitian_eig(const CMatrix& m);

// <iA jB| rho^T_B |kA lB> = <iA lB| rho |kA jB> for a 4x4 two-qubit matrix.
CMatrix partial_transpose_b(const CMatrix& rho);

// Traces out the trailing field factor of a (4*field_dim)-square matrix.
CMatrix partial_trace_field(const CMatrix& rho_full, std::size_t field_dim);

// Hermitian within tol, trace within tol of 1, smallest eigenvalue >= -tol.
bool is_density_matrix(const CMatrix& rho, double tol = kDensityTol);

// Tr(rho^2), real part.
double purity(const CMatrix& rho);

}  // namespace tcqed
