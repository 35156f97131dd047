#include "tcqed/qmath.hpp"

#include "tcqed/error.hpp"
#include "tcqed/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace tcqed {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::BadDimension: return "BadDimension";
    case Errc::NonFinite: return "NonFinite";
    case Errc::TruncationTooSmall: return "TruncationTooSmall";
    case Errc::NotDecaying: return "NotDecaying";
    case Errc::NotDensityMatrix: return "NotDensityMatrix";
    case Errc::TailNotConverged: return "TailNotConverged";
    case Errc::StepTooLarge: return "StepTooLarge";
    case Errc::UnexpectedCoherence: return "UnexpectedCoherence";
    case Errc::UnknownFigure: return "UnknownFigure";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::BadDimension, std::string(op) + ": shape mismatch");
  }
}

void require_square(const CMatrix& m, const char* op) {
  if (!m.square() || m.empty()) throw Error(Errc::BadDimension, std::string(op) + ": matrix not square");
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw Error(Errc::BadDimension, "matrix extents must be positive");
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> values)
    : rows_(rows), cols_(cols), data_(std::move(values)) {
  if (rows == 0 || cols == 0) throw Error(Errc::BadDimension, "matrix extents must be positive");
  if (data_.size() != rows * cols) throw Error(Errc::BadDimension, "value count does not match extents");
  if (!all_finite()) throw Error(Errc::NonFinite, "matrix entries must be finite");
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const double> d) {
  CMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  std::vector<Complex> values;
  values.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(Errc::BadDimension, "ragged row list");
    values.insert(values.end(), row.begin(), row.end());
  }
  return CMatrix(r, c, std::move(values));
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

CMatrix CMatrix::transpose() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Complex CMatrix::trace() const {
  require_square(*this, "trace");
  Complex t{};
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool CMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
  require_same_shape(*this, rhs, "operator+=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& rhs) {
  require_same_shape(*this, rhs, "operator-=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex s) noexcept {
  for (auto& z : data_) z *= s;
  return *this;
}

CMatrix operator+(CMatrix lhs, const CMatrix& rhs) { return lhs += rhs; }
CMatrix operator-(CMatrix lhs, const CMatrix& rhs) { return lhs -= rhs; }
CMatrix operator*(CMatrix m, Complex s) { return m *= s; }
CMatrix operator*(Complex s, CMatrix m) { return m *= s; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::BadDimension, "matrix product: inner extents differ");
  CMatrix c(a.rows(), b.cols());
  kernels::gemm(a.values(), b.values(), c.values(), a.rows(), a.cols(), b.cols());
  return c;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  const auto av = a.values();
  const auto bv = b.values();
  for (std::size_t i = 0; i < av.size(); ++i) m = std::max(m, std::abs(av[i] - bv[i]));
  return m;
}

double hermiticity_defect(const CMatrix& m) {
  require_square(m, "hermiticity_defect");
  double d = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
  return d;
}

CMatrix hermitian_part(const CMatrix& m) {
  require_square(m, "hermitian_part");
  CMatrix h(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return h;
}

CMatrix projector(std::span<const Complex> v) {
  CMatrix p(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) p(i, j) = v[i] * std::conj(v[j]);
  return p;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex s = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
    }
  return out;
}

EigenDecomposition hermitian_eig(const CMatrix& m) {
  require_square(m, "hermitian_eig");
  if (!m.all_finite()) throw Error(Errc::NonFinite, "hermitian_eig: non-finite entries");
  if (hermiticity_defect(m) > kHermitianTol) throw Error(Errc::NotHermitian, "hermitian_eig");

  const std::size_t n = m.rows();
  CMatrix a = hermitian_part(m);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
  CMatrix v = CMatrix::identity(n);

  double norm2 = 0.0;
  for (const auto& z : a.values()) norm2 += std::norm(z);
  const double negligible = 1e-18 * std::sqrt(norm2);

  bool converged = false;
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (off == 0.0) {
      converged = true;
      break;
    }

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Once past the first sweeps, entries below rounding of both
        // diagonals are dropped rather than rotated.
        if (r <= negligible ||
            (sweep > 3 && std::abs(app) + 100.0 * r == std::abs(app) &&
             std::abs(aqq) + 100.0 * r == std::abs(aqq))) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }

        // Phase-align a(p,q) to a real positive value, then a real rotation.
        const Complex phase = std::conj(a(p, q)) / r;  // e^{-i arg a_pq}
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex upp = c;
        const Complex upq = s;
        const Complex uqp = -s * phase;
        const Complex uqq = c * phase;

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  if (!converged) throw Error(Errc::NoConvergence, "hermitian_eig: sweep limit reached");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out{std::vector<double>(n), CMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

CMatrix partial_transpose_b(const CMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) throw Error(Errc::BadDimension, "partial_transpose_b expects 4x4");
  CMatrix out(4, 4);
  for (std::size_t ia = 0; ia < 2; ++ia)
    for (std::size_t jb = 0; jb < 2; ++jb)
      for (std::size_t ka = 0; ka < 2; ++ka)
        for (std::size_t lb = 0; lb < 2; ++lb) out(2 * ia + jb, 2 * ka + lb) = rho(2 * ia + lb, 2 * ka + jb);
  return out;
}

CMatrix partial_trace_field(const CMatrix& rho_full, std::size_t field_dim) {
  if (field_dim == 0 || !rho_full.square() || rho_full.rows() != 4 * field_dim) {
    throw Error(Errc::BadDimension, "partial_trace_field: expected a square matrix of size 4*field_dim");
  }
  CMatrix out(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Complex s{};
      for (std::size_t f = 0; f < field_dim; ++f) s += rho_full(i * field_dim + f, j * field_dim + f);
      out(i, j) = s;
    }
  return out;
}

bool is_density_matrix(const CMatrix& rho, double tol) {
  if (!rho.square() || rho.empty() || !rho.all_finite()) return false;
  if (hermiticity_defect(rho) > tol) return false;
  if (std::abs(rho.trace() - Complex{1.0}) > tol) return false;
  const auto eig = hermitian_eig(hermitian_part(rho));
  return eig.values.front() >= -tol;
}

double purity(const CMatrix& rho) {
  require_square(rho, "purity");
  // Tr(rho^2) = sum_ij rho_ij rho_ji
  Complex s{};
  for (std::size_t i = 0; i < rho.rows(); ++i)
    for (std::size_t j = 0; j < rho.cols(); ++j) s += rho(i, j) * rho(j, i);
  return s.real();
}

}  // namespace tcqed
