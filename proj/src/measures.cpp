#include "tcqed/measures.hpp"

#include "tcqed/error.hpp"
#include "tcqed/model.hpp"

#include <algorithm>
#include <cmath>

namespace tcqed {

CMatrix pauli(int axis) {
  const Complex i{0.0, 1.0};
  switch (axis) {
    case 0: return CMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    case 1: return CMatrix::from_rows({{0.0, i}, {-i, 0.0}});  // sigma_x sigma_y = i sigma_z
    case 2: return CMatrix::from_rows({{-1.0, 0.0}, {0.0, 1.0}});
    default: throw Error(Errc::InvalidArgument, "pauli axis must be 0, 1 or 2");
  }
}

CMatrix assemble_rho(const AtomPairState& a) {
  CMatrix rho(4, 4);
  rho(atom::gg, atom::gg) = a.a1;
  rho(atom::ge, atom::ge) = a.a2;
  rho(atom::eg, atom::eg) = a.a5;
  rho(atom::ee, atom::ee) = a.a6;
  rho(atom::ge, atom::eg) = a.a3;
  rho(atom::eg, atom::ge) = a.a4();
  return rho;
}

double negativity_closed(const AtomPairState& a) {
  // The partial transpose has eigenvalues a2, a5 and
  // ((a1 + a6) +- sqrt((a1 - a6)^2 + 4|a3|^2)) / 2; only the last can be negative.
  const double diff = a.a1 - a.a6;
  const double root = std::sqrt(diff * diff + 4.0 * std::norm(a.a3));
  return std::clamp(root - (a.a1 + a.a6), 0.0, 1.0);
}

double negativity_generic(const CMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) throw Error(Errc::BadDimension, "negativity_generic expects 4x4");
  if (!is_density_matrix(rho, 1e-8)) throw Error(Errc::NotDensityMatrix, "negativity_generic");
  const auto eig = hermitian_eig(hermitian_part(partial_transpose_b(rho)));
  double negative = 0.0;
  for (double mu : eig.values)
    if (mu < 0.0) negative += mu;
  return std::clamp(-2.0 * negative, 0.0, 1.0);
}

CorrelationMatrix correlation_matrix(const CMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) throw Error(Errc::BadDimension, "correlation_matrix expects 4x4");
  CorrelationMatrix c;
  for (int n = 0; n < 3; ++n)
    for (int m = 0; m < 3; ++m) c.t[n][m] = (rho * kron(pauli(n), pauli(m))).trace().real();
  return c;
}

double bell_closed(const AtomPairState& a) {
  const double coh = 4.0 * std::norm(a.a3);
  const double zz = a.a1 + a.a6 - a.a2 - a.a5;
  return 2.0 * std::sqrt(coh + std::max(coh, zz * zz));
}

double bell_generic(const CMatrix& rho) {
  const CorrelationMatrix c = correlation_matrix(rho);
  CMatrix ttt(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += c.t[k][i] * c.t[k][j];
      ttt(i, j) = s;
    }
  const auto eig = hermitian_eig(ttt);
  return 2.0 * std::sqrt(std::max(0.0, eig.values[1] + eig.values[2]));
}

}  // namespace tcqed
