#pragma once

// Two-qubit entanglement negativity and maximal CHSH value, each computed two
// ways: from the X-shaped AtomPairState directly, and from an arbitrary 4x4
// density matrix.
//
// Pauli convention: sigma_z|e> = +|e>, sigma_x|g> = |e>.

#include "tcqed/closedform.hpp"
#include "tcqed/qmath.hpp"

#include <array>

namespace tcqed {

inline constexpr double kTsirelson = 2.0 * 1.4142135623730950488;

struct CorrelationMatrix {
  std::array<std::array<double, 3>, 3> t{};  // t[n][m] = Re Tr(rho sigma_n (x) sigma_m), n,m in {x,y,z}
};

// sigma_x, sigma_y, sigma_z in the (|g>, |e>) basis.
CMatrix pauli(int axis);

CMatrix assemble_rho(const AtomPairState& a);

double negativity_closed(const AtomPairState& a);
// Throws NotDensityMatrix unless rho passes is_density_matrix at 1e-8.
double negativity_generic(const CMatrix& rho);

// Throws BadDimension unless rho is 4x4.
CorrelationMatrix correlation_matrix(const CMatrix& rho);

double bell_closed(const AtomPairState& a);
double bell_generic(const CMatrix& rho);

}  // namespace tcqed
