#pragma once

// Two dipole-coupled two-level atoms in a single resonant cavity mode.
//
//   H = w (S1z + S2z) + w a^dag a + g sum_j (a^dag Sj- + a Sj+) + W (S1+ S2- + S2+ S1-)
//
// All energies are in units of the atom-cavity coupling g. The decoherence
// coefficient gamma carries units of 1/energy so that gamma * t * H^2 is
// dimensionless.

#include "tcqed/qmath.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace tcqed {

struct ModelParams {
  double g = 1.0;          // atom-cavity coupling
  double omega = 0.0;      // common atomic / cavity frequency
  double big_omega = 1.0;  // dipole-dipole coupling
  double gamma = 0.0;      // phase decoherence coefficient
  int n = 0;               // initial Fock photon number
  double theta = 0.0;      // initial two-atom angle: cos(theta)|eg> + sin(theta)|ge>

  // Throws InvalidArgument when g <= 0, gamma < 0, n < 0 or any value is non-finite.
  void validate() const;
};

namespace atom {
// Two-qubit basis indices (atom A most significant; g = 0, e = 1).
inline constexpr std::size_t gg = 0;
inline constexpr std::size_t ge = 1;
inline constexpr std::size_t eg = 2;
inline constexpr std::size_t ee = 3;
}  // namespace atom

// Index of |atoms>|k> in the atomA (x) atomB (x) field basis with field cutoff n_max.
constexpr std::size_t full_index(std::size_t atoms, std::size_t photons, std::size_t n_max) {
  return atoms * (n_max + 1) + photons;
}

// Default truncation n + 2: the initial state lives in the K = n sector.
inline int default_n_max(const ModelParams& p) { return p.n + 2; }

// Single-qubit and field building blocks.
CMatrix sigma_minus();  // |g><e|
CMatrix sigma_plus();   // |e><g|
CMatrix spin_z();       // (|e><e| - |g><g|) / 2
CMatrix annihilation(int n_max);

// Throws TruncationTooSmall unless n_max >= p.n + 2.
CMatrix build_hamiltonian(const ModelParams& p, int n_max);

// K = a^dag a + S1z + S2z, diagonal. |n,eg> and |n,ge> sit in sector n.
CMatrix excitation_operator(int n_max);

// rho(0) = |psi><psi| (x) |n><n|, |psi> = cos(theta)|eg> + sin(theta)|ge>.
CMatrix initial_state(const ModelParams& p, int n_max);

// Total population of basis states with K != sector.
double population_outside_sector(const CMatrix& rho_full, int sector, int n_max);

struct DressedState {
  double energy = 0.0;
  // Coefficients over the ordered sector basis; see DressedBasis.
  std::vector<double> coeffs;
};

// Closed-form eigensystem in the K = n sector. The sector basis is
// (|n-1,ee>, |n,eg>, |n,ge>, |n+1,gg>), the |n-1,ee> entry being dropped for
// n = 0, in which case the dark state E0 does not exist.
struct DressedBasis {
  int n = 0;
  double delta = 0.0;  // sqrt(8 (1 + 2n) g^2 + W^2)
  bool has_dark_state = false;
  DressedState e0;  // valid only when has_dark_state
  DressedState e1;  // antisymmetric: (|ge> - |eg>)/sqrt2, energy n w - W
  DressedState e2;  // energy (2 n w + W - delta) / 2
  DressedState e3;  // energy (2 n w + W + delta) / 2

  std::size_t sector_dim() const noexcept { return has_dark_state ? 4 : 3; }
  // Full-space index of each sector basis element.
  std::vector<std::size_t> sector_indices(int n_max) const;
  // Embeds a sector vector into the full atom-atom-field space.
  std::vector<Complex> embed(const DressedState& s, int n_max) const;
};

DressedBasis dressed_basis(const ModelParams& p);

// Energy gaps E2 - E1, E3 - E1, E3 - E2; independent of omega.
struct EnergyGaps {
  double e21 = 0.0;
  double e31 = 0.0;
  double e32 = 0.0;
};

double dressed_delta(const ModelParams& p);
EnergyGaps energy_gaps(double big_omega, double delta);

}  // namespace tcqed
