#pragma once

// Brute-force evolution of the full atom-atom-field density matrix under
//
//   d rho / dt = -i [H, rho] - (gamma / 2) [H, [H, rho]]
//
// by three independent routes: the exact spectral solution, the literal
// Kraus-like k-series, and explicit RK4 on the master equation.

#include "tcqed/closedform.hpp"
#include "tcqed/model.hpp"
#include "tcqed/qmath.hpp"

#include <cstddef>

namespace tcqed {

struct SpectralPropagator {
  EigenDecomposition decomposition;  // of H
  CMatrix vectors_adjoint;           // V^dagger
  CMatrix rho0_eigenbasis;           // V^dagger rho(0) V
};

SpectralPropagator make_propagator(const CMatrix& h, const CMatrix& rho0);

// rho_mn(t) = rho_mn(0) exp(-i (E_m - E_n) t) exp(-(gamma t / 2)(E_m - E_n)^2), back in the bare basis.
CMatrix spectral_evolve(const SpectralPropagator& prop, double gamma, double t);

inline constexpr std::size_t kMaxSeriesTerms = 500;
inline constexpr double kSeriesTailBound = 1e-12;

// Smallest k_max whose tail bound, with x = gamma t rho(H)^2, is below 1e-12.
// Throws TailNotConverged if more than kMaxSeriesTerms are needed.
std::size_t series_terms_required(const EigenDecomposition& h_eig, double gamma, double t);

// sum_{k=0}^{k_max} (gamma t)^k / k! M_k rho0 M_k^dagger with
// M_k = H^k exp(-i H t) exp(-gamma t H^2 / 2). The powers of H are applied by
// repeated multiplication in the bare basis.
CMatrix series_evolve(const CMatrix& h, const CMatrix& rho0, double gamma, double t, std::size_t k_max);
// Chooses k_max with series_terms_required.
CMatrix series_evolve(const CMatrix& h, const CMatrix& rho0, double gamma, double t);

// Largest step accepted by rk4_evolve: 0.01 / max(1, |H|max (1 + gamma |H|max)).
double rk4_max_step(const CMatrix& h, double gamma);
inline constexpr double kDefaultRk4Step = 1e-3;

// Classic RK4 on the master equation; the state is re-symmetrised after every
// step. Steps of at most dt, shortened uniformly to land on the target time.
class Rk4Evolver {
 public:
  // Throws StepTooLarge if dt exceeds rk4_max_step(h, gamma).
  Rk4Evolver(CMatrix h, CMatrix rho0, double gamma, double dt);

  // Integrates forward to t (>= current time).
  const CMatrix& advance_to(double t);

  double time() const noexcept { return time_; }
  const CMatrix& state() const noexcept { return rho_; }

 private:
  CMatrix derivative(const CMatrix& rho) const;
  void step(double h);

  CMatrix h_;
  CMatrix rho_;
  double gamma_;
  double dt_;
  double time_ = 0.0;
};

CMatrix rk4_evolve(const CMatrix& h, const CMatrix& rho0, double gamma, double t, double dt = kDefaultRk4Step);

// Partial trace over the field and extraction of the X-shaped entries.
// Throws UnexpectedCoherence if any other coherence exceeds 1e-8.
AtomPairState reduced_atoms(const CMatrix& rho_full, std::size_t field_dim);

// Convenience bundle for one parameter point.
struct OracleSystem {
  ModelParams params;
  int n_max = 0;
  CMatrix hamiltonian;
  CMatrix rho0;
  SpectralPropagator propagator;

  std::size_t field_dim() const noexcept { return static_cast<std::size_t>(n_max) + 1; }
  CMatrix full_state(double t) const { return spectral_evolve(propagator, params.gamma, t); }
  AtomPairState atoms(double t) const { return reduced_atoms(full_state(t), field_dim()); }
};

// n_max <= 0 selects default_n_max(p).
OracleSystem make_oracle(const ModelParams& p, int n_max = 0);

}  // namespace tcqed
