#pragma once

// Analytic solution for the initial state (cos t|eg> + sin t|ge>) (x) |n>.
//
// The evolved state lives on the three dressed states E1, E2, E3 of the K = n
// sector. Coherence between E_j and E_k oscillates at E_k - E_j and decays as
// exp(-(E_k - E_j)^2 gamma t / 2).

#include "tcqed/model.hpp"
#include "tcqed/qmath.hpp"

namespace tcqed {

// rho(t) = sum c_jk |E_j><E_k| over j, k in {1,2,3}.
// c5 = conj(c4), c7 = conj(c6), c9 = conj(c8).
struct EvolutionCoefficients {
  double c1 = 0.0;   // |E1><E1|
  double c2 = 0.0;   // |E2><E2|
  double c3 = 0.0;   // |E3><E3|
  Complex c4;        // |E1><E2|
  Complex c6;        // |E1><E3|
  Complex c8;        // |E2><E3|
};

// Reduced two-atom state. Only |ge><eg| (a3) and its conjugate |eg><ge| carry
// coherence; everything else off the diagonal vanishes.
struct AtomPairState {
  double a1 = 0.0;  // |gg> population
  double a2 = 0.0;  // |ge> population
  Complex a3;       // <ge|rho|eg>
  double a5 = 0.0;  // |eg> population
  double a6 = 0.0;  // |ee> population

  Complex a4() const { return std::conj(a3); }
  double trace() const { return a1 + a2 + a5 + a6; }
};

// Throws InvalidArgument for t < 0 or invalid params.
EvolutionCoefficients coefficients(const ModelParams& p, double t);

// Full atom-atom-field state assembled from the coefficients and the dressed basis.
CMatrix evolved_state(const ModelParams& p, double t, int n_max);

AtomPairState atom_pair_state(const ModelParams& p, double t);

// gamma -> infinity limit at fixed t > 0, i.e. t -> infinity for gamma > 0.
// Coherences across an exactly vanishing gap (|gap| <= 1e-12 g) survive.
// Throws NotDecaying when gamma == 0.
AtomPairState stationary_state(const ModelParams& p);

// Printed long-time negativity formula, kept as a cross-check only. It agrees
// with negativity(stationary_state(p)) when W = 0 (while it stays
// non-negative) or sin(2 theta) = 0; otherwise the two differ.
double stationary_negativity_printed(const ModelParams& p);

namespace detail {
// Same as atom_pair_state with an externally supplied Delta. Used by the
// self-check mutation probe.
AtomPairState atom_pair_state(const ModelParams& p, double t, double delta);
}  // namespace detail

}  // namespace tcqed
