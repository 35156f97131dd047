#include "tcqed/oracle.hpp"

#include "tcqed/error.hpp"
#include "tcqed/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tcqed {
namespace {

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw Error(Errc::InvalidArgument, "time must be finite and >= 0");
}

void require_gamma(double gamma) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw Error(Errc::InvalidArgument, "gamma must be finite and >= 0");
}

void require_pair(const CMatrix& h, const CMatrix& rho0) {
  if (!h.square() || h.rows() != rho0.rows() || !rho0.square()) {
    throw Error(Errc::BadDimension, "hamiltonian and state must be square and of equal size");
  }
}

// V W V^dagger for a matrix W expressed in the eigenbasis.
CMatrix rotate_back(const SpectralPropagator& prop, const CMatrix& w) {
  return prop.decomposition.vectors * w * prop.vectors_adjoint;
}

}  // namespace

SpectralPropagator make_propagator(const CMatrix& h, const CMatrix& rho0) {
  require_pair(h, rho0);
  SpectralPropagator prop{hermitian_eig(h), CMatrix{}, CMatrix{}};
  prop.vectors_adjoint = prop.decomposition.vectors.adjoint();
  prop.rho0_eigenbasis = prop.vectors_adjoint * rho0 * prop.decomposition.vectors;
  return prop;
}

CMatrix spectral_evolve(const SpectralPropagator& prop, double gamma, double t) {
  require_gamma(gamma);
  require_time(t);
  const auto& e = prop.decomposition.values;
  const std::size_t n = e.size();

  std::vector<Complex> phase(n);
  for (std::size_t m = 0; m < n; ++m) phase[m] = std::polar(1.0, -e[m] * t);

  CMatrix weights(n, n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = 0; k < n; ++k) {
      const double gap = e[m] - e[k];
      weights(m, k) = phase[m] * std::conj(phase[k]) * std::exp(-0.5 * gamma * t * gap * gap);
    }

  CMatrix evolved(n, n);
  kernels::hadamard(prop.rho0_eigenbasis.values(), weights.values(), evolved.values());
  return rotate_back(prop, evolved);
}

std::size_t series_terms_required(const EigenDecomposition& h_eig, double gamma, double t) {
  require_gamma(gamma);
  require_time(t);
  double radius = 0.0;
  for (double v : h_eig.values) radius = std::max(radius, std::abs(v));
  const double x = gamma * t * radius * radius;
  if (x == 0.0) return 0;

  const double log_bound = std::log(kSeriesTailBound);
  for (std::size_t k = 0; k <= kMaxSeriesTerms; ++k) {
    const double next = static_cast<double>(k + 1);
    if (next + 1.0 <= x) continue;
    // x^(k+1)/(k+1)! times the geometric factor bounding the remaining terms.
    const double log_term = next * std::log(x) - std::lgamma(next + 1.0) - std::log1p(-x / (next + 1.0));
    if (log_term < log_bound) return k;
  }
  throw Error(Errc::TailNotConverged,
              "series needs more than " + std::to_string(kMaxSeriesTerms) + " terms (gamma t rho(H)^2 = " +
                  std::to_string(x) + ")");
}

CMatrix series_evolve(const CMatrix& h, const CMatrix& rho0, double gamma, double t, std::size_t k_max) {
  require_pair(h, rho0);
  require_gamma(gamma);
  require_time(t);
  const EigenDecomposition eig = hermitian_eig(h);
  const std::size_t n = eig.values.size();

  // exp(-i H t) exp(-gamma t H^2 / 2) through the spectral projectors.
  CMatrix diag(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    const double e = eig.values[m];
    diag(m, m) = std::polar(std::exp(-0.5 * gamma * t * e * e), -e * t);
  }
  const CMatrix u = eig.vectors * diag * eig.vectors.adjoint();

  CMatrix term = u * rho0 * u.adjoint();
  CMatrix sum = term;
  const double gt = gamma * t;
  for (std::size_t k = 1; k <= k_max; ++k) {
    // M_k rho0 M_k^dagger = H^k (U rho0 U^dagger) H^k
    term = h * term * h;
    term *= gt / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

CMatrix series_evolve(const CMatrix& h, const CMatrix& rho0, double gamma, double t) {
  return series_evolve(h, rho0, gamma, t, series_terms_required(hermitian_eig(h), gamma, t));
}

double rk4_max_step(const CMatrix& h, double gamma) {
  const double hmax = h.max_abs();
  return 0.01 / std::max(1.0, hmax * (1.0 + gamma * hmax));
}

Rk4Evolver::Rk4Evolver(CMatrix h, CMatrix rho0, double gamma, double dt)
    : h_(std::move(h)), rho_(std::move(rho0)), gamma_(gamma), dt_(dt) {
  require_pair(h_, rho_);
  require_gamma(gamma);
  if (!(dt > 0.0)) throw Error(Errc::InvalidArgument, "rk4 step must be positive");
  const double limit = rk4_max_step(h_, gamma);
  if (dt > limit) {
    throw Error(Errc::StepTooLarge, "dt=" + std::to_string(dt) + " exceeds limit " + std::to_string(limit));
  }
}

CMatrix Rk4Evolver::derivative(const CMatrix& rho) const {
  // For Hermitian rho and H: [H, rho] = X - X^dagger with X = H rho, and
  // [H, C] = Y + Y^dagger with Y = H C for the anti-Hermitian C.
  const CMatrix x = h_ * rho;
  const CMatrix comm = x - x.adjoint();
  const CMatrix y = h_ * comm;
  CMatrix out = y + y.adjoint();
  out *= -0.5 * gamma_;
  kernels::axpy(Complex{0.0, -1.0}, comm.values(), out.values());
  return out;
}

void Rk4Evolver::step(double h) {
  const CMatrix k1 = derivative(rho_);
  CMatrix probe = rho_;
  kernels::axpy(0.5 * h, k1.values(), probe.values());
  const CMatrix k2 = derivative(probe);
  probe = rho_;
  kernels::axpy(0.5 * h, k2.values(), probe.values());
  const CMatrix k3 = derivative(probe);
  probe = rho_;
  kernels::axpy(h, k3.values(), probe.values());
  const CMatrix k4 = derivative(probe);

  kernels::axpy(h / 6.0, k1.values(), rho_.values());
  kernels::axpy(h / 3.0, k2.values(), rho_.values());
  kernels::axpy(h / 3.0, k3.values(), rho_.values());
  kernels::axpy(h / 6.0, k4.values(), rho_.values());
  rho_ = hermitian_part(rho_);
}

const CMatrix& Rk4Evolver::advance_to(double t) {
  require_time(t);
  if (t < time_) throw Error(Errc::InvalidArgument, "Rk4Evolver cannot integrate backwards");
  const double span = t - time_;
  if (span == 0.0) return rho_;
  const auto steps = static_cast<std::size_t>(std::ceil(span / dt_ - 1e-9));
  const double h = span / static_cast<double>(std::max<std::size_t>(steps, 1));
  for (std::size_t s = 0; s < std::max<std::size_t>(steps, 1); ++s) step(h);
  time_ = t;
  return rho_;
}

CMatrix rk4_evolve(const CMatrix& h, const CMatrix& rho0, double gamma, double t, double dt) {
  Rk4Evolver ev(h, rho0, gamma, dt);
  return ev.advance_to(t);
}

AtomPairState reduced_atoms(const CMatrix& rho_full, std::size_t field_dim) {
  const CMatrix r = partial_trace_field(rho_full, field_dim);
  double stray = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j) continue;
      if ((i == atom::ge && j == atom::eg) || (i == atom::eg && j == atom::ge)) continue;
      stray = std::max(stray, std::abs(r(i, j)));
    }
  if (stray > 1e-8) {
    throw Error(Errc::UnexpectedCoherence, "reduced state has coherence " + std::to_string(stray) +
                                               " outside the |ge><eg| pair");
  }
  AtomPairState a;
  a.a1 = r(atom::gg, atom::gg).real();
  a.a2 = r(atom::ge, atom::ge).real();
  a.a3 = r(atom::ge, atom::eg);
  a.a5 = r(atom::eg, atom::eg).real();
  a.a6 = r(atom::ee, atom::ee).real();
  return a;
}

OracleSystem make_oracle(const ModelParams& p, int n_max) {
  const int cutoff = n_max > 0 ? n_max : default_n_max(p);
  OracleSystem sys;
  sys.params = p;
  sys.n_max = cutoff;
  sys.hamiltonian = build_hamiltonian(p, cutoff);
  sys.rho0 = initial_state(p, cutoff);
  sys.propagator = make_propagator(sys.hamiltonian, sys.rho0);
  return sys;
}

}  // namespace tcqed
