#include "tcqed/model.hpp"

#include "tcqed/error.hpp"

#include <cmath>
#include <string>

namespace tcqed {

void ModelParams::validate() const {
  if (!std::isfinite(g) || !std::isfinite(omega) || !std::isfinite(big_omega) || !std::isfinite(gamma) ||
      !std::isfinite(theta)) {
    throw Error(Errc::InvalidArgument, "model parameters must be finite");
  }
  if (g <= 0.0) throw Error(Errc::InvalidArgument, "coupling g must be positive");
  if (gamma < 0.0) throw Error(Errc::InvalidArgument, "gamma must be non-negative");
  if (n < 0) throw Error(Errc::InvalidArgument, "photon number must be non-negative");
}

namespace {

void require_truncation(const ModelParams& p, int n_max) {
  if (n_max < p.n + 2) {
    throw Error(Errc::TruncationTooSmall,
                "n_max=" + std::to_string(n_max) + " must be at least n+2=" + std::to_string(p.n + 2));
  }
}

std::size_t field_dim(int n_max) { return static_cast<std::size_t>(n_max) + 1; }

}  // namespace

CMatrix sigma_minus() { return CMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}}); }
CMatrix sigma_plus() { return CMatrix::from_rows({{0.0, 0.0}, {1.0, 0.0}}); }
CMatrix spin_z() { return CMatrix::from_rows({{-0.5, 0.0}, {0.0, 0.5}}); }

CMatrix annihilation(int n_max) {
  CMatrix a(field_dim(n_max), field_dim(n_max));
  for (int k = 1; k <= n_max; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

CMatrix build_hamiltonian(const ModelParams& p, int n_max) {
  p.validate();
  require_truncation(p, n_max);

  const CMatrix i2 = CMatrix::identity(2);
  const CMatrix ifield = CMatrix::identity(field_dim(n_max));
  const CMatrix a = annihilation(n_max);
  const CMatrix adag = a.adjoint();

  const auto on_a = [&](const CMatrix& op) { return kron(kron(op, i2), ifield); };
  const auto on_b = [&](const CMatrix& op) { return kron(kron(i2, op), ifield); };
  const CMatrix field_a = kron(kron(i2, i2), a);
  const CMatrix field_adag = kron(kron(i2, i2), adag);

  const CMatrix s1m = on_a(sigma_minus());
  const CMatrix s2m = on_b(sigma_minus());
  const CMatrix s1p = on_a(sigma_plus());
  const CMatrix s2p = on_b(sigma_plus());

  CMatrix h = p.omega * (on_a(spin_z()) + on_b(spin_z()));
  h += p.omega * (field_adag * field_a);
  h += p.g * (field_adag * (s1m + s2m) + field_a * (s1p + s2p));
  h += p.big_omega * (s1p * s2m + s2p * s1m);
  return h;
}

CMatrix excitation_operator(int n_max) {
  const std::size_t fd = field_dim(n_max);
  CMatrix k(4 * fd, 4 * fd);
  for (std::size_t atoms = 0; atoms < 4; ++atoms) {
    const int excited = static_cast<int>((atoms >> 1) & 1u) + static_cast<int>(atoms & 1u);
    for (std::size_t ph = 0; ph < fd; ++ph) {
      const std::size_t idx = full_index(atoms, ph, static_cast<std::size_t>(n_max));
      k(idx, idx) = static_cast<double>(ph) + (excited - 1);
    }
  }
  return k;
}

CMatrix initial_state(const ModelParams& p, int n_max) {
  p.validate();
  require_truncation(p, n_max);
  const std::size_t nm = static_cast<std::size_t>(n_max);
  const std::size_t n = static_cast<std::size_t>(p.n);
  std::vector<Complex> psi(4 * field_dim(n_max));
  psi[full_index(atom::eg, n, nm)] = std::cos(p.theta);
  psi[full_index(atom::ge, n, nm)] = std::sin(p.theta);
  return projector(psi);
}

double population_outside_sector(const CMatrix& rho_full, int sector, int n_max) {
  const CMatrix k = excitation_operator(n_max);
  if (rho_full.rows() != k.rows() || rho_full.cols() != k.cols()) {
    throw Error(Errc::BadDimension, "population_outside_sector: dimension does not match n_max");
  }
  double outside = 0.0;
  for (std::size_t i = 0; i < k.rows(); ++i) {
    if (std::abs(k(i, i).real() - sector) > 0.25) outside += std::abs(rho_full(i, i).real());
  }
  return outside;
}

double dressed_delta(const ModelParams& p) {
  return std::sqrt(8.0 * (1.0 + 2.0 * p.n) * p.g * p.g + p.big_omega * p.big_omega);
}

EnergyGaps energy_gaps(double big_omega, double delta) {
  return {0.5 * (3.0 * big_omega - delta), 0.5 * (3.0 * big_omega + delta), delta};
}

DressedBasis dressed_basis(const ModelParams& p) {
  p.validate();
  const double n = p.n;
  const double g = p.g;
  const double w = p.big_omega;
  const double d = dressed_delta(p);

  DressedBasis b;
  b.n = p.n;
  b.delta = d;
  b.has_dark_state = p.n >= 1;

  const double c2 = 0.5 * std::sqrt((d - w) / d);
  const double c3 = 0.5 * std::sqrt((d + w) / d);
  const double s12 = 1.0 / std::sqrt(2.0);

  // Sector order: [ee(n-1)], eg(n), ge(n), gg(n+1)
  b.e1.energy = n * p.omega - w;
  b.e2.energy = 0.5 * (2.0 * n * p.omega + w - d);
  b.e3.energy = 0.5 * (2.0 * n * p.omega + w + d);
  if (b.has_dark_state) {
    b.e0.energy = n * p.omega;
    b.e0.coeffs = {-std::sqrt((1.0 + n) / (1.0 + 2.0 * n)), 0.0, 0.0, std::sqrt(n / (1.0 + 2.0 * n))};
    b.e1.coeffs = {0.0, -s12, s12, 0.0};
    b.e2.coeffs = {c2 * 4.0 * std::sqrt(n) * g / (d - w), -c2, -c2, c2 * 4.0 * std::sqrt(n + 1.0) * g / (d - w)};
    b.e3.coeffs = {c3 * 4.0 * std::sqrt(n) * g / (d + w), c3, c3, c3 * 4.0 * std::sqrt(n + 1.0) * g / (d + w)};
  } else {
    b.e1.coeffs = {-s12, s12, 0.0};
    b.e2.coeffs = {-c2, -c2, c2 * 4.0 * g / (d - w)};
    b.e3.coeffs = {c3, c3, c3 * 4.0 * g / (d + w)};
  }
  return b;
}

std::vector<std::size_t> DressedBasis::sector_indices(int n_max) const {
  const std::size_t nm = static_cast<std::size_t>(n_max);
  const std::size_t k = static_cast<std::size_t>(n);
  std::vector<std::size_t> idx;
  if (has_dark_state) idx.push_back(full_index(atom::ee, k - 1, nm));
  idx.push_back(full_index(atom::eg, k, nm));
  idx.push_back(full_index(atom::ge, k, nm));
  idx.push_back(full_index(atom::gg, k + 1, nm));
  return idx;
}

std::vector<Complex> DressedBasis::embed(const DressedState& s, int n_max) const {
  if (n_max < n + 1 || s.coeffs.size() != sector_dim()) {
    throw Error(Errc::BadDimension, "DressedBasis::embed: state does not fit the truncation");
  }
  std::vector<Complex> v(4 * field_dim(n_max));
  const auto idx = sector_indices(n_max);
  for (std::size_t i = 0; i < idx.size(); ++i) v[idx[i]] = s.coeffs[i];
  return v;
}

}  // namespace tcqed
