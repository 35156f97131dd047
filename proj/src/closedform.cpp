#include "tcqed/closedform.hpp"

#include "tcqed/error.hpp"

#include <cmath>
#include <numbers>

namespace tcqed {
namespace {

constexpr double kZeroGap = 1e-12;

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw Error(Errc::InvalidArgument, "time must be finite and >= 0");
}

// Damped oscillation factor of one coherence.
struct Mode {
  double decay;  // exp(-gap^2 gamma t / 2)
  double cos_t;  // cos(gap t)
  double sin_t;  // sin(gap t)
};

Mode mode(double gap, double gamma, double t) {
  return {std::exp(-0.5 * gap * gap * gamma * t), std::cos(gap * t), std::sin(gap * t)};
}

Mode stationary_mode(double gap, double g) {
  if (std::abs(gap) <= kZeroGap * g) return {1.0, 1.0, 0.0};
  return {0.0, 0.0, 0.0};
}

AtomPairState assemble(const ModelParams& p, double delta, const Mode& m21, const Mode& m31, const Mode& m32) {
  const double s2 = std::sin(2.0 * p.theta);
  const double c2 = std::cos(2.0 * p.theta);
  const double n = p.n;
  const double g2 = p.g * p.g;
  const double d2 = delta * delta;
  const double lo = (delta - p.big_omega) / delta;
  const double hi = (delta + p.big_omega) / delta;

  const double breathing = m32.decay * m32.cos_t;
  const double common = (1.0 + s2) * (1.0 + 2.0 * n) * g2 / d2 * (-1.0 + breathing);
  const double r21 = 0.25 * c2 * lo * m21.decay;
  const double r31 = 0.25 * c2 * hi * m31.decay;

  AtomPairState a;
  a.a1 = (1.0 + s2) * 2.0 * (n + 1.0) * g2 / d2 * (1.0 - breathing);
  a.a2 = 0.5 + common - r21 * m21.cos_t - r31 * m31.cos_t;
  a.a3 = Complex{0.5 * s2 + common, -(r21 * m21.sin_t + r31 * m31.sin_t)};
  a.a5 = 0.5 + common + r21 * m21.cos_t + r31 * m31.cos_t;
  // Trace closure fixes the |ee> population as (1 - breathing), not
  // (1 - decay) * cos.
  a.a6 = (1.0 + s2) * 2.0 * n * g2 / d2 * (1.0 - breathing);
  return a;
}

}  // namespace

EvolutionCoefficients coefficients(const ModelParams& p, double t) {
  p.validate();
  require_time(t);
  const double s2 = std::sin(2.0 * p.theta);
  const double c2 = std::cos(2.0 * p.theta);
  const double d = dressed_delta(p);
  const EnergyGaps gap = energy_gaps(p.big_omega, d);
  const auto phase = [&](double e) {
    return std::exp(-0.5 * e * e * p.gamma * t) * Complex{std::cos(e * t), std::sin(e * t)};
  };
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

  EvolutionCoefficients c;
  c.c1 = 0.5 * (1.0 - s2);
  c.c2 = 0.25 * (1.0 + s2) * (d - p.big_omega) / d;
  c.c3 = 0.25 * (1.0 + s2) * (d + p.big_omega) / d;
  c.c4 = 0.5 * inv_sqrt2 * c2 * std::sqrt((d - p.big_omega) / d) * phase(gap.e21);
  c.c6 = -0.5 * inv_sqrt2 * c2 * std::sqrt((d + p.big_omega) / d) * phase(gap.e31);
  // <E2|psi><psi|E3> is negative: E2 enters the atomic symmetric state with a
  // minus sign and E3 with a plus sign.
  c.c8 = -inv_sqrt2 * (1.0 + s2) * p.g * std::sqrt(1.0 + 2.0 * p.n) / d * phase(gap.e32);
  return c;
}

CMatrix evolved_state(const ModelParams& p, double t, int n_max) {
  const EvolutionCoefficients c = coefficients(p, t);
  if (n_max < p.n + 2) throw Error(Errc::TruncationTooSmall, "evolved_state: n_max must be at least n+2");
  const DressedBasis b = dressed_basis(p);
  const auto v1 = b.embed(b.e1, n_max);
  const auto v2 = b.embed(b.e2, n_max);
  const auto v3 = b.embed(b.e3, n_max);

  CMatrix rho(v1.size(), v1.size());
  const auto add = [&](const std::vector<Complex>& left, const std::vector<Complex>& right, Complex w) {
    for (std::size_t i = 0; i < left.size(); ++i) {
      if (left[i] == Complex{}) continue;
      for (std::size_t j = 0; j < right.size(); ++j) rho(i, j) += w * left[i] * std::conj(right[j]);
    }
  };
  add(v1, v1, c.c1);
  add(v2, v2, c.c2);
  add(v3, v3, c.c3);
  add(v1, v2, c.c4);
  add(v2, v1, std::conj(c.c4));
  add(v1, v3, c.c6);
  add(v3, v1, std::conj(c.c6));
  add(v2, v3, c.c8);
  add(v3, v2, std::conj(c.c8));
  return rho;
}

AtomPairState detail::atom_pair_state(const ModelParams& p, double t, double delta) {
  p.validate();
  require_time(t);
  const EnergyGaps gap = energy_gaps(p.big_omega, delta);
  return assemble(p, delta, mode(gap.e21, p.gamma, t), mode(gap.e31, p.gamma, t), mode(gap.e32, p.gamma, t));
}

AtomPairState atom_pair_state(const ModelParams& p, double t) {
  return detail::atom_pair_state(p, t, dressed_delta(p));
}

AtomPairState stationary_state(const ModelParams& p) {
  p.validate();
  if (p.gamma == 0.0) throw Error(Errc::NotDecaying, "stationary_state requires gamma > 0");
  const double d = dressed_delta(p);
  const EnergyGaps gap = energy_gaps(p.big_omega, d);
  return assemble(p, d, stationary_mode(gap.e21, p.g), stationary_mode(gap.e31, p.g),
                  stationary_mode(gap.e32, p.g));
}

double stationary_negativity_printed(const ModelParams& p) {
  p.validate();
  const double g2 = p.g * p.g;
  const double w2 = p.big_omega * p.big_omega;
  const double m = 1.0 + 2.0 * p.n;
  const double sc = std::pow(std::sin(p.theta) + std::cos(p.theta), 2);
  const double inner = -2.0 * g2 + 6.0 * (g2 + w2) * std::sin(2.0 * p.theta);
  const double num = -2.0 * m * g2 * sc + std::sqrt(4.0 * g2 * g2 * sc * sc + m * m * inner * inner);
  return num / (8.0 * m * g2 + w2);
}

}  // namespace tcqed
