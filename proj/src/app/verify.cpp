#include "tcqed/app.hpp"

#include "tcqed/measures.hpp"
#include "tcqed/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>

namespace tcqed {
namespace {

constexpr double pi = std::numbers::pi;

struct Grid {
  std::vector<int> n;
  std::vector<double> gamma;
  std::vector<double> big_omega;
  std::vector<double> theta;
};

Grid battery_grid(Battery b) {
  Grid g;
  g.big_omega = {0.0, 0.5, 1.0, 5.0};
  g.theta = {0.0, pi / 8, pi / 4, 3 * pi / 4};
  if (b == Battery::Extended) {
    g.n = {0, 1, 2, 3};
    g.gamma = {0.0, 0.01, 0.1, 1.0, 10.0};
  } else {
    g.n = {0, 1, 2};
    g.gamma = {0.0, 0.1, 1.0};
  }
  return g;
}

std::vector<ModelParams> points(const Grid& grid) {
  std::vector<ModelParams> out;
  for (int n : grid.n)
    for (double gamma : grid.gamma)
      for (double w : grid.big_omega)
        for (double theta : grid.theta) {
          ModelParams p;
          p.n = n;
          p.gamma = gamma;
          p.big_omega = w;
          p.theta = theta;
          out.push_back(p);
        }
  return out;
}

double entry_deviation(const AtomPairState& x, const AtomPairState& y) {
  return std::max({std::abs(x.a1 - y.a1), std::abs(x.a2 - y.a2), std::abs(x.a3 - y.a3), std::abs(x.a5 - y.a5),
                   std::abs(x.a6 - y.a6)});
}

double min_eigenvalue(const CMatrix& m) { return hermitian_eig(hermitian_part(m)).values.front(); }

AtomPairState random_pair_state(std::mt19937_64& rng) {
  std::exponential_distribution<double> ex(1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double w[4] = {ex(rng), ex(rng), ex(rng), ex(rng)};
  const double s = w[0] + w[1] + w[2] + w[3];
  AtomPairState a;
  a.a1 = w[0] / s;
  a.a2 = w[1] / s;
  a.a5 = w[2] / s;
  a.a6 = w[3] / s;
  a.a3 = std::polar(std::sqrt(a.a2 * a.a5) * u(rng), 2.0 * pi * u(rng));
  return a;
}

class Recorder {
 public:
  void add(std::string name, double observed, double tol) {
    checks_.push_back({std::move(name), observed, tol, observed <= tol});
  }
  std::vector<CheckResult> take() { return std::move(checks_); }

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport verify(const VerifyOptions& options) {
  const Grid grid = battery_grid(options.battery);
  const auto battery = points(grid);
  const int samples = std::max(options.samples, 2);
  const double t_max = 20.0;

  double closed_vs_oracle = 0.0, measure_vs_oracle = 0.0, trace_dev = 0.0, psd_slack = 0.0, tsirelson = 0.0;
  double frozen = 0.0, sector = 0.0;
  for (const auto& p : battery) {
    const OracleSystem sys = make_oracle(p);
    const double delta = dressed_delta(p) + options.delta_perturbation;
    for (int i = 0; i < samples; ++i) {
      const double t = t_max * i / (samples - 1);
      const CMatrix full = sys.full_state(t);
      const AtomPairState exact = reduced_atoms(full, sys.field_dim());
      const AtomPairState closed = detail::atom_pair_state(p, t, delta);
      closed_vs_oracle = std::max(closed_vs_oracle, entry_deviation(closed, exact));

      const CMatrix rho = assemble_rho(exact);
      const double neg_c = negativity_closed(closed);
      const double bell_c = bell_closed(closed);
      measure_vs_oracle = std::max({measure_vs_oracle, std::abs(neg_c - negativity_generic(rho)),
                                    std::abs(bell_c - bell_generic(rho))});

      trace_dev = std::max(trace_dev, std::abs(closed.trace() - 1.0));
      psd_slack = std::max(psd_slack, -min_eigenvalue(assemble_rho(closed)));
      tsirelson = std::max(tsirelson, bell_c - kTsirelson);
      if (i % 20 == 0) sector = std::max(sector, population_outside_sector(full, p.n, sys.n_max));
      if (std::abs(p.theta - 3 * pi / 4) < 1e-15) {
        frozen = std::max({frozen, std::abs(neg_c - 1.0), std::abs(bell_c - kTsirelson)});
      }
    }
  }

  Recorder rec;
  rec.add("closed form vs spectral oracle, max |a_i| deviation", closed_vs_oracle, 1e-9);
  rec.add("closed form vs spectral oracle, negativity and Bell", measure_vs_oracle, 1e-9);
  rec.add("frozen state theta=3pi/4: negativity 1, Bell 2sqrt2", frozen, 1e-10);
  rec.add("trace a1+a2+a5+a6 = 1", trace_dev, 1e-12);
  rec.add("reduced state positive semidefinite (slack)", psd_slack, 1e-9);
  rec.add("Bell value within Tsirelson bound (excess)", std::max(0.0, tsirelson), 1e-9);
  rec.add("population outside the K=n sector", sector, 1e-12);

  {
    double dev = 0.0;
    for (int i = 0; i < 100; ++i) {
      ModelParams p;
      p.theta = pi * i / 100.0;
      const AtomPairState a = atom_pair_state(p, 0.0);
      const double s = std::sin(2.0 * p.theta);
      dev = std::max({dev, std::abs(negativity_closed(a) - std::abs(s)),
                      std::abs(bell_closed(a) - 2.0 * std::sqrt(1.0 + s * s))});
    }
    rec.add("t=0 anchors: |sin 2theta| and 2 sqrt(1 + sin^2 2theta)", dev, 1e-12);
  }

  {
    std::mt19937_64 rng(20240611);
    double neg = 0.0, bell = 0.0;
    for (int i = 0; i < 2000; ++i) {
      const AtomPairState a = random_pair_state(rng);
      const CMatrix rho = assemble_rho(a);
      neg = std::max(neg, std::abs(negativity_closed(a) - negativity_generic(rho)));
      bell = std::max(bell, std::abs(bell_closed(a) - bell_generic(rho)));
    }
    rec.add("negativity closed vs partial-transpose spectrum (random states)", neg, 1e-10);
    rec.add("Bell closed vs correlation-matrix spectrum (random states)", bell, 1e-10);
  }

  {
    double series = 0.0, rk4 = 0.0, trunc = 0.0;
    const std::vector<ModelParams> probes = [] {
      std::vector<ModelParams> v(3);
      v[0].big_omega = 1.0, v[0].gamma = 0.1, v[0].n = 0, v[0].theta = 0.0;
      v[1].big_omega = 0.5, v[1].gamma = 1.0, v[1].n = 1, v[1].theta = pi / 8;
      v[2].big_omega = 5.0, v[2].gamma = 0.1, v[2].n = 2, v[2].theta = pi / 4;
      return v;
    }();
    for (const auto& p : probes) {
      const OracleSystem sys = make_oracle(p);
      const double t = 1.5;
      const CMatrix spectral = sys.full_state(t);
      series = std::max(series, max_abs_diff(spectral, series_evolve(sys.hamiltonian, sys.rho0, p.gamma, t)));
      rk4 = std::max(rk4, max_abs_diff(spectral, rk4_evolve(sys.hamiltonian, sys.rho0, p.gamma, t,
                                                             std::min(kDefaultRk4Step, rk4_max_step(sys.hamiltonian, p.gamma)))));
      const OracleSystem wide = make_oracle(p, p.n + 4);
      trunc = std::max(trunc, entry_deviation(sys.atoms(7.0), wide.atoms(7.0)));
    }
    rec.add("spectral vs k-series evolution", series, 1e-10);
    rec.add("spectral vs RK4 evolution", rk4, 1e-6);
    rec.add("truncation n+2 vs n+4", trunc, 1e-10);
  }

  return VerifyReport{rec.take()};
}

void print_report(std::ostream& out, const VerifyReport& report) {
  for (const auto& c : report.checks) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "max=%.3e tol=%.1e", c.observed, c.tolerance);
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << "  " << buf << '\n';
  }
  out << (report.all_passed() ? "all checks passed" : "verification FAILED") << '\n';
}

}  // namespace tcqed
