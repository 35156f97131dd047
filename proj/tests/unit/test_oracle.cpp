#include "tcqed/closedform.hpp"
#include "tcqed/error.hpp"
#include "tcqed/model.hpp"
#include "tcqed/oracle.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace tcqed;
using tcqed::testing::max_entry_deviation;
using tcqed::testing::pi;

namespace {

ModelParams params(double w, int n, double theta, double gamma) {
  ModelParams p;
  p.big_omega = w;
  p.n = n;
  p.theta = theta;
  p.gamma = gamma;
  return p;
}

}  // namespace

TEST_CASE("spectral propagation at t = 0 returns rho(0)") {
  const OracleSystem o = make_oracle(params(1.0, 1, 0.4, 0.3));
  CHECK(max_abs_diff(o.full_state(0.0), o.rho0) < 1e-13);
}

TEST_CASE("gamma = 0 is unitary") {
  const OracleSystem o = make_oracle(params(0.5, 2, pi / 8, 0.0));
  for (double t : {0.5, 3.0, 17.0}) {
    const CMatrix rho = o.full_state(t);
    CHECK(std::abs(purity(rho) - 1.0) < 1e-12);
    CHECK(std::abs(rho.trace() - 1.0) < 1e-12);
  }
}

TEST_CASE("full-state purity never increases when gamma > 0") {
  const OracleSystem o = make_oracle(params(1.0, 1, 0.0, 0.2));
  double previous = 1.0 + 1e-12;
  for (int i = 0; i <= 200; ++i) {
    const double p = purity(o.full_state(0.1 * i));
    CHECK(p <= previous + 1e-12);
    previous = p;
  }
}

TEST_CASE("evolution stays inside the initial excitation sector") {
  for (int n : {0, 1, 3}) {
    const OracleSystem o = make_oracle(params(5.0, n, pi / 8, 0.1), n + 4);
    for (double t : {1.0, 9.0}) CHECK(population_outside_sector(o.full_state(t), n, o.n_max) < 1e-12);
  }
}

TEST_CASE("series and spectral agree") {
  const ModelParams p = params(1.0, 1, 0.3, 0.1);
  const OracleSystem o = make_oracle(p);
  const double t = 1.5;
  const CMatrix spectral = o.full_state(t);
  CHECK(max_abs_diff(series_evolve(o.hamiltonian, o.rho0, p.gamma, t), spectral) <= 1e-10);

  // truncation error shrinks monotonically with k_max
  double previous = 1.0;
  for (std::size_t k : {0u, 1u, 2u, 4u, 8u}) {
    const double err = max_abs_diff(series_evolve(o.hamiltonian, o.rho0, p.gamma, t, k), spectral);
    CHECK(err < previous);
    previous = err;
  }
}

TEST_CASE("series refuses an unconverged tail") {
  const ModelParams p = params(5.0, 3, 0.0, 10.0);
  const OracleSystem o = make_oracle(p);
  try {
    series_terms_required(o.propagator.decomposition, p.gamma, 50.0);
    FAIL("expected TailNotConverged");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TailNotConverged);
  }
}

TEST_CASE("RK4 reproduces Rabi oscillation of |eg,0>") {
  // W = 0, theta = 0: P(eg) = (1 + cos(sqrt2 t))^2 / 4
  const ModelParams p = params(0.0, 0, 0.0, 0.0);
  const OracleSystem o = make_oracle(p);
  const std::size_t eg = full_index(atom::eg, 0, o.n_max);
  Rk4Evolver rk(o.hamiltonian, o.rho0, 0.0, kDefaultRk4Step);
  for (double t : {0.5, 1.0, 2.0, 4.0}) {
    const double expected = std::pow(1.0 + std::cos(std::sqrt(2.0) * t), 2) / 4.0;
    CHECK(std::abs(rk.advance_to(t)(eg, eg).real() - expected) < 1e-9);
  }
}

TEST_CASE("RK4 and spectral agree with decoherence") {
  const ModelParams p = params(1.0, 0, 0.0, 0.1);
  const OracleSystem o = make_oracle(p);
  const CMatrix rk = rk4_evolve(o.hamiltonian, o.rho0, p.gamma, 10.0, 1e-3);
  CHECK(max_abs_diff(rk, o.full_state(10.0)) <= 1e-6);
  CHECK(hermiticity_defect(rk) == 0.0);
}

TEST_CASE("RK4 step guard") {
  const OracleSystem o = make_oracle(params(5.0, 3, 0.0, 1.0));
  const double limit = rk4_max_step(o.hamiltonian, 1.0);
  CHECK(limit < 1e-3);
  CHECK_THROWS_AS(Rk4Evolver(o.hamiltonian, o.rho0, 1.0, 2.0 * limit), Error);
  CHECK_NOTHROW(Rk4Evolver(o.hamiltonian, o.rho0, 1.0, limit));
}

TEST_CASE("reduced_atoms") {
  SUBCASE("theta = 0, W = 0 builds coherence from a product state") {
    const OracleSystem o = make_oracle(params(0.0, 0, 0.0, 0.0));
    const AtomPairState a = o.atoms(pi / (2.0 * std::sqrt(2.0)));
    CHECK(std::abs(a.a3) > 0.1);
    CHECK(std::abs(a.trace() - 1.0) < 1e-12);
  }
  SUBCASE("matches the closed form") {
    const ModelParams p = params(0.5, 2, pi / 8, 0.1);
    const OracleSystem o = make_oracle(p);
    for (double t : {0.0, 2.0, 11.0}) CHECK(max_entry_deviation(o.atoms(t), atom_pair_state(p, t)) < 1e-10);
  }
  SUBCASE("rejects coherences outside the X shape") {
    CMatrix rho = CMatrix::identity(12) * Complex{1.0 / 12.0};
    rho(0, 3 * 3) = rho(3 * 3, 0) = 0.01;  // |gg,0><ee,0|
    try {
      reduced_atoms(rho, 3);
      FAIL("expected UnexpectedCoherence");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::UnexpectedCoherence);
    }
  }
}

TEST_CASE("truncation beyond n + 2 does not change the atoms") {
  for (int n : {0, 2}) {
    const ModelParams p = params(1.0, n, 0.3, 0.1);
    const OracleSystem small = make_oracle(p, n + 2);
    const OracleSystem big = make_oracle(p, n + 4);
    for (double t : {0.7, 6.0}) CHECK(max_entry_deviation(small.atoms(t), big.atoms(t)) < 1e-10);
  }
}
