#include "tcqed/closedform.hpp"
#include "tcqed/error.hpp"
#include "tcqed/model.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace tcqed;
using tcqed::testing::pi;

namespace {

ModelParams params(double w, int n, double theta = 0.0, double omega = 0.0) {
  ModelParams p;
  p.big_omega = w;
  p.n = n;
  p.theta = theta;
  p.omega = omega;
  return p;
}

Complex inner(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

std::vector<Complex> apply(const CMatrix& m, const std::vector<Complex>& v) {
  std::vector<Complex> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

std::vector<Complex> initial_vector(const ModelParams& p, int n_max) {
  std::vector<Complex> psi(4 * (n_max + 1));
  psi[full_index(atom::eg, p.n, n_max)] = std::cos(p.theta);
  psi[full_index(atom::ge, p.n, n_max)] = std::sin(p.theta);
  return psi;
}

}  // namespace

TEST_CASE("Hamiltonian matrix elements") {
  const ModelParams p = params(0.0, 0);
  const CMatrix h = build_hamiltonian(p, 2);
  CHECK(h(full_index(atom::eg, 0, 2), full_index(atom::gg, 1, 2)) == Complex(1.0));
  CHECK(hermiticity_defect(h) == 0.0);

  for (int n : {0, 1, 3}) {
    const CMatrix hw = build_hamiltonian(params(0.7, n), n + 2);
    CHECK(hw(full_index(atom::eg, n, n + 2), full_index(atom::ge, n, n + 2)) == Complex(0.7));
  }
}

TEST_CASE("Hamiltonian commutes with the excitation number") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 30; ++trial) {
    ModelParams p;
    p.g = 0.5 + std::abs(u(rng));
    p.omega = u(rng);
    p.big_omega = u(rng);
    p.n = trial % 4;
    const int n_max = p.n + 2 + trial % 3;
    const CMatrix h = build_hamiltonian(p, n_max);
    const CMatrix k = excitation_operator(n_max);
    CHECK(max_abs_diff(h * k, k * h) <= 1e-12);
  }
}

TEST_CASE("K = 1 sector of the full Hamiltonian reproduces the dressed energies") {
  const ModelParams p = params(1.0, 1);
  const CMatrix h = build_hamiltonian(p, 3);
  const DressedBasis b = dressed_basis(p);
  const auto idx = b.sector_indices(3);
  CMatrix block(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) block(i, j) = h(idx[i], idx[j]);
  const auto e = hermitian_eig(block);
  std::vector<double> expected{b.e0.energy, b.e1.energy, b.e2.energy, b.e3.energy};
  std::sort(expected.begin(), expected.end());
  for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(e.values[k] - expected[k]) < 1e-12);
}

TEST_CASE("dressed_basis closed values") {
  SUBCASE("g=1, W=1, n=0") {
    const DressedBasis b = dressed_basis(params(1.0, 0));
    CHECK(b.delta == doctest::Approx(3.0).epsilon(1e-15));
    CHECK_FALSE(b.has_dark_state);
    CHECK(b.e1.energy == doctest::Approx(-1.0));
    CHECK(b.e2.energy == doctest::Approx(-1.0));
    CHECK(b.e3.energy == doctest::Approx(2.0));
  }
  SUBCASE("W = 0 gives equal |eg>,|ge> weights") {
    const DressedBasis b = dressed_basis(params(0.0, 0));
    CHECK(b.delta == doctest::Approx(2.0 * std::sqrt(2.0)));
    CHECK(b.e2.energy == doctest::Approx(-std::sqrt(2.0)));
    CHECK(b.e3.energy == doctest::Approx(std::sqrt(2.0)));
    CHECK(b.e2.coeffs[0] == doctest::Approx(-0.5));
    CHECK(b.e2.coeffs[1] == doctest::Approx(-0.5));
    CHECK(b.e3.coeffs[0] == doctest::Approx(0.5));
    CHECK(b.e3.coeffs[1] == doctest::Approx(0.5));
  }
}

TEST_CASE("dressed states are orthonormal eigenvectors of the full Hamiltonian") {
  for (int n : {0, 1, 2, 4})
    for (double w : {-2.0, 0.0, 0.5, 1.0, 5.0})
      for (double omega : {0.0, 1.3}) {
        const ModelParams p = params(w, n, 0.0, omega);
        const int n_max = n + 2;
        const CMatrix h = build_hamiltonian(p, n_max);
        const DressedBasis b = dressed_basis(p);
        std::vector<const DressedState*> states{&b.e1, &b.e2, &b.e3};
        if (b.has_dark_state) states.push_back(&b.e0);
        for (const auto* s : states) {
          const auto v = b.embed(*s, n_max);
          const auto hv = apply(h, v);
          double residual = 0.0;
          for (std::size_t i = 0; i < v.size(); ++i) residual = std::max(residual, std::abs(hv[i] - s->energy * v[i]));
          CHECK(residual <= 1e-10);
          for (const auto* r : states) {
            const Complex ov = inner(b.embed(*r, n_max), v);
            CHECK(std::abs(ov - (r == s ? 1.0 : 0.0)) <= 1e-12);
          }
        }
      }
}

TEST_CASE("overlaps with the initial state reproduce C1, C2, C3") {
  for (int n : {0, 1, 3})
    for (double w : {0.0, 0.5, 5.0})
      for (int i = 0; i <= 24; ++i) {
        const ModelParams p = params(w, n, 2.0 * pi * i / 24.0);
        const int n_max = n + 2;
        const DressedBasis b = dressed_basis(p);
        const auto psi = initial_vector(p, n_max);
        const EvolutionCoefficients c = coefficients(p, 0.0);
        const Complex o1 = inner(b.embed(b.e1, n_max), psi);
        CHECK(std::abs(o1 - (std::sin(p.theta) - std::cos(p.theta)) / std::sqrt(2.0)) <= 1e-12);
        CHECK(std::abs(std::norm(o1) - c.c1) <= 1e-12);
        CHECK(std::abs(std::norm(inner(b.embed(b.e2, n_max), psi)) - c.c2) <= 1e-12);
        CHECK(std::abs(std::norm(inner(b.embed(b.e3, n_max), psi)) - c.c3) <= 1e-12);
        if (b.has_dark_state) CHECK(std::abs(inner(b.embed(b.e0, n_max), psi)) <= 1e-15);
      }
}

TEST_CASE("initial_state") {
  SUBCASE("theta = 0 is |eg><eg| (x) |n><n|") {
    const CMatrix rho = initial_state(params(1.0, 1), 3);
    const std::size_t i = full_index(atom::eg, 1, 3);
    CHECK(rho(i, i) == Complex(1.0));
    CHECK(std::abs(rho.trace() - 1.0) < 1e-15);
    CHECK(purity(rho) == doctest::Approx(1.0));
  }
  SUBCASE("theta = pi/4 is the symmetric Bell state") {
    const CMatrix rho = initial_state(params(1.0, 0, pi / 4), 2);
    const std::size_t a = full_index(atom::eg, 0, 2), b = full_index(atom::ge, 0, 2);
    for (auto [i, j] : {std::pair{a, a}, std::pair{a, b}, std::pair{b, a}, std::pair{b, b}})
      CHECK(std::abs(rho(i, j) - 0.5) < 1e-15);
  }
  SUBCASE("theta = 3pi/4 is the antisymmetric dressed state E1") {
    const ModelParams p = params(1.0, 2, 3 * pi / 4);
    const DressedBasis b = dressed_basis(p);
    const CMatrix e1 = projector(b.embed(b.e1, 4));
    CHECK(max_abs_diff(initial_state(p, 4), e1) < 1e-15);
  }
  CHECK_THROWS_AS(initial_state(params(1.0, 2), 3), Error);
}

TEST_CASE("parameter validation and truncation") {
  ModelParams p;
  p.g = 0.0;
  CHECK_THROWS_AS(p.validate(), Error);
  p.g = 1.0;
  p.gamma = -0.1;
  CHECK_THROWS_AS(p.validate(), Error);
  p.gamma = 0.0;
  p.n = -1;
  CHECK_THROWS_AS(p.validate(), Error);

  try {
    build_hamiltonian(params(1.0, 2), 3);
    FAIL("expected TruncationTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TruncationTooSmall);
  }
}
