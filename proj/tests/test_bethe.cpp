#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "bethevqe/bethe.hpp"
#include "bethevqe/bethe_roots.hpp"
#include "bethevqe/pauli.hpp"
#include "bethevqe/xxz.hpp"
#include "oracle.hpp"

using namespace bethevqe;

namespace {

// Places a 4x4 operator on (hi, lo) of an n-qubit register, basis loop only.
oracle::Mat place(const Matrix4c& op, int hi, int lo, int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  oracle::Mat out = oracle::Mat::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const int in = static_cast<int>(((col >> hi) & 1) * 2 + ((col >> lo) & 1));
    for (int o = 0; o < 4; ++o) {
      Eigen::Index row = col & ~((Eigen::Index{1} << hi) | (Eigen::Index{1} << lo));
      row |= static_cast<Eigen::Index>(o >> 1) << hi;
      row |= static_cast<Eigen::Index>(o & 1) << lo;
      out(row, col) += op(o, in);
    }
  }
  return out;
}

// Auxiliary space is qubit n; chain site k is qubit n - k. R_{01} acts first.
oracle::Mat dense_monodromy(Complex v, double eta, int n) {
  oracle::Mat t = oracle::Mat::Identity(Eigen::Index{2} << n, Eigen::Index{2} << n);
  for (int k = 1; k <= n; ++k) t = place(r_matrix(v, eta), n, n - k, n + 1) * t;
  return t;
}

double max_abs_diff(const oracle::Mat& a, const oracle::Mat& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(RMatrix, ProportionalToPermutationAtHalfEta) {
  const double eta = 0.9;
  const auto r = r_matrix(Complex(0.0, eta / 2), eta);
  Matrix4c perm = Matrix4c::Zero();
  perm(0, 0) = perm(3, 3) = perm(1, 2) = perm(2, 1) = 1.0;
  EXPECT_LT((r - kI * std::sinh(eta) * perm).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(RMatrix, EntryAtZero) {
  const auto r = r_matrix(0.0, 1.0);
  EXPECT_LT(std::abs(r(1, 1) - std::sin(Complex(0.0, -0.5))), 1e-15);
  EXPECT_LT(std::abs(r(0, 0) - kI * std::sinh(0.5)), 1e-15);
}

TEST(YangBaxter, FixedPoints) {
  EXPECT_LT(check_yang_baxter(0.3, -0.7, 1.0), 1e-12);
  EXPECT_LT(check_yang_baxter(0.4, 0.4, 1.0), 1e-12);
  EXPECT_LT(check_yang_baxter(Complex(0.1, 0.2), 0.4, 0.5), 1e-12);
}

TEST(YangBaxter, IndependentEmbedding) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int i = 0; i < 10; ++i) {
    const double eta = 1.0;
    const Complex v1(u(rng), u(rng) * 0.3), v2(u(rng), u(rng) * 0.3);
    const auto r12 = place(r_matrix(v1 - v2 + kI * (eta / 2), eta), 2, 1, 3);
    const auto r13 = place(r_matrix(v1, eta), 2, 0, 3);
    const auto r23 = place(r_matrix(v2, eta), 1, 0, 3);
    EXPECT_LT(max_abs_diff(r12 * r13 * r23, r23 * r13 * r12), 1e-12);
    EXPECT_LT(check_yang_baxter(v1, v2, eta), 1e-12);
  }
}

class MonodromySizes : public ::testing::TestWithParam<int> {};

TEST_P(MonodromySizes, BlocksMatchDenseProduct) {
  const int n = GetParam();
  const Complex v(0.37, 0.11);
  const double eta = 0.8;
  const auto t = dense_monodromy(v, eta, n);
  const Eigen::Index d = Eigen::Index{1} << n;
  const auto m = monodromy(v, eta, n);
  EXPECT_LT(max_abs_diff(m.a, t.block(0, 0, d, d)), 1e-13);
  EXPECT_LT(max_abs_diff(m.b, t.block(0, d, d, d)), 1e-13);
  EXPECT_LT(max_abs_diff(m.c, t.block(d, 0, d, d)), 1e-13);
  EXPECT_LT(max_abs_diff(m.d, t.block(d, d, d, d)), 1e-13);
}

TEST_P(MonodromySizes, MatrixFreeSweepMatchesDense) {
  const int n = GetParam();
  std::mt19937_64 rng(n);
  const auto s = oracle::random_state(n, rng);
  const Complex v(-0.2, 0.05);
  const auto m = monodromy(v, 1.1, n);
  const auto x = oracle::to_vector(s);
  const std::pair<MonodromyBlock, const ComplexMatrix*> blocks[] = {
      {MonodromyBlock::A, &m.a}, {MonodromyBlock::B, &m.b},
      {MonodromyBlock::C, &m.c}, {MonodromyBlock::D, &m.d}};
  for (const auto& [block, mat] : blocks) {
    const auto y = oracle::to_vector(apply_monodromy_block(block, v, 1.1, s));
    EXPECT_LT((y - *mat * x).norm(), 1e-13);
  }
  const auto ty = oracle::to_vector(apply_transfer(v, 1.1, s));
  EXPECT_LT((ty - transfer_matrix(v, 1.1, n) * x).norm(), 1e-13);
}

TEST_P(MonodromySizes, CreationOperatorAlgebra) {
  const int n = GetParam();
  const auto sz = oracle::sz_operator(n);
  const auto b = monodromy(0.45, 1.0, n).b;
  EXPECT_LT(max_abs_diff(sz * b - b * sz, -b), 1e-10);
  EXPECT_LT(b.row(0).cwiseAbs().maxCoeff(), 1e-10);
}

TEST_P(MonodromySizes, TransferMatricesCommute) {
  const int n = GetParam();
  std::mt19937_64 rng(10 + n);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int i = 0; i < 3; ++i) {
    const auto t1 = transfer_matrix(u(rng), 1.0, n);
    const auto t2 = transfer_matrix(u(rng), 1.0, n);
    EXPECT_LT(max_abs_diff(t1 * t2, t2 * t1), 1e-9);
  }
  const auto h = oracle::xxz_hamiltonian(n, 1.0);
  const auto t = transfer_matrix(0.3, 1.0, n);
  EXPECT_LT(max_abs_diff(t * h, h * t), 1e-9);
}

INSTANTIATE_TEST_SUITE_P(Sites, MonodromySizes, ::testing::Values(1, 2, 3, 4, 5, 6));

TEST(Monodromy, SingleSiteCreation) {
  // One site: B moves |up> to |down> with weight i sinh(eta).
  const auto b = monodromy(0.2, 1.0, 1).b;
  EXPECT_LT(std::abs(b(1, 0) - kI * std::sinh(1.0)), 1e-14);
  EXPECT_LT(std::abs(b(0, 0)) + std::abs(b(0, 1)) + std::abs(b(1, 1)), 1e-14);
}

TEST(Monodromy, DenseCap) {
  EXPECT_THROW(monodromy(0.1, 1.0, kMaxDenseSites + 1), DomainError);
}

TEST(GeneratingFunction, ReproducesHamiltonian) {
  for (int n : {2, 3, 4}) {
    const auto from_t = hamiltonian_from_transfer(n, 1.0, 1e-5);
    const auto h = oracle::xxz_hamiltonian(n, 1.0);
    EXPECT_LT(traceless_distance(from_t, h), 1e-6) << "N=" << n;
    EXPECT_LT(std::abs(identity_offset(from_t, h)), 1e-6) << "N=" << n;
    EXPECT_LT(max_abs(from_t - h), 1e-5) << "N=" << n;
  }
  EXPECT_THROW(hamiltonian_from_transfer(2, 1.0, 0.5), std::invalid_argument);
}

TEST(Rapidity, DefiningRelation) {
  for (double eta : {0.5, 1.0, 2.0}) {
    EXPECT_NEAR(momentum_to_rapidity(kPi, eta), 0.0, 1e-15);
    for (double p : {0.3, kPi / 2, 2.0, -1.0, kPi}) {
      const double v = momentum_to_rapidity(p, eta);
      EXPECT_LT(std::abs(momentum_ratio(v, eta) - std::polar(1.0, -p)), 1e-12);
    }
  }
  EXPECT_NEAR(momentum_to_rapidity(kPi / 2, 1.0), std::atan(-std::tanh(0.5)), 1e-15);
}

TEST(Rapidity, RoundTrip) {
  for (int k = 0; k < 100; ++k) {
    const double p = -kPi + 2 * kPi * (k + 0.5) / 100;
    const double back = rapidity_to_momentum(momentum_to_rapidity(p, 0.7), 0.7);
    EXPECT_NEAR(std::remainder(back - p, 2 * kPi), 0.0, 1e-12);
  }
}

TEST(BetheVector, OneMagnonMatchesTrialStates) {
  for (double p : {0.0, 0.4, 1.3, -2.2}) {
    EXPECT_LT(oracle::phase_distance(one_magnon_state(2, p, 1.0), oracle::trial_state_n2(p)),
              1e-12);
    EXPECT_LT(oracle::phase_distance(one_magnon_state(4, p, 1.0), oracle::trial_state_n4(p)),
              1e-12);
  }
}

TEST(BetheVector, MagnetizationOfRandomRoots) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1.4, 1.4);
  const auto sz = oracle::sz_operator(4);
  for (int i = 0; i < 5; ++i) {
    const auto roots = BetheRoots::from_rapidities(4, 1.0, {u(rng), u(rng)});
    const auto psi = oracle::to_vector(bethe_state(roots));
    EXPECT_LT((sz * psi - (4 / 2.0 - 2) * psi).norm(), 1e-10);
  }
}

TEST(BetheVector, RejectsBadRoots) {
  EXPECT_THROW(BetheRoots::from_rapidities(4, 1.0, {0.1, 0.1}), std::invalid_argument);
  EXPECT_THROW(BetheRoots::from_rapidities(4, 1.0, {0.1, 0.2, 0.3}), std::invalid_argument);
}

TEST(BetheEquations, OneMagnonReduction) {
  const auto r2 = bethe_residuals(BetheRoots::from_momenta(2, 1.0, {0.0}));
  const auto r4 = bethe_residuals(BetheRoots::from_momenta(4, 1.0, {kPi / 2}));
  EXPECT_LT(r2[0], 1e-12);
  EXPECT_LT(r4[0], 1e-12);
  const auto off = bethe_residuals(BetheRoots::from_momenta(4, 1.0, {0.77}));
  EXPECT_GT(off[0], 1e-3);
  // Eight-digit pi/2 only satisfies the one-magnon equation to about 1e-7.
  const auto truncated = bethe_residuals(BetheRoots::from_momenta(4, 1.0, {1.5707963}));
  EXPECT_LT(truncated[0], 1e-6);
}

TEST(BetheEnergy, OneMagnon) {
  EXPECT_NEAR(bethe_energy(BetheRoots::from_momenta(2, 1.0, {0.0})), 0.54308063, 5e-9);
  EXPECT_NEAR(bethe_energy(BetheRoots::from_momenta(2, 1.0, {kPi})), 2.54308063, 5e-9);
  EXPECT_NEAR(magnon_energy_normalization(0.8), std::sinh(0.8) * std::sinh(0.8), 1e-15);
}

TEST(BetheSolver, TwoSitesTopLevel) {
  const auto sol = solve_bethe_real(2, 1, 1.0, default_quantum_numbers(2, 1));
  ASSERT_EQ(sol.roots.momenta().size(), 1u);
  EXPECT_NEAR(std::abs(sol.roots.momenta()[0]), kPi, 1e-10);
  EXPECT_NEAR(sol.energy, 2.54308063, 5e-9);
}

TEST(BetheSolver, QuantumNumberValidation) {
  EXPECT_THROW(solve_bethe_real(4, 2, 1.0, {0.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(solve_bethe_real(4, 2, 1.0, {0.5, 0.5}), std::invalid_argument);
  EXPECT_THROW(solve_bethe_real(4, 2, 1.0, {0.5}), std::invalid_argument);
  EXPECT_THROW(solve_bethe_real(4, 3, 1.0, {-1, 0, 1}), std::invalid_argument);
}

class SolverSectors : public ::testing::TestWithParam<int> {};

TEST_P(SolverSectors, MatchesTopOfMagnetizationSector) {
  const int n = GetParam();
  const double eta = 1.0;
  const auto spec = exact_spectrum({n, eta});
  const auto h = oracle::xxz_hamiltonian(n, eta);
  for (int m = 1; m <= n / 2; ++m) {
    const auto sol = solve_bethe_real(n, m, eta, default_quantum_numbers(n, m));
    for (double r : sol.residuals) EXPECT_LT(r, 1e-10);
    double top = -1e300;
    for (const auto& l : spec.levels())
      if (l.sz == n / 2.0 - m) top = std::max(top, l.energy);
    EXPECT_NEAR(sol.energy, top, 1e-8) << "N=" << n << " M=" << m;
    const auto psi = bethe_state(sol.roots);
    const auto x = oracle::to_vector(psi);
    EXPECT_LT((h * x - sol.energy * x).norm(), 1e-8) << "N=" << n << " M=" << m;
    EXPECT_NEAR(oracle::expectation(h, psi), sol.energy, 1e-9);
    // Also an eigenvector of the transfer matrix.
    const Eigen::VectorXcd tx = transfer_matrix(0.23, eta, n) * x;
    const Complex lambda = x.dot(tx);
    EXPECT_LT((tx - lambda * x).norm(), 1e-8);
  }
}

INSTANTIATE_TEST_SUITE_P(Sites, SolverSectors, ::testing::Values(2, 3, 4, 5, 6, 8, 10));

TEST(BetheSolver, TwelveSitesHalfFilling) {
  const auto sol = solve_bethe_real(12, 6, 1.0, default_quantum_numbers(12, 6));
  for (double r : sol.residuals) EXPECT_LT(r, 1e-10);
  const auto spec = exact_spectrum({12, 1.0});
  double top = -1e300;
  for (const auto& l : spec.levels())
    if (l.sz == 0.0) top = std::max(top, l.energy);
  EXPECT_NEAR(sol.energy, top, 1e-8);
}

TEST(BetheSolver, TwoMagnonStateAgreesWithExpectation) {
  const auto sol = solve_bethe_real(4, 2, 1.0, default_quantum_numbers(4, 2));
  const auto psi = bethe_state(sol.roots);
  EXPECT_NEAR(expectation(psi, build_hamiltonian({4, 1.0})), bethe_energy(sol.roots), 1e-9);
}

TEST(BetheSolver, PhaseFunctionDerivative) {
  for (double t : {0.2, 0.76, 0.99}) {
    for (double x : {-1.2, -0.3, 0.0, 0.5, 1.4}) {
      const double h = 1e-6;
      const double fd = (phase_function(x + h, t) - phase_function(x - h, t)) / (2 * h);
      EXPECT_NEAR(phase_function_derivative(x, t), fd, 1e-6);
    }
  }
}

TEST(TwoMagnon, CollinearWithDoubleCreation) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  int checked = 0;
  while (checked < 10) {
    const double p1 = u(rng), p2 = u(rng);
    if (std::abs(std::cos((p1 + p2) / 2)) < 0.1 || std::abs(std::sin((p1 - p2) / 2)) < 0.1) {
      continue;
    }
    const auto amp = two_magnon_components(p1, p2, 1.0);
    const auto created = bethe_vector(BetheRoots::from_momenta(4, 1.0, {p1, p2}));
    EXPECT_LT(collinearity_residual(amp.vector(), created), 1e-9);
    const auto swapped = two_magnon_components(p2, p1, 1.0);
    EXPECT_LT(collinearity_residual(amp.vector(), swapped.vector()), 1e-9);
    ++checked;
  }
}

TEST(TwoMagnon, QuarterPeriodMomenta) {
  const double p1 = 2 * kPi / 4, p2 = 2 * kPi / 4 * 3;
  const auto amp = two_magnon_components(p1, p2, 1.0);
  const auto created = bethe_vector(BetheRoots::from_momenta(4, 1.0, {p1, p2}));
  EXPECT_LT(collinearity_residual(amp.vector(), created), 1e-9);
}

TEST(TwoMagnon, ZeroMomentaEntry) {
  for (double eta : {1e-4, 0.5, 1.0}) {
    const auto amp = two_magnon_components(0.0, 0.0, eta);
    EXPECT_LT(std::abs(amp.xi - (4 - 2 * std::cosh(eta)) / 2), 1e-14);
  }
  EXPECT_NEAR(two_magnon_components(0.0, 0.0, 1e-4).xi.real(), 1.0, 1e-7);
}

TEST(TwoMagnon, SingularTotalMomentum) {
  EXPECT_THROW(two_magnon_components(1.0, kPi - 1.0, 1.0), DomainError);
}
