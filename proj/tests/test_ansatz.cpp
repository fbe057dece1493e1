#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "bethevqe/ansatz.hpp"
#include "bethevqe/bethe_roots.hpp"
#include "bethevqe/circuit_text.hpp"
#include "bethevqe/pauli.hpp"
#include "bethevqe/simulator.hpp"
#include "bethevqe/xxz.hpp"
#include "oracle.hpp"

using namespace bethevqe;

namespace {

double unitarity_defect(const ComplexMatrix& u) {
  return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

// Smallest max-entry difference over a global phase.
double phase_matrix_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Complex overlap = (b.adjoint() * a).trace();
  const Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1.0);
  return (a - phase * b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(AnsatzN2, ZeroParameter) {
  const auto s = run_circuit(one_magnon_circuit_n2(0.0), Statevector(2));
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_TRUE(states_equal_up_to_phase(s, Statevector(2, {0.0, r, r, 0.0}), 1e-12));
  EXPECT_EQ(one_magnon_circuit_n2(0.0).size(), 3u);
}

TEST(AnsatzN2, PiParameter) {
  const auto s = run_circuit(one_magnon_circuit_n2(kPi), Statevector(2));
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_TRUE(states_equal_up_to_phase(s, Statevector(2, {0.0, -r, r, 0.0}), 1e-12));
}

TEST(AnsatzN2, MatchesClosedFormAndHasOneFlip) {
  const auto sz = oracle::sz_operator(2);
  for (double p : {-2.0, 0.3, 1.3, 2.9}) {
    const auto s = run_circuit(one_magnon_circuit_n2(p), Statevector(2));
    EXPECT_LT(oracle::phase_distance(s, oracle::trial_state_n2(p)), 1e-12);
    EXPECT_NEAR(oracle::expectation(sz, s), 0.0, 1e-14);
  }
}

TEST(VBlock, UnitaryAtRandomAngles) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int i = 0; i < 10; ++i) {
    const auto c = v_block_circuit({u(rng), u(rng), u(rng)});
    EXPECT_EQ(c.num_qubits(), 2);
    EXPECT_LT(unitarity_defect(circuit_unitary(c)), 1e-13);
  }
}

TEST(CalMatrices, DisplayedEntries) {
  for (double p : {0.0, 0.7, -1.9}) {
    // First row: e^{ip/2} leads U, V starts with a plain 1 in the second column.
    EXPECT_LT(std::abs(u_cal_matrix(p)(0, 0) - std::polar(1.0, p / 2)), 1e-14);
    EXPECT_LT(std::abs(v_cal_matrix(p)(0, 1) - 1.0), 1e-14);
  }
  EXPECT_LT(unitarity_defect(u_cal_matrix(0.7)), 1e-13);
  EXPECT_LT(unitarity_defect(v_cal_matrix(0.7)), 1e-13);
}

TEST(CalMatrices, GateDecompositionsReproduceMatrices) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int i = 0; i < 20; ++i) {
    const double p = u(rng);
    EXPECT_LT(phase_matrix_distance(circuit_unitary(u_cal_circuit(p)), u_cal_matrix(p)), 1e-12);
    EXPECT_LT(phase_matrix_distance(circuit_unitary(v_cal_circuit(p)), v_cal_matrix(p)), 1e-12);
  }
}

TEST(AnsatzN4, ZeroParameter) {
  const auto s = run_circuit(one_magnon_circuit_n4(0.0), Statevector(4));
  std::vector<Complex> expected(16, 0.0);
  expected[1] = expected[2] = expected[4] = expected[8] = 0.5;
  EXPECT_TRUE(states_equal_up_to_phase(s, Statevector(4, expected), 1e-12));
}

TEST(AnsatzN4, SupportAndMagnitudes) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int i = 0; i < 20; ++i) {
    const auto s = run_circuit(one_magnon_circuit_n4(u(rng)), Statevector(4));
    for (std::size_t k = 0; k < 16; ++k) {
      const bool support = k == 1 || k == 2 || k == 4 || k == 8;
      EXPECT_NEAR(std::abs(s[k]), support ? 0.5 : 0.0, 1e-12) << "index " << k;
    }
  }
}

TEST(AnsatzN4, MatchesBetheOneMagnonState) {
  const auto s = run_circuit(one_magnon_circuit_n4(1.1), Statevector(4));
  EXPECT_LT(phase_insensitive_distance(s, one_magnon_state(4, 1.1, 1.0)), 1e-10);
}

TEST(AnsatzN4, GateCountIsPinned) {
  EXPECT_EQ(one_magnon_circuit_n4(0.3).size(), kN4AnsatzGateCount);
  EXPECT_EQ(kN4AnsatzGateCount, 27u);
}

TEST(TrialReference, NormAndPeriod) {
  for (double p : {0.0, 0.5, 2.5, -3.0}) {
    EXPECT_NEAR(trial_state_reference(2, p).norm(), 1.0, 1e-15);
    EXPECT_NEAR(trial_state_reference(4, p).norm(), 1.0, 1e-15);
    EXPECT_LT(oracle::phase_distance(trial_state_reference(4, p), oracle::trial_state_n4(p)),
              1e-15);
  }
  // Half-angle phases: shifting p by 2 pi flips the sign of every amplitude only.
  const auto a = trial_state_reference(4, 0.0);
  const auto b = trial_state_reference(4, 2 * kPi);
  EXPECT_LT(phase_insensitive_distance(a, b), 1e-14);
  const auto c = trial_state_reference(4, 4 * kPi);
  for (std::size_t k = 0; k < 16; ++k) EXPECT_NEAR(std::abs(a[k] - c[k]), 0.0, 1e-14);
}

TEST(AnsatzSpec, Validation) {
  EXPECT_NO_THROW((AnsatzSpec{2, AnsatzTarget::SecondExcited}.validate()));
  EXPECT_NO_THROW((AnsatzSpec{4, AnsatzTarget::FirstExcited}.validate()));
  EXPECT_THROW((AnsatzSpec{4, AnsatzTarget::SecondExcited}.validate()), std::invalid_argument);
  EXPECT_THROW((AnsatzSpec{3, AnsatzTarget::FirstExcited}.validate()), std::invalid_argument);
  EXPECT_THROW(one_magnon_circuit(6, 0.1), std::invalid_argument);
}

TEST(CircuitText, N2Emission) {
  const auto text = emit_circuit_text(one_magnon_circuit(2, 0.0));
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
  EXPECT_NE(text.find("u3("), std::string::npos);
  EXPECT_NE(text.find("cx q[1],q[0]"), std::string::npos);
  EXPECT_NE(text.find("x q[0]"), std::string::npos);
}

TEST(CircuitText, RoundTripPreservesState) {
  for (int n : {2, 4}) {
    for (double p : {0.0, 0.3, -2.1}) {
      const auto c = one_magnon_circuit(n, p);
      const auto parsed = parse_circuit_text(emit_circuit_text(c));
      EXPECT_EQ(parsed.num_qubits(), n);
      EXPECT_EQ(parsed.gates(), c.gates());
      EXPECT_LT(phase_insensitive_distance(run_circuit(parsed, Statevector(n)),
                                           run_circuit(c, Statevector(n))),
                1e-10);
    }
  }
}

TEST(CircuitText, ParsesCommentsAndWidth) {
  const auto c = parse_circuit_text("// demo\n\nh q[0]\n# note\ncx q[0],q[2]\nswap q[1],q[2]\n");
  EXPECT_EQ(c.num_qubits(), 3);
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(parse_circuit_text("x q[0]\n", 5).num_qubits(), 5);
}

TEST(CircuitText, ReportsBadLines) {
  try {
    parse_circuit_text("h q[0]\nfoo q[1]\n");
    FAIL() << "expected a parse error";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(parse_circuit_text("u3(1,2) q[0]\n"), std::invalid_argument);
  EXPECT_THROW(parse_circuit_text("cx q[0],q[0]\n"), std::invalid_argument);
  EXPECT_THROW(parse_circuit_text("x q[3]\n", 2), std::invalid_argument);
}
