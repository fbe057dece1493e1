#pragma once

#include <string>

#include "bethevqe/gate.hpp"
#include "bethevqe/statevector.hpp"

namespace bethevqe {

/// Which excited level a variational run targets. The second excited level
/// is reached by minimizing -H, and is only one-magnon for two sites.
enum class AnsatzTarget { FirstExcited, SecondExcited };

std::string to_string(AnsatzTarget target);

/// One-parameter one-magnon trial family; the parameter p is supplied per
/// evaluation.
struct AnsatzSpec {
  int num_sites = 2;
  AnsatzTarget target = AnsatzTarget::FirstExcited;

  /// Throws std::invalid_argument unless num_sites is 2 or 4 and the
  /// second-excited target is only requested for 2 sites.
  void validate() const;
};

/// Parameters of the two-qubit block
/// V(alpha, beta, delta) = Z_1 C_01 U3_0(-alpha,pi,pi) C_10 U3_1(0,0,delta)
///                         U3_0(-beta,pi,pi) C_01 U3_0(0,0,-pi/2).
struct TwoQubitBlockParams {
  double alpha = 0.0;
  double beta = 0.0;
  double delta = 0.0;
};

/// Two-site trial circuit: U3(pi/2, -p, 0) on qubit 1, CNOT(1 -> 0), X on 0.
Circuit one_magnon_circuit_n2(double p);

/// The 8-gate block above on local qubits {0, 1}, rightmost factor first.
Circuit v_block_circuit(const TwoQubitBlockParams& params);

/// Target unitaries of the four-site Schmidt-form preparation. Index order
/// is |q1 q0> with q1 the left tensor factor.
Matrix4c u_cal_matrix(double p);
Matrix4c v_cal_matrix(double p);

/// Gate decompositions of u_cal_matrix / v_cal_matrix on local qubits
/// {0, 1}, equal to them up to a global phase: a single-qubit layer, one
/// V block, and another single-qubit layer.
Circuit u_cal_circuit(double p);
Circuit v_cal_circuit(double p);

/// Four-site trial circuit: H on 2, CNOT(2 -> 0), CNOT(3 -> 1), then the U
/// factor on qubits {3, 2} and the V factor on qubits {1, 0}.
Circuit one_magnon_circuit_n4(double p);

/// Gate count of one_magnon_circuit_n4: 3 + 2 x (2 + 8 + 2).
inline constexpr std::size_t kN4AnsatzGateCount = 27;

/// Dispatches on the site count; throws std::invalid_argument for N not in {2, 4}.
Circuit one_magnon_circuit(int num_sites, double p);

/// The trial states written out directly:
///   N = 2: (0, e^{ip}, 1, 0)/sqrt(2)
///   N = 4: amplitudes e^{3ip/2}, e^{ip/2}, e^{-ip/2}, e^{-3ip/2} (times 1/2)
///          at basis indices 1, 2, 4, 8.
Statevector trial_state_reference(int num_sites, double p);

}  // namespace bethevqe
