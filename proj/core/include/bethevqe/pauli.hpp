#pragma once

#include <string>
#include <vector>

#include "bethevqe/statevector.hpp"

namespace bethevqe {

/// One weighted Pauli string. The label is written most-significant qubit
/// first: label[i] acts on qubit (n - 1 - i), matching the way basis
/// bitstrings print.
struct PauliTerm {
  double coefficient = 0.0;
  std::string label;
};

/// Real-weighted sum of equal-length Pauli strings, hence Hermitian.
class PauliSum {
 public:
  explicit PauliSum(int num_qubits);

  int num_qubits() const noexcept { return num_qubits_; }
  const std::vector<PauliTerm>& terms() const noexcept { return terms_; }

  /// Adds `coefficient * label`. Throws std::invalid_argument on a label of
  /// the wrong length or with letters outside {I, X, Y, Z}.
  PauliSum& add(double coefficient, std::string label);

  /// Same string with the letter `op` on qubit `q` and identity elsewhere.
  static std::string single_site_label(int num_qubits, int q, char op);
  static std::string two_site_label(int num_qubits, int q1, char op1, int q2, char op2);

  PauliSum operator-() const;

 private:
  int num_qubits_;
  std::vector<PauliTerm> terms_;
};

/// Bit masks describing how a Pauli string acts on a basis state:
/// P|b> = i^{num_y} (-1)^{popcount(b & phase_mask)} |b ^ flip_mask>.
struct PauliMasks {
  std::uint64_t flip_mask = 0;
  std::uint64_t phase_mask = 0;
  int num_y = 0;
};
PauliMasks pauli_masks(const std::string& label);

/// O|psi> without forming the matrix.
Statevector apply(const PauliSum& op, const Statevector& state);

/// <psi|O|psi>. Requires |‖psi‖ - 1| <= 1e-8.
double expectation(const Statevector& state, const PauliSum& op);

ComplexMatrix to_dense(const PauliSum& op);

}  // namespace bethevqe
