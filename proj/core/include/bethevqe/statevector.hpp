#pragma once

#include <span>
#include <vector>

#include "bethevqe/types.hpp"

namespace bethevqe {

/// Dense register of 2^n complex amplitudes. Basis index bit q is the
/// value of qubit q, so qubit 0 is the least-significant bit and a basis
/// index reads as |q_{n-1} ... q_1 q_0>.
class Statevector {
 public:
  /// |0...0> on `num_qubits` qubits.
  explicit Statevector(int num_qubits);
  Statevector(int num_qubits, std::vector<Complex> amplitudes);

  static Statevector basis_state(int num_qubits, std::uint64_t index);

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm() const;
  bool is_normalized(double tol = 1e-12) const;
  Statevector normalized() const;

  // Moves the buffer out; used by kernels that work in place on a copy.
  std::vector<Complex> release() && { return std::move(amplitudes_); }

 private:
  int num_qubits_;
  std::vector<Complex> amplitudes_;
};

Complex inner_product(const Statevector& a, const Statevector& b);

/// True iff min over phi of ||a - e^{i phi} b|| < tol. The minimizing phase
/// comes from the overlap <b|a>, so no amplitude is ever divided by.
bool states_equal_up_to_phase(const Statevector& a, const Statevector& b, double tol);

/// min over phi of ||a - e^{i phi} b||.
double phase_insensitive_distance(const Statevector& a, const Statevector& b);

void check_num_qubits(int num_qubits);

}  // namespace bethevqe
