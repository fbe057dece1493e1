#pragma once

#include <array>
#include <string>
#include <vector>

#include "bethevqe/types.hpp"

namespace bethevqe {

enum class GateKind { U3, X, Z, H, CNOT, SWAP };

std::string to_string(GateKind kind);

/// A primitive gate. Single-qubit gates use qubits[0]; CNOT stores
/// (control, target) and SWAP stores its two qubits.
struct Gate {
  GateKind kind = GateKind::X;
  std::array<int, 2> qubits{0, -1};
  std::array<double, 3> params{0.0, 0.0, 0.0};  // theta, phi, lambda for U3

  static Gate u3(int qubit, double theta, double phi, double lambda);
  static Gate x(int qubit);
  static Gate z(int qubit);
  static Gate h(int qubit);
  static Gate cnot(int control, int target);
  static Gate swap(int a, int b);

  int arity() const noexcept;

  /// 2x2 matrix of a single-qubit gate in the (|0>, |1>) basis.
  Matrix2c matrix1() const;

  /// 4x4 matrix of a two-qubit gate in the basis |a b> with a the bit of
  /// qubits[0] (the CNOT control) as the high bit.
  Matrix4c matrix2() const;

  bool operator==(const Gate&) const = default;
};

/// U3(theta, phi, lambda) =
///   [[cos(theta/2),            -e^{i lambda} sin(theta/2)],
///    [e^{i phi} sin(theta/2),   e^{i(phi+lambda)} cos(theta/2)]]
Matrix2c u3_matrix(double theta, double phi, double lambda);

/// Ordered gate list; gates()[0] is applied first.
class Circuit {
 public:
  explicit Circuit(int num_qubits);

  int num_qubits() const noexcept { return num_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }

  /// Validates qubit indices and distinctness, then appends.
  Circuit& append(const Gate& gate);
  Circuit& append(const Circuit& other);

  /// Relabels local qubit i as `mapping[i]` on a register of `num_qubits`.
  Circuit remapped(const std::vector<int>& mapping, int num_qubits) const;

 private:
  int num_qubits_;
  std::vector<Gate> gates_;
};

}  // namespace bethevqe
