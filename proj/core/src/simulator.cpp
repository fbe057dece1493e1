#include "bethevqe/simulator.hpp"

#include <string>

namespace bethevqe {
namespace {

void check_qubit(int q, int n) {
  if (q < 0 || q >= n) {
    throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " +
                            std::to_string(n) + "-qubit state");
  }
}

void apply_1q(std::vector<Complex>& amps, int q, const Matrix2c& m) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & bit) continue;
    const Complex a0 = amps[i];
    const Complex a1 = amps[i | bit];
    amps[i] = m(0, 0) * a0 + m(0, 1) * a1;
    amps[i | bit] = m(1, 0) * a0 + m(1, 1) * a1;
  }
}

void apply_cnot(std::vector<Complex>& amps, int control, int target) {
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & cbit) && !(i & tbit)) std::swap(amps[i], amps[i | tbit]);
  }
}

void apply_swap(std::vector<Complex>& amps, int a, int b) {
  const std::size_t abit = std::size_t{1} << a;
  const std::size_t bbit = std::size_t{1} << b;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & abit) && !(i & bbit)) std::swap(amps[i], amps[(i ^ abit) | bbit]);
  }
}

void apply_in_place(std::vector<Complex>& amps, int n, const Gate& gate) {
  for (int k = 0; k < gate.arity(); ++k) check_qubit(gate.qubits[k], n);
  switch (gate.kind) {
    case GateKind::CNOT:
      if (gate.qubits[0] == gate.qubits[1]) throw std::invalid_argument("CNOT control == target");
      apply_cnot(amps, gate.qubits[0], gate.qubits[1]);
      break;
    case GateKind::SWAP:
      if (gate.qubits[0] != gate.qubits[1]) apply_swap(amps, gate.qubits[0], gate.qubits[1]);
      break;
    default:
      apply_1q(amps, gate.qubits[0], gate.matrix1());
  }
}

}  // namespace

Statevector apply_gate(const Statevector& state, const Gate& gate) {
  std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
  apply_in_place(amps, state.num_qubits(), gate);
  return Statevector(state.num_qubits(), std::move(amps));
}

Statevector run_circuit(const Circuit& circuit, const Statevector& initial) {
  if (circuit.num_qubits() != initial.num_qubits()) {
    throw std::invalid_argument("circuit has " + std::to_string(circuit.num_qubits()) +
                                " qubits but the initial state has " +
                                std::to_string(initial.num_qubits()));
  }
  std::vector<Complex> amps(initial.amplitudes().begin(), initial.amplitudes().end());
  for (const auto& g : circuit.gates()) apply_in_place(amps, initial.num_qubits(), g);
  return Statevector(initial.num_qubits(), std::move(amps));
}

ComplexMatrix circuit_unitary(const Circuit& circuit) {
  const int n = circuit.num_qubits();
  check_num_qubits(n);
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix u(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const auto out = run_circuit(circuit, Statevector::basis_state(n, col));
    for (std::size_t row = 0; row < dim; ++row) u(row, col) = out[row];
  }
  return u;
}

ComplexMatrix embed_operator(const ComplexMatrix& op, const std::vector<int>& qubits,
                             int num_qubits) {
  const int k = static_cast<int>(qubits.size());
  if (op.rows() != (1 << k) || op.cols() != (1 << k)) {
    throw std::invalid_argument("operator size does not match its qubit list");
  }
  for (int q : qubits) check_qubit(q, num_qubits);
  const std::size_t dim = std::size_t{1} << num_qubits;
  std::size_t mask = 0;
  for (int q : qubits) mask |= std::size_t{1} << q;

  auto local_index = [&](std::size_t i) {
    std::size_t l = 0;
    for (int j = 0; j < k; ++j) l = (l << 1) | ((i >> qubits[j]) & 1U);
    return l;
  };
  auto scatter = [&](std::size_t rest, std::size_t l) {
    std::size_t i = rest;
    for (int j = 0; j < k; ++j) {
      if ((l >> (k - 1 - j)) & 1U) i |= std::size_t{1} << qubits[j];
    }
    return i;
  };

  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const std::size_t rest = col & ~mask;
    const std::size_t lc = local_index(col);
    for (std::size_t lr = 0; lr < (std::size_t{1} << k); ++lr) {
      out(scatter(rest, lr), col) = op(lr, lc);
    }
  }
  return out;
}

}  // namespace bethevqe
