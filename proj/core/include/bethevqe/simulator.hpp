#pragma once

#include "bethevqe/gate.hpp"
#include "bethevqe/statevector.hpp"

namespace bethevqe {

/// Returns U|state> with the gate's unitary embedded on its qubits.
/// Throws std::out_of_range when the gate addresses a qubit the state lacks.
Statevector apply_gate(const Statevector& state, const Gate& gate);

/// Applies the gates left to right. Throws std::invalid_argument on a
/// register-size mismatch.
Statevector run_circuit(const Circuit& circuit, const Statevector& initial);

/// Full 2^n x 2^n unitary of a circuit, built column by column.
ComplexMatrix circuit_unitary(const Circuit& circuit);

/// Embeds a 2^k x 2^k operator acting on `qubits` into an n-qubit register.
/// qubits[0] is the most significant bit of the local index.
ComplexMatrix embed_operator(const ComplexMatrix& op, const std::vector<int>& qubits,
                             int num_qubits);

}  // namespace bethevqe
