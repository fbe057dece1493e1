#pragma once

#include <string>
#include <string_view>

#include "bethevqe/gate.hpp"

namespace bethevqe {

/// One gate per line:
///   u3(theta,phi,lambda) q[i]
///   cx q[c],q[t]
///   x q[i]   z q[i]   h q[i]
///   swap q[i],q[j]
/// Angles are printed with 17 significant digits so they round-trip exactly.
std::string emit_circuit_text(const Circuit& circuit);

/// Parses the format above. Blank lines and lines starting with "//" or
/// "#" are skipped. With num_qubits <= 0 the width is the largest index
/// plus one. Throws std::invalid_argument with the offending line number.
Circuit parse_circuit_text(std::string_view text, int num_qubits = 0);

}  // namespace bethevqe
