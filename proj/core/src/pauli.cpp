#include "bethevqe/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace bethevqe {

PauliSum::PauliSum(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1) throw std::invalid_argument("PauliSum needs at least one qubit");
}

PauliSum& PauliSum::add(double coefficient, std::string label) {
  if (static_cast<int>(label.size()) != num_qubits_) {
    throw std::invalid_argument("Pauli label '" + label + "' does not have length " +
                                std::to_string(num_qubits_));
  }
  for (char c : label) {
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      throw std::invalid_argument("Pauli label '" + label + "' contains '" + c + "'");
    }
  }
  terms_.push_back({coefficient, std::move(label)});
  return *this;
}

std::string PauliSum::single_site_label(int num_qubits, int q, char op) {
  std::string label(num_qubits, 'I');
  label[num_qubits - 1 - q] = op;
  return label;
}

std::string PauliSum::two_site_label(int num_qubits, int q1, char op1, int q2, char op2) {
  std::string label(num_qubits, 'I');
  label[num_qubits - 1 - q1] = op1;
  label[num_qubits - 1 - q2] = op2;
  return label;
}

PauliSum PauliSum::operator-() const {
  PauliSum out(num_qubits_);
  for (const auto& t : terms_) out.add(-t.coefficient, t.label);
  return out;
}

PauliMasks pauli_masks(const std::string& label) {
  PauliMasks m;
  const int n = static_cast<int>(label.size());
  for (int i = 0; i < n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - i);
    switch (label[i]) {
      case 'X': m.flip_mask |= bit; break;
      case 'Y': m.flip_mask |= bit; m.phase_mask |= bit; ++m.num_y; break;
      case 'Z': m.phase_mask |= bit; break;
      default: break;
    }
  }
  return m;
}

namespace {

// i^k for k mod 4.
Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void check_width(const PauliSum& op, const Statevector& state) {
  if (op.num_qubits() != state.num_qubits()) {
    throw std::invalid_argument("operator acts on " + std::to_string(op.num_qubits()) +
                                " qubits but the state has " +
                                std::to_string(state.num_qubits()));
  }
}

}  // namespace

Statevector apply(const PauliSum& op, const Statevector& state) {
  check_width(op, state);
  std::vector<Complex> out(state.dim(), Complex{});
  const auto in = state.amplitudes();
  for (const auto& term : op.terms()) {
    const auto m = pauli_masks(term.label);
    const Complex base = term.coefficient * i_power(m.num_y);
    for (std::size_t b = 0; b < in.size(); ++b) {
      if (in[b] == Complex{}) continue;
      const double sign = (std::popcount(b & m.phase_mask) & 1) ? -1.0 : 1.0;
      out[b ^ m.flip_mask] += base * sign * in[b];
    }
  }
  return Statevector(state.num_qubits(), std::move(out));
}

double expectation(const Statevector& state, const PauliSum& op) {
  if (std::abs(state.norm() - 1.0) > 1e-8) {
    throw std::invalid_argument("expectation needs a normalized state (norm " +
                                std::to_string(state.norm()) + ")");
  }
  const Complex value = inner_product(state, apply(op, state));
  double scale = 1.0;
  for (const auto& t : op.terms()) scale += std::abs(t.coefficient);
  if (std::abs(value.imag()) > 1e-12 * scale) {
    throw std::logic_error("expectation of a Hermitian operator has imaginary part " +
                           std::to_string(value.imag()));
  }
  return value.real();
}

ComplexMatrix to_dense(const PauliSum& op) {
  check_num_qubits(op.num_qubits());
  const std::size_t dim = std::size_t{1} << op.num_qubits();
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (const auto& term : op.terms()) {
    const auto masks = pauli_masks(term.label);
    const Complex base = term.coefficient * i_power(masks.num_y);
    for (std::size_t b = 0; b < dim; ++b) {
      const double sign = (std::popcount(b & masks.phase_mask) & 1) ? -1.0 : 1.0;
      m(b ^ masks.flip_mask, b) += base * sign;
    }
  }
  return m;
}

}  // namespace bethevqe
