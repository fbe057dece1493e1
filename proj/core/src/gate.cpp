#include "bethevqe/gate.hpp"

#include <cmath>
#include <stdexcept>

namespace bethevqe {

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::U3: return "u3";
    case GateKind::X: return "x";
    case GateKind::Z: return "z";
    case GateKind::H: return "h";
    case GateKind::CNOT: return "cx";
    case GateKind::SWAP: return "swap";
  }
  return "?";
}

Matrix2c u3_matrix(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Matrix2c m;
  m << c, -std::polar(1.0, lambda) * s,
       std::polar(1.0, phi) * s, std::polar(1.0, phi + lambda) * c;
  return m;
}

Gate Gate::u3(int qubit, double theta, double phi, double lambda) {
  return Gate{GateKind::U3, {qubit, -1}, {theta, phi, lambda}};
}
Gate Gate::x(int qubit) { return Gate{GateKind::X, {qubit, -1}, {}}; }
Gate Gate::z(int qubit) { return Gate{GateKind::Z, {qubit, -1}, {}}; }
Gate Gate::h(int qubit) { return Gate{GateKind::H, {qubit, -1}, {}}; }
Gate Gate::cnot(int control, int target) { return Gate{GateKind::CNOT, {control, target}, {}}; }
Gate Gate::swap(int a, int b) { return Gate{GateKind::SWAP, {a, b}, {}}; }

int Gate::arity() const noexcept {
  return (kind == GateKind::CNOT || kind == GateKind::SWAP) ? 2 : 1;
}

Matrix2c Gate::matrix1() const {
  Matrix2c m;
  switch (kind) {
    case GateKind::U3:
      return u3_matrix(params[0], params[1], params[2]);
    case GateKind::X:
      m << 0, 1, 1, 0;
      return m;
    case GateKind::Z:
      m << 1, 0, 0, -1;
      return m;
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      m << r, r, r, -r;
      return m;
    }
    default:
      throw std::logic_error(to_string(kind) + " is not a single-qubit gate");
  }
}

Matrix4c Gate::matrix2() const {
  Matrix4c m = Matrix4c::Zero();
  switch (kind) {
    case GateKind::CNOT:
      m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
      return m;
    case GateKind::SWAP:
      m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
      return m;
    default:
      throw std::logic_error(to_string(kind) + " is not a two-qubit gate");
  }
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1) throw std::invalid_argument("circuit needs at least one qubit");
}

Circuit& Circuit::append(const Gate& gate) {
  for (int k = 0; k < gate.arity(); ++k) {
    const int q = gate.qubits[k];
    if (q < 0 || q >= num_qubits_) {
      throw std::out_of_range("gate " + to_string(gate.kind) + " addresses qubit " +
                              std::to_string(q) + " of a " + std::to_string(num_qubits_) +
                              "-qubit circuit");
    }
  }
  if (gate.arity() == 2 && gate.qubits[0] == gate.qubits[1]) {
    throw std::invalid_argument("two-qubit gate needs distinct qubits");
  }
  gates_.push_back(gate);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits() > num_qubits_) {
    throw std::invalid_argument("appended circuit is wider than the target");
  }
  for (const auto& g : other.gates()) append(g);
  return *this;
}

Circuit Circuit::remapped(const std::vector<int>& mapping, int num_qubits) const {
  if (mapping.size() != static_cast<std::size_t>(num_qubits_)) {
    throw std::invalid_argument("qubit mapping must cover every local qubit");
  }
  Circuit out(num_qubits);
  for (Gate g : gates_) {
    for (int k = 0; k < g.arity(); ++k) g.qubits[k] = mapping[g.qubits[k]];
    out.append(g);
  }
  return out;
}

}  // namespace bethevqe
