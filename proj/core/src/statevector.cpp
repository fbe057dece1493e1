#include "bethevqe/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bethevqe {

double wrap_angle(double x) {
  double y = std::remainder(x, 2.0 * kPi);  // [-pi, pi]
  if (y <= -kPi) y += 2.0 * kPi;
  return y;
}

void check_num_qubits(int num_qubits) {
  if (num_qubits < 1) {
    throw std::invalid_argument("statevector needs at least one qubit");
  }
  if (num_qubits > kMaxQubits) {
    throw DomainError("dense statevector capped at " + std::to_string(kMaxQubits) +
                      " qubits, got " + std::to_string(num_qubits));
  }
}

Statevector::Statevector(int num_qubits) : num_qubits_(num_qubits) {
  check_num_qubits(num_qubits);
  amplitudes_.assign(std::size_t{1} << num_qubits, Complex{});
  amplitudes_[0] = 1.0;
}

Statevector::Statevector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  check_num_qubits(num_qubits);
  if (amplitudes_.size() != (std::size_t{1} << num_qubits)) {
    throw std::invalid_argument("amplitude count " + std::to_string(amplitudes_.size()) +
                                " does not match 2^" + std::to_string(num_qubits));
  }
}

Statevector Statevector::basis_state(int num_qubits, std::uint64_t index) {
  Statevector s(num_qubits);
  if (index >= s.dim()) throw std::out_of_range("basis index out of range");
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

double Statevector::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

bool Statevector::is_normalized(double tol) const { return std::abs(norm() - 1.0) < tol; }

Statevector Statevector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw DomainError("cannot normalize the zero vector");
  std::vector<Complex> out(amplitudes_);
  for (auto& a : out) a /= n;
  return Statevector(num_qubits_, std::move(out));
}

Complex inner_product(const Statevector& a, const Statevector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner product of mismatched states");
  Complex sum{};
  for (std::size_t i = 0; i < a.dim(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

double phase_insensitive_distance(const Statevector& a, const Statevector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("comparing states of different size");
  // The optimal phase aligns b with a: e^{i phi} = <b|a> / |<b|a>|. The
  // difference is summed explicitly; the closed form
  // sqrt(|a|^2 + |b|^2 - 2|<a|b>|) loses half the digits to cancellation.
  const Complex overlap = inner_product(b, a);
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += std::norm(a[i] - phase * b[i]);
  return std::sqrt(sum);
}

bool states_equal_up_to_phase(const Statevector& a, const Statevector& b, double tol) {
  return phase_insensitive_distance(a, b) < tol;
}

}  // namespace bethevqe
