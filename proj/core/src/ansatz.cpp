#include "bethevqe/ansatz.hpp"

#include <cmath>
#include <stdexcept>

namespace bethevqe {

std::string to_string(AnsatzTarget target) {
  return target == AnsatzTarget::FirstExcited ? "first" : "second";
}

void AnsatzSpec::validate() const {
  if (num_sites != 2 && num_sites != 4) {
    throw std::invalid_argument("one-magnon circuits exist for 2 or 4 sites only, got " +
                                std::to_string(num_sites));
  }
  if (target == AnsatzTarget::SecondExcited && num_sites != 2) {
    throw std::invalid_argument("the second-excited target is only one-magnon for 2 sites");
  }
}

Circuit one_magnon_circuit_n2(double p) {
  Circuit c(2);
  c.append(Gate::u3(1, kPi / 2.0, -p, 0.0));
  c.append(Gate::cnot(1, 0));
  c.append(Gate::x(0));
  return c;
}

Circuit v_block_circuit(const TwoQubitBlockParams& params) {
  Circuit c(2);
  c.append(Gate::u3(0, 0.0, 0.0, -kPi / 2.0));
  c.append(Gate::cnot(0, 1));
  c.append(Gate::u3(0, -params.beta, kPi, kPi));
  c.append(Gate::u3(1, 0.0, 0.0, params.delta));
  c.append(Gate::cnot(1, 0));
  c.append(Gate::u3(0, -params.alpha, kPi, kPi));
  c.append(Gate::cnot(0, 1));
  c.append(Gate::z(1));
  return c;
}

Matrix4c u_cal_matrix(double p) {
  const double r = 1.0 / std::sqrt(2.0);
  auto e = [](double x) { return std::polar(1.0, x); };
  Matrix4c m = Matrix4c::Zero();
  m(0, 0) = e(p / 2.0);
  m(1, 1) = r * e(-p / 2.0);
  m(1, 3) = -r * e(p);
  m(2, 1) = r * e(-1.5 * p);
  m(2, 3) = r;
  m(3, 2) = 1.0;
  return m;
}

Matrix4c v_cal_matrix(double p) {
  const double r = 1.0 / std::sqrt(2.0);
  const Complex ep = std::polar(1.0, p);
  Matrix4c m = Matrix4c::Zero();
  m(0, 1) = 1.0;
  m(1, 0) = r * ep;
  m(1, 3) = -r * ep;
  m(2, 0) = r;
  m(2, 3) = r;
  m(3, 2) = 1.0;
  return m;
}

Circuit u_cal_circuit(double p) {
  Circuit c(2);
  c.append(Gate::u3(1, kPi / 2.0, -kPi / 4.0, 0.5 * (3.0 * p + kPi)));
  c.append(Gate::u3(0, 0.0, 0.0, 0.5 * (3.0 * kPi - p)));
  c.append(v_block_circuit({0.0, kPi / 2.0, kPi / 4.0}));
  c.append(Gate::u3(1, kPi / 2.0, -1.5 * p, 0.0));
  c.append(Gate::u3(0, kPi / 2.0, 0.5 * (kPi - p), kPi));
  return c;
}

Circuit v_cal_circuit(double p) {
  Circuit c(2);
  c.append(Gate::u3(1, kPi / 2.0, -kPi / 2.0, kPi / 2.0));
  c.append(Gate::u3(0, kPi / 2.0, -kPi / 2.0, -kPi));
  c.append(v_block_circuit({0.5 * (3.0 * kPi - p), 0.75 * kPi, 0.75 * kPi}));
  c.append(Gate::u3(1, kPi / 2.0, 0.5 * (kPi - p), 0.0));
  c.append(Gate::u3(0, kPi / 2.0, p / 2.0, -kPi / 2.0));
  return c;
}

Circuit one_magnon_circuit_n4(double p) {
  Circuit c(4);
  c.append(Gate::h(2));
  c.append(Gate::cnot(2, 0));
  c.append(Gate::cnot(3, 1));
  c.append(u_cal_circuit(p).remapped({2, 3}, 4));
  c.append(v_cal_circuit(p).remapped({0, 1}, 4));
  return c;
}

Circuit one_magnon_circuit(int num_sites, double p) {
  switch (num_sites) {
    case 2: return one_magnon_circuit_n2(p);
    case 4: return one_magnon_circuit_n4(p);
    default:
      throw std::invalid_argument("one-magnon circuits exist for 2 or 4 sites only, got " +
                                  std::to_string(num_sites));
  }
}

Statevector trial_state_reference(int num_sites, double p) {
  auto e = [](double x) { return std::polar(1.0, x); };
  if (num_sites == 2) {
    const double r = 1.0 / std::sqrt(2.0);
    return Statevector(2, {0.0, r * e(p), r, 0.0});
  }
  if (num_sites == 4) {
    std::vector<Complex> a(16, Complex{});
    a[1] = 0.5 * e(1.5 * p);
    a[2] = 0.5 * e(0.5 * p);
    a[4] = 0.5 * e(-0.5 * p);
    a[8] = 0.5 * e(-1.5 * p);
    return Statevector(4, std::move(a));
  }
  throw std::invalid_argument("reference trial states exist for 2 or 4 sites only, got " +
                              std::to_string(num_sites));
}

}  // namespace bethevqe
