#include "bethevqe/bethe.hpp"

#include <cmath>
#include <string>

#include "bethevqe/simulator.hpp"

namespace bethevqe {

Matrix4c r_matrix(Complex v, double eta) {
  const Complex half{0.0, eta / 2.0};
  const Complex a = std::sin(v + half);
  const Complex b = std::sin(v - half);
  const Complex c = kI * std::sinh(eta);
  Matrix4c r = Matrix4c::Zero();
  r(0, 0) = r(3, 3) = a;
  r(1, 1) = r(2, 2) = b;
  r(1, 2) = r(2, 1) = c;
  return r;
}

double check_yang_baxter(Complex v1, Complex v2, double eta) {
  // Spaces 1, 2, 3 left to right are qubits 2, 1, 0.
  const ComplexMatrix r12 = embed_operator(r_matrix(v1 - v2 + kI * (eta / 2.0), eta), {2, 1}, 3);
  const ComplexMatrix r13 = embed_operator(r_matrix(v1, eta), {2, 0}, 3);
  const ComplexMatrix r23 = embed_operator(r_matrix(v2, eta), {1, 0}, 3);
  return max_abs(r12 * r13 * r23 - r23 * r13 * r12);
}

namespace {

void check_sites(int num_sites) {
  if (num_sites < 1) throw std::invalid_argument("chain needs at least one site");
}

void check_dense(int num_sites) {
  check_sites(num_sites);
  if (num_sites > kMaxDenseSites) {
    throw DomainError("dense monodromy is capped at " + std::to_string(kMaxDenseSites) +
                      " sites, got " + std::to_string(num_sites));
  }
}

// Carries (aux up, aux down) components through R_{01}, R_{02}, ..., R_{0N}.
void sweep(const Matrix4c& r, int num_sites, std::vector<Complex>& up,
           std::vector<Complex>& down) {
  for (int site = 1; site <= num_sites; ++site) {
    const std::size_t bit = std::size_t{1} << site_to_qubit(site, num_sites);
    for (std::size_t i = 0; i < up.size(); ++i) {
      if (i & bit) continue;
      // Local index 2*aux + spin.
      const Complex x0 = up[i], x1 = up[i | bit], x2 = down[i], x3 = down[i | bit];
      up[i] = r(0, 0) * x0 + r(0, 1) * x1 + r(0, 2) * x2 + r(0, 3) * x3;
      up[i | bit] = r(1, 0) * x0 + r(1, 1) * x1 + r(1, 2) * x2 + r(1, 3) * x3;
      down[i] = r(2, 0) * x0 + r(2, 1) * x1 + r(2, 2) * x2 + r(2, 3) * x3;
      down[i | bit] = r(3, 0) * x0 + r(3, 1) * x1 + r(3, 2) * x2 + r(3, 3) * x3;
    }
  }
}

}  // namespace

Statevector apply_monodromy_block(MonodromyBlock block, Complex v, double eta,
                                  const Statevector& state) {
  const int n = state.num_qubits();
  const std::vector<Complex> in(state.amplitudes().begin(), state.amplitudes().end());
  const std::vector<Complex> zero(in.size(), Complex{});
  // B and D take the auxiliary space in |down>, A and C in |up>.
  const bool from_down = block == MonodromyBlock::B || block == MonodromyBlock::D;
  std::vector<Complex> up = from_down ? zero : in;
  std::vector<Complex> down = from_down ? in : zero;
  sweep(r_matrix(v, eta), n, up, down);
  const bool to_up = block == MonodromyBlock::A || block == MonodromyBlock::B;
  return Statevector(n, to_up ? std::move(up) : std::move(down));
}

MonodromyBlocks monodromy(Complex v, double eta, int num_sites) {
  check_dense(num_sites);
  const std::size_t dim = std::size_t{1} << num_sites;
  MonodromyBlocks t{v, eta, num_sites, ComplexMatrix(dim, dim), ComplexMatrix(dim, dim),
                    ComplexMatrix(dim, dim), ComplexMatrix(dim, dim)};
  const Matrix4c r = r_matrix(v, eta);
  for (std::size_t col = 0; col < dim; ++col) {
    std::vector<Complex> up(dim), down(dim);
    up[col] = 1.0;
    sweep(r, num_sites, up, down);
    for (std::size_t row = 0; row < dim; ++row) {
      t.a(row, col) = up[row];
      t.c(row, col) = down[row];
    }
    std::fill(up.begin(), up.end(), Complex{});
    std::fill(down.begin(), down.end(), Complex{});
    down[col] = 1.0;
    sweep(r, num_sites, up, down);
    for (std::size_t row = 0; row < dim; ++row) {
      t.b(row, col) = up[row];
      t.d(row, col) = down[row];
    }
  }
  return t;
}

ComplexMatrix transfer_matrix(Complex v, double eta, int num_sites) {
  check_dense(num_sites);
  const std::size_t dim = std::size_t{1} << num_sites;
  const Matrix4c r = r_matrix(v, eta);
  ComplexMatrix t(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    std::vector<Complex> up(dim), down(dim);
    up[col] = 1.0;
    sweep(r, num_sites, up, down);
    std::vector<Complex> up2(dim), down2(dim);
    down2[col] = 1.0;
    sweep(r, num_sites, up2, down2);
    for (std::size_t row = 0; row < dim; ++row) t(row, col) = up[row] + down2[row];
  }
  return t;
}

Statevector apply_transfer(Complex v, double eta, const Statevector& state) {
  const auto a = apply_monodromy_block(MonodromyBlock::A, v, eta, state);
  const auto d = apply_monodromy_block(MonodromyBlock::D, v, eta, state);
  std::vector<Complex> out(state.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + d[i];
  return Statevector(state.num_qubits(), std::move(out));
}

ComplexMatrix hamiltonian_from_transfer(int num_sites, double eta, double dv) {
  check_dense(num_sites);
  if (!(dv >= 1e-6 && dv <= 1e-3)) {
    throw std::invalid_argument("finite-difference step must lie in [1e-6, 1e-3]");
  }
  const Complex v0 = kI * (eta / 2.0);
  const ComplexMatrix t0 = transfer_matrix(v0, eta, num_sites);
  const ComplexMatrix derivative =
      (transfer_matrix(v0 + dv, eta, num_sites) - transfer_matrix(v0 - dv, eta, num_sites)) /
      (2.0 * dv);
  Eigen::PartialPivLU<ComplexMatrix> lu(t0);
  if (lu.rcond() < 1e-12) throw DomainError("transfer matrix is singular at v = i eta/2");
  const ComplexMatrix log_derivative = lu.solve(derivative);
  const auto dim = t0.rows();
  return -0.5 * kI * std::sinh(eta) * log_derivative +
         ComplexMatrix::Identity(dim, dim) * (0.5 * num_sites * std::cosh(eta));
}

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Complex identity_offset(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw std::invalid_argument("identity_offset needs equal square matrices");
  }
  return (a - b).trace() / static_cast<double>(a.rows());
}

double traceless_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Complex shift = identity_offset(a, b);
  return max_abs(a - b - shift * ComplexMatrix::Identity(a.rows(), a.cols()));
}

}  // namespace bethevqe
