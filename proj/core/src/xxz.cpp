#include "bethevqe/xxz.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

#include <Eigen/Eigenvalues>

namespace bethevqe {

void XxzParams::validate() const {
  if (num_sites < 2) {
    throw std::invalid_argument("XXZ chain needs at least 2 sites, got " +
                                std::to_string(num_sites));
  }
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw std::invalid_argument("anisotropy eta must be positive and finite");
  }
}

PauliSum build_hamiltonian(const XxzParams& params) {
  params.validate();
  const int n = params.num_sites;
  const double ch = std::cosh(params.eta);
  PauliSum h(n);
  for (int k = 0; k < n; ++k) {
    const int next = (k + 1) % n;
    h.add(-0.25, PauliSum::two_site_label(n, k, 'X', next, 'X'));
    h.add(-0.25, PauliSum::two_site_label(n, k, 'Y', next, 'Y'));
    h.add(-0.25 * ch, PauliSum::two_site_label(n, k, 'Z', next, 'Z'));
  }
  h.add(0.25 * n * ch, std::string(n, 'I'));
  return h;
}

PauliSum build_sz(int num_sites) {
  PauliSum sz(num_sites);
  for (int k = 0; k < num_sites; ++k) sz.add(0.5, PauliSum::single_site_label(num_sites, k, 'Z'));
  return sz;
}

Statevector apply_charge_conjugation(const Statevector& state) {
  const std::size_t mask = state.dim() - 1;
  std::vector<Complex> out(state.dim());
  for (std::size_t i = 0; i < state.dim(); ++i) out[~i & mask] = state[i];
  return Statevector(state.num_qubits(), std::move(out));
}

Statevector reference_state(int num_sites) { return Statevector(num_sites); }

Spectrum exact_spectrum(const XxzParams& params) {
  params.validate();
  const int n = params.num_sites;
  if (n > kMaxDenseSites) {
    throw DomainError("exact diagonalization is capped at " + std::to_string(kMaxDenseSites) +
                      " sites, got " + std::to_string(n));
  }
  const auto h = build_hamiltonian(params);
  std::vector<std::pair<PauliMasks, double>> terms;
  for (const auto& t : h.terms()) terms.emplace_back(pauli_masks(t.label), t.coefficient);

  Spectrum spec;
  spec.params_ = params;
  const std::uint64_t dim = std::uint64_t{1} << n;

  struct Entry {
    double energy;
    int sector;
    Eigen::Index column;
  };
  std::vector<Entry> entries;

  for (int down = 0; down <= n; ++down) {
    Spectrum::Sector sector;
    sector.num_down = down;
    std::unordered_map<std::uint64_t, Eigen::Index> position;
    for (std::uint64_t b = 0; b < dim; ++b) {
      if (std::popcount(b) == down) {
        position[b] = static_cast<Eigen::Index>(sector.basis.size());
        sector.basis.push_back(b);
      }
    }
    const auto size = static_cast<Eigen::Index>(sector.basis.size());
    Eigen::MatrixXd block = Eigen::MatrixXd::Zero(size, size);
    for (Eigen::Index col = 0; col < size; ++col) {
      const std::uint64_t b = sector.basis[col];
      for (const auto& [m, c] : terms) {
        // i^{num_y} is real here: the XXZ strings carry zero or two Y's.
        const double iy = (m.num_y % 4 == 0) ? 1.0 : -1.0;
        const double sign = (std::popcount(b & m.phase_mask) & 1) ? -1.0 : 1.0;
        // XX and YY separately leave the sector on aligned pairs; their sum does not.
        const auto row = position.find(b ^ m.flip_mask);
        if (row == position.end()) continue;
        block(row->second, col) += c * iy * sign;
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block);
    if (solver.info() != Eigen::Success) {
      throw std::runtime_error("sector diagonalization failed");
    }
    sector.vectors = solver.eigenvectors();
    for (Eigen::Index k = 0; k < size; ++k) {
      entries.push_back({solver.eigenvalues()(k), down, k});
    }
    spec.sectors_.push_back(std::move(sector));
  }

  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.energy < b.energy; });
  for (const auto& e : entries) {
    spec.levels_.push_back({e.energy, 0.5 * n - e.sector});
    spec.location_.emplace_back(e.sector, e.column);
  }
  return spec;
}

Statevector Spectrum::eigenvector(std::size_t level) const {
  const auto [s, col] = location_.at(level);
  const auto& sector = sectors_[s];
  std::vector<Complex> amps(std::size_t{1} << params_.num_sites, Complex{});
  for (std::size_t k = 0; k < sector.basis.size(); ++k) {
    amps[sector.basis[k]] = sector.vectors(static_cast<Eigen::Index>(k), col);
  }
  return Statevector(params_.num_sites, std::move(amps));
}

double Spectrum::residual(std::size_t level) const {
  const auto v = eigenvector(level);
  const auto hv = apply(build_hamiltonian(params_), v);
  double sum = 0.0;
  for (std::size_t i = 0; i < v.dim(); ++i) sum += std::norm(hv[i] - levels_[level].energy * v[i]);
  return std::sqrt(sum);
}

}  // namespace bethevqe
