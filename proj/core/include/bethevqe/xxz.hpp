#pragma once

#include <vector>

#include "bethevqe/pauli.hpp"
#include "bethevqe/statevector.hpp"

namespace bethevqe {

/// Largest chain handled by dense diagonalization and dense monodromy blocks.
inline constexpr int kMaxDenseSites = 12;

/// Periodic spin-1/2 XXZ chain, ferromagnetic regime.
struct XxzParams {
  int num_sites = 2;
  double eta = 1.0;  // anisotropy; the ZZ coupling is cosh(eta)

  /// Throws std::invalid_argument unless num_sites >= 2 and eta > 0.
  void validate() const;
};

/// H = -1/4 sum_k [X_k X_{k+1} + Y_k Y_{k+1} + cosh(eta) (Z_k Z_{k+1} - 1)]
/// with site N+1 identified with site 1. Site k lives on qubit k-1. The
/// constant is carried as one identity-string term, +N cosh(eta)/4.
PauliSum build_hamiltonian(const XxzParams& params);

/// S^z = 1/2 sum_k Z_k.
PauliSum build_sz(int num_sites);

/// Global spin flip: X on every qubit, i.e. amplitude i moves to ~i.
Statevector apply_charge_conjugation(const Statevector& state);

/// All spins up, (1,0)^{⊗N}: amplitude 1 at basis index 0.
Statevector reference_state(int num_sites);

struct SpectrumLevel {
  double energy = 0.0;
  double sz = 0.0;
};

/// Full spectrum of the chain. Diagonalization is done per S^z sector
/// (H conserves the number of flipped spins), so every eigenvector is also
/// an S^z eigenvector and degenerate levels come out in a fixed basis.
class Spectrum {
 public:
  const XxzParams& params() const noexcept { return params_; }
  /// Ascending energies; ties keep sector order (S^z descending).
  const std::vector<SpectrumLevel>& levels() const noexcept { return levels_; }
  std::size_t size() const noexcept { return levels_.size(); }

  Statevector eigenvector(std::size_t level) const;

  /// ||H v - E v|| for the given level, computed from the Pauli sum.
  double residual(std::size_t level) const;

 private:
  friend Spectrum exact_spectrum(const XxzParams& params);

  struct Sector {
    int num_down = 0;
    std::vector<std::uint64_t> basis;
    Eigen::MatrixXd vectors;  // columns are eigenvectors in `basis`
  };

  XxzParams params_;
  std::vector<SpectrumLevel> levels_;
  std::vector<Sector> sectors_;
  std::vector<std::pair<int, Eigen::Index>> location_;  // (sector, column) per level
};

/// Dense exact diagonalization. Throws DomainError above kMaxDenseSites.
Spectrum exact_spectrum(const XxzParams& params);

}  // namespace bethevqe
