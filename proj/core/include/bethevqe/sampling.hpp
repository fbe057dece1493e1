#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "bethevqe/pauli.hpp"
#include "bethevqe/statevector.hpp"

namespace bethevqe {

/// Uniform product measurement settings: every qubit measured in the same
/// Pauli eigenbasis.
enum class MeasurementBasis { X, Y, Z };

std::string to_string(MeasurementBasis basis);

struct MeasurementRecord {
  MeasurementBasis basis = MeasurementBasis::Z;
  std::int64_t shots = 0;
  /// Bitstring (qubit n-1 first) -> count. Counts sum to `shots`.
  std::map<std::string, std::int64_t> histogram;
  std::uint64_t seed = 0;
};

/// Child seed for stream `stream` of a run seeded with `seed`. Shot
/// experiments derive every random stream through this, so results are
/// reproducible from (seed, shots, setting order).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Rotates `state` so a Z measurement reads out `basis`: H on every qubit
/// for X, S-dagger then H for Y (both written as U3), nothing for Z.
Statevector rotate_to_basis(const Statevector& state, MeasurementBasis basis);

/// Draws `shots` bitstrings from the Born distribution of the rotated state.
MeasurementRecord sample_counts(const Statevector& state, MeasurementBasis basis,
                                std::int64_t shots, std::uint64_t seed);

/// Mean of prod_{q in support} (-1)^{bit q} over the histogram.
double parity_expectation(const MeasurementRecord& record, std::uint64_t support_mask,
                          int num_qubits);

/// The measurement setting a term needs, or nullopt for the identity string.
/// Throws std::invalid_argument for strings that mix letters (e.g. "XZ").
std::optional<MeasurementBasis> required_basis(const std::string& label);

/// Shot-based estimate of <psi|H|psi>. Terms are grouped by setting, the
/// shot budget is split evenly over the settings that occur (X, Y, Z
/// order, remainder to the earliest), and identity terms are added exactly.
double estimate_energy_sampled(const Statevector& state, const PauliSum& hamiltonian,
                               std::int64_t shots, std::uint64_t seed);

/// Analytic standard error of estimate_energy_sampled for the same budget.
double sampled_energy_standard_error(const Statevector& state, const PauliSum& hamiltonian,
                                     std::int64_t shots);

}  // namespace bethevqe
