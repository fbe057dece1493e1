#include "bethevqe/sampling.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "bethevqe/gate.hpp"
#include "bethevqe/simulator.hpp"

namespace bethevqe {

std::string to_string(MeasurementBasis basis) {
  switch (basis) {
    case MeasurementBasis::X: return "X";
    case MeasurementBasis::Y: return "Y";
    case MeasurementBasis::Z: return "Z";
  }
  return "?";
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (std::uint64_t{out[0]} << 32) | out[1];
}

Statevector rotate_to_basis(const Statevector& state, MeasurementBasis basis) {
  if (basis == MeasurementBasis::Z) return state;
  Circuit c(state.num_qubits());
  for (int q = 0; q < state.num_qubits(); ++q) {
    if (basis == MeasurementBasis::Y) c.append(Gate::u3(q, 0.0, 0.0, -kPi / 2.0));
    c.append(Gate::u3(q, kPi / 2.0, 0.0, kPi));
  }
  return run_circuit(c, state);
}

namespace {

std::string bitstring(std::uint64_t index, int n) {
  std::string s(n, '0');
  for (int q = 0; q < n; ++q) {
    if ((index >> q) & 1U) s[n - 1 - q] = '1';
  }
  return s;
}

std::vector<double> cumulative_probabilities(const Statevector& state) {
  std::vector<double> cdf(state.dim());
  double acc = 0.0;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    acc += std::norm(state[i]);
    cdf[i] = acc;
  }
  return cdf;
}

// Histogram over basis indices; uses the top 53 bits of each mt19937_64
// draw so the stream is bit-identical across standard libraries.
std::map<std::uint64_t, std::int64_t> draw(const Statevector& rotated, std::int64_t shots,
                                           std::uint64_t seed) {
  const auto cdf = cumulative_probabilities(rotated);
  const double total = cdf.back();
  std::mt19937_64 rng(seed);
  std::map<std::uint64_t, std::int64_t> counts;
  for (std::int64_t s = 0; s < shots; ++s) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
    // upper_bound never lands on a zero-probability entry.
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) {
      it = std::lower_bound(cdf.begin(), cdf.end(), total);
    }
    ++counts[static_cast<std::uint64_t>(it - cdf.begin())];
  }
  return counts;
}

struct SettingGroup {
  MeasurementBasis basis;
  std::vector<std::pair<double, std::uint64_t>> terms;  // coefficient, support mask
};

struct Grouping {
  double constant = 0.0;
  std::vector<SettingGroup> groups;  // X, Y, Z order, only non-empty ones
};

Grouping group_terms(const PauliSum& h) {
  Grouping g;
  std::array<SettingGroup, 3> all{SettingGroup{MeasurementBasis::X, {}},
                                  SettingGroup{MeasurementBasis::Y, {}},
                                  SettingGroup{MeasurementBasis::Z, {}}};
  for (const auto& t : h.terms()) {
    const auto basis = required_basis(t.label);
    if (!basis) {
      g.constant += t.coefficient;
      continue;
    }
    std::uint64_t support = 0;
    const int n = h.num_qubits();
    for (int i = 0; i < n; ++i) {
      if (t.label[i] != 'I') support |= std::uint64_t{1} << (n - 1 - i);
    }
    all[static_cast<int>(*basis)].terms.emplace_back(t.coefficient, support);
  }
  for (auto& s : all) {
    if (!s.terms.empty()) g.groups.push_back(std::move(s));
  }
  return g;
}

std::vector<std::int64_t> split_shots(std::int64_t shots, std::size_t settings) {
  std::vector<std::int64_t> out(settings, shots / static_cast<std::int64_t>(settings));
  for (std::size_t i = 0; i < static_cast<std::size_t>(shots % static_cast<std::int64_t>(settings)); ++i) {
    ++out[i];
  }
  for (auto s : out) {
    if (s < 1) throw std::invalid_argument("shot budget smaller than the number of settings");
  }
  return out;
}

double group_value(const SettingGroup& g, std::uint64_t outcome) {
  double v = 0.0;
  for (const auto& [c, mask] : g.terms) {
    v += (std::popcount(outcome & mask) & 1) ? -c : c;
  }
  return v;
}

}  // namespace

MeasurementRecord sample_counts(const Statevector& state, MeasurementBasis basis,
                                std::int64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  if (std::abs(state.norm() - 1.0) > 1e-8) {
    throw std::invalid_argument("sampling needs a normalized state");
  }
  MeasurementRecord rec;
  rec.basis = basis;
  rec.shots = shots;
  rec.seed = seed;
  for (const auto& [index, count] : draw(rotate_to_basis(state, basis), shots, seed)) {
    rec.histogram[bitstring(index, state.num_qubits())] = count;
  }
  return rec;
}

double parity_expectation(const MeasurementRecord& record, std::uint64_t support_mask,
                          int num_qubits) {
  double sum = 0.0;
  for (const auto& [bits, count] : record.histogram) {
    int parity = 0;
    for (int q = 0; q < num_qubits; ++q) {
      if (((support_mask >> q) & 1U) && bits[num_qubits - 1 - q] == '1') parity ^= 1;
    }
    sum += parity ? -static_cast<double>(count) : static_cast<double>(count);
  }
  return sum / static_cast<double>(record.shots);
}

std::optional<MeasurementBasis> required_basis(const std::string& label) {
  char letter = 'I';
  for (char c : label) {
    if (c == 'I') continue;
    if (letter != 'I' && c != letter) {
      throw std::invalid_argument("term '" + label +
                                  "' mixes Pauli letters; no uniform setting measures it");
    }
    letter = c;
  }
  switch (letter) {
    case 'X': return MeasurementBasis::X;
    case 'Y': return MeasurementBasis::Y;
    case 'Z': return MeasurementBasis::Z;
    default: return std::nullopt;
  }
}

double estimate_energy_sampled(const Statevector& state, const PauliSum& hamiltonian,
                               std::int64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  if (hamiltonian.num_qubits() != state.num_qubits()) {
    throw std::invalid_argument("Hamiltonian and state widths differ");
  }
  const auto grouping = group_terms(hamiltonian);
  double energy = grouping.constant;
  if (grouping.groups.empty()) return energy;
  const auto budget = split_shots(shots, grouping.groups.size());
  for (std::size_t s = 0; s < grouping.groups.size(); ++s) {
    const auto& g = grouping.groups[s];
    const auto counts =
        draw(rotate_to_basis(state, g.basis), budget[s], derive_seed(seed, s));
    double acc = 0.0;
    for (const auto& [outcome, count] : counts) {
      acc += static_cast<double>(count) * group_value(g, outcome);
    }
    energy += acc / static_cast<double>(budget[s]);
  }
  return energy;
}

double sampled_energy_standard_error(const Statevector& state, const PauliSum& hamiltonian,
                                     std::int64_t shots) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  const auto grouping = group_terms(hamiltonian);
  if (grouping.groups.empty()) return 0.0;
  const auto budget = split_shots(shots, grouping.groups.size());
  double variance = 0.0;
  for (std::size_t s = 0; s < grouping.groups.size(); ++s) {
    const auto& g = grouping.groups[s];
    const auto rotated = rotate_to_basis(state, g.basis);
    const double total = rotated.norm() * rotated.norm();
    double m1 = 0.0;
    double m2 = 0.0;
    for (std::size_t i = 0; i < rotated.dim(); ++i) {
      const double p = std::norm(rotated[i]) / total;
      if (p == 0.0) continue;
      const double v = group_value(g, i);
      m1 += p * v;
      m2 += p * v * v;
    }
    variance += std::max(0.0, m2 - m1 * m1) / static_cast<double>(budget[s]);
  }
  return std::sqrt(variance);
}

}  // namespace bethevqe
