#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bethevqe/ansatz.hpp"
#include "bethevqe/pauli.hpp"

namespace bethevqe {

struct OptimizerConfig {
  double initial = 1.0;       // starting parameter p0
  double initial_step = 0.5;  // first bracketing step
  int max_evaluations = 60;
  double tolerance = 1e-8;    // absolute bracket width that counts as converged

  void validate() const;
};

using Trace = std::vector<std::pair<double, double>>;  // (p, objective)

struct ScalarMinimum {
  double x = 0.0;
  double f = 0.0;
  int evaluations = 0;
  bool converged = false;
  Trace trace;
};

/// Derivative-free 1-D minimization. A downhill bracket is grown from
/// `initial` with golden-ratio expansion, then Brent's method (parabolic
/// interpolation with golden-section fallback) shrinks it. Deterministic
/// for a deterministic objective. If the evaluation budget runs out the
/// best point seen is returned with converged = false.
ScalarMinimum minimize_scalar(const std::function<double(double)>& objective,
                              const OptimizerConfig& config);

struct ExactBackend {};

struct SampledBackend {
  std::int64_t shots = 1024;
  std::uint64_t seed = 0;
};

using Backend = std::variant<ExactBackend, SampledBackend>;

std::string describe(const Backend& backend);

struct VqeResult {
  int num_sites = 0;
  AnsatzTarget target = AnsatzTarget::FirstExcited;
  std::string backend;
  std::int64_t shots = 0;  // 0 for the exact backend
  std::uint64_t seed = 0;
  double energy = 0.0;     // |f*| for the second-excited target
  double p = 0.0;          // wrapped into (-pi, pi]
  int evaluations = 0;
  bool converged = false;
  Trace trace;             // raw objective values, in evaluation order

  /// Running minimum of the trace objective.
  std::vector<double> best_so_far() const;
};

/// Objective value of the trial circuit at parameter p: <H> on the exact
/// backend, the shot estimate on the sampled one. `evaluation` picks the
/// random stream of a sampled evaluation.
double trial_energy(const AnsatzSpec& ansatz, const PauliSum& hamiltonian,
                    const Backend& backend, double p, std::uint64_t evaluation = 0);

/// Minimizes the trial energy over p. The first-excited target minimizes
/// <H>; the second-excited target minimizes <-H> and reports the absolute
/// value of the optimum. Throws std::invalid_argument when the ansatz and
/// Hamiltonian widths differ.
VqeResult vqe_run(const AnsatzSpec& ansatz, const PauliSum& hamiltonian, const Backend& backend,
                  const OptimizerConfig& config);

/// Exact-backend <H> along a parameter grid.
std::vector<std::pair<double, double>> energy_landscape(const AnsatzSpec& ansatz,
                                                        const PauliSum& hamiltonian,
                                                        const std::vector<double>& p_grid);

/// cosh(eta) - cos(p) for two sites, cosh(eta) - cos^3(p) for four.
double landscape_closed_form(int num_sites, double p, double eta);

}  // namespace bethevqe
