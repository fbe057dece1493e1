#pragma once

#include <vector>

#include "bethevqe/statevector.hpp"

namespace bethevqe {

/// sin(v + i eta/2) / sin(v - i eta/2), which equals e^{-ip}.
Complex momentum_ratio(Complex v, double eta);

/// Real rapidity in (-pi/2, pi/2] with momentum_ratio(v) = e^{-ip}.
/// Closed form tan v = -tanh(eta/2) cot(p/2); p = 0 mod 2pi maps to the
/// limit v = -pi/2, which is the same point as pi/2 since the ratio has
/// period pi in v.
double momentum_to_rapidity(double p, double eta);

/// Inverse of momentum_to_rapidity, p in (-pi, pi].
double rapidity_to_momentum(double v, double eta);

/// p = i log(momentum_ratio(v)) on the principal branch; real for real v.
Complex rapidity_to_momentum(Complex v, double eta);

/// A set of M real Bethe roots on an N-site chain. Rapidities are stored;
/// momenta are derived.
struct BetheRoots {
  int num_sites = 0;
  double eta = 1.0;
  std::vector<double> rapidities;

  static BetheRoots from_momenta(int num_sites, double eta, const std::vector<double>& momenta);
  static BetheRoots from_rapidities(int num_sites, double eta, std::vector<double> rapidities);

  int num_magnons() const noexcept { return static_cast<int>(rapidities.size()); }
  std::vector<double> momenta() const;

  /// Throws std::invalid_argument unless N >= 1, eta > 0, M <= N/2 and the
  /// roots are pairwise distinct modulo pi (|sin(v_j - v_k)| > 1e-8).
  void validate() const;
};

/// B(v_1) ... B(v_M)|Psi_0>, not normalized.
Statevector bethe_vector(const BetheRoots& roots);

/// Normalized Bethe vector. Throws DomainError when the vector vanishes.
Statevector bethe_state(const BetheRoots& roots);

/// Normalized one-magnon state B(p)|Psi_0>.
Statevector one_magnon_state(int num_sites, double p, double eta);

/// |LHS_j - RHS_j| of
///   (sin(v_j + i eta/2) / sin(v_j - i eta/2))^N
///     = prod_{k != j} sin(v_j - v_k + i eta) / sin(v_j - v_k - i eta).
std::vector<double> bethe_residuals(const BetheRoots& roots);

/// E = (sinh^2 eta / 2) sum_j 1 / (sin(v_j + i eta/2) sin(v_j - i eta/2)).
/// Per magnon this is cosh(eta) - cos(p_j).
double bethe_energy(const BetheRoots& roots);

/// The factor multiplying the bare magnon sum in bethe_energy.
double magnon_energy_normalization(double eta);

/// Quantum numbers of the logarithmic equations must lie in
/// Z + (N - M + 1)/2. Returns the set centred on zero, -(M-1)/2 .. (M-1)/2,
/// shifted by +1/2 when that set has the wrong parity (odd N).
std::vector<double> default_quantum_numbers(int num_sites, int num_magnons);

struct BetheSolverOptions {
  int max_iterations = 500;
  double damping = 0.5;          // backtracking factor on a rejected Newton step
  double tolerance = 1e-10;      // acceptance threshold on bethe_residuals
};

struct BetheSolution {
  BetheRoots roots;
  std::vector<double> quantum_numbers;
  std::vector<double> residuals;
  double energy = 0.0;
  int iterations = 0;
};

/// Real-root solution of the Bethe equations in logarithmic form
///   N P(v_j) - sum_{k != j} Phi(v_j - v_k) = 2 pi I_j,
/// with P and Phi the continuous phase functions for eta/2 and eta, solved
/// by Newton's method with backtracking and a fixed-point fallback.
/// Throws ConvergenceError when the budget runs out or roots collide.
BetheSolution solve_bethe_real(int num_sites, int num_magnons, double eta,
                               const std::vector<double>& quantum_numbers,
                               const BetheSolverOptions& options = {});

/// Continuous odd phase function 2 atan(tan x / t) extended so that
/// f(x + pi) = f(x) + 2 pi. Exposed for tests.
double phase_function(double x, double t);
double phase_function_derivative(double x, double t);

/// Closed-form two-magnon vector on four sites:
/// (0,0,0,e^{i(p1+p2)},0,xi,1,0,0,zeta,conj(xi),0,e^{-i(p1+p2)},0,0,0).
struct TwoMagnonAmplitudes {
  double p1 = 0.0;
  double p2 = 0.0;
  double eta = 1.0;
  Complex xi;
  Complex zeta;

  Statevector vector() const;  // unnormalized
};

/// Throws DomainError on the singular manifold p1 + p2 = pi (mod 2 pi).
TwoMagnonAmplitudes two_magnon_components(double p1, double p2, double eta);

/// Phase-insensitive distance between a/|a| and b/|b|: zero iff collinear.
double collinearity_residual(const Statevector& a, const Statevector& b);

}  // namespace bethevqe
