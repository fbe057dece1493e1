#include "bethevqe/bethe_roots.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bethevqe/bethe.hpp"
#include "bethevqe/xxz.hpp"

namespace bethevqe {

Complex momentum_ratio(Complex v, double eta) {
  const Complex half{0.0, eta / 2.0};
  return std::sin(v + half) / std::sin(v - half);
}

double momentum_to_rapidity(double p, double eta) {
  // p in [0, 2pi) keeps sin(p/2) >= 0, so atan2 lands in [-pi/2, pi/2).
  double q = std::fmod(p, 2.0 * kPi);
  if (q < 0.0) q += 2.0 * kPi;
  double v = std::atan2(-std::tanh(eta / 2.0) * std::cos(q / 2.0), std::sin(q / 2.0));
  if (v <= -kPi / 2.0) v += kPi;
  return v;
}

double rapidity_to_momentum(double v, double eta) {
  return wrap_angle(-std::arg(momentum_ratio(Complex{v, 0.0}, eta)));
}

Complex rapidity_to_momentum(Complex v, double eta) {
  return kI * std::log(momentum_ratio(v, eta));
}

BetheRoots BetheRoots::from_momenta(int num_sites, double eta,
                                    const std::vector<double>& momenta) {
  BetheRoots r{num_sites, eta, {}};
  for (double p : momenta) r.rapidities.push_back(momentum_to_rapidity(p, eta));
  r.validate();
  return r;
}

BetheRoots BetheRoots::from_rapidities(int num_sites, double eta, std::vector<double> rapidities) {
  BetheRoots r{num_sites, eta, std::move(rapidities)};
  r.validate();
  return r;
}

std::vector<double> BetheRoots::momenta() const {
  std::vector<double> p;
  for (double v : rapidities) p.push_back(rapidity_to_momentum(v, eta));
  return p;
}

void BetheRoots::validate() const {
  if (num_sites < 1) throw std::invalid_argument("Bethe roots need N >= 1");
  if (!(eta > 0.0)) throw std::invalid_argument("Bethe roots need eta > 0");
  if (2 * num_magnons() > num_sites) {
    throw std::invalid_argument("M = " + std::to_string(num_magnons()) +
                                " exceeds floor(N/2) for N = " + std::to_string(num_sites));
  }
  for (double v : rapidities) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite rapidity");
  }
  for (std::size_t j = 0; j < rapidities.size(); ++j) {
    for (std::size_t k = j + 1; k < rapidities.size(); ++k) {
      if (std::abs(std::sin(rapidities[j] - rapidities[k])) <= 1e-8) {
        throw std::invalid_argument("Bethe roots " + std::to_string(j) + " and " +
                                    std::to_string(k) + " coincide");
      }
    }
  }
}

namespace {

// Largest singular value of the R-matrix: max(|a|, |b + c|, |b - c|).
double r_matrix_norm(double v, double eta) {
  const Complex half{0.0, eta / 2.0};
  const Complex a = std::sin(Complex{v, 0.0} + half);
  const Complex b = std::sin(Complex{v, 0.0} - half);
  const Complex c = kI * std::sinh(eta);
  return std::max({std::abs(a), std::abs(b + c), std::abs(b - c)});
}

// Applies the creation operators in order; when `check` is set, a step whose
// output is negligible against ||R||^N times its input counts as vanishing.
Statevector create(const BetheRoots& roots, bool check) {
  roots.validate();
  Statevector psi = reference_state(roots.num_sites);
  for (double v : roots.rapidities) {
    const double in = psi.norm();
    psi = apply_monodromy_block(MonodromyBlock::B, Complex{v, 0.0}, roots.eta, psi);
    if (check && !(psi.norm() > 1e-12 * std::pow(r_matrix_norm(v, roots.eta), roots.num_sites) * in)) {
      throw DomainError("Bethe vector vanishes; the roots are not admissible");
    }
  }
  return psi;
}

}  // namespace

Statevector bethe_vector(const BetheRoots& roots) { return create(roots, false); }

Statevector bethe_state(const BetheRoots& roots) { return create(roots, true).normalized(); }

Statevector one_magnon_state(int num_sites, double p, double eta) {
  return bethe_state(BetheRoots::from_momenta(num_sites, eta, {p}));
}

std::vector<double> bethe_residuals(const BetheRoots& roots) {
  const Complex ieta{0.0, roots.eta};
  std::vector<double> out;
  for (std::size_t j = 0; j < roots.rapidities.size(); ++j) {
    const Complex vj{roots.rapidities[j], 0.0};
    const Complex lhs = std::pow(momentum_ratio(vj, roots.eta), roots.num_sites);
    Complex rhs{1.0, 0.0};
    for (std::size_t k = 0; k < roots.rapidities.size(); ++k) {
      if (k == j) continue;
      const Complex u = vj - roots.rapidities[k];
      rhs *= std::sin(u + ieta) / std::sin(u - ieta);
    }
    out.push_back(std::abs(lhs - rhs));
  }
  return out;
}

double magnon_energy_normalization(double eta) {
  const double s = std::sinh(eta);
  return s * s;
}

double bethe_energy(const BetheRoots& roots) {
  const Complex half{0.0, roots.eta / 2.0};
  Complex sum{};
  for (double v : roots.rapidities) {
    const Complex den = std::sin(Complex{v, 0.0} + half) * std::sin(Complex{v, 0.0} - half);
    if (std::abs(den) < 1e-300) throw DomainError("singular rapidity in energy formula");
    sum += 1.0 / den;
  }
  return 0.5 * magnon_energy_normalization(roots.eta) * sum.real();
}

double phase_function(double x, double t) {
  const double s = std::sin(x);
  const double c = std::cos(x);
  return 2.0 * x + 2.0 * std::atan2((1.0 - t) * s * c, t * c * c + s * s);
}

double phase_function_derivative(double x, double t) {
  const double s = std::sin(x);
  const double c = std::cos(x);
  return 2.0 * t / (t * t * c * c + s * s);
}

namespace {

// Inverse of phase_function in its first argument.
double inverse_phase_function(double y, double t) {
  const double wraps = std::round(y / (2.0 * kPi));
  const double r = y - 2.0 * kPi * wraps;
  return std::atan2(t * std::sin(r / 2.0), std::cos(r / 2.0)) + kPi * wraps;
}

struct LogBethe {
  int n;
  double t_one;   // tanh(eta/2)
  double t_two;   // tanh(eta)
  std::vector<double> targets;  // 2 pi I_j

  Eigen::VectorXd residual(const Eigen::VectorXd& v) const {
    const auto m = v.size();
    Eigen::VectorXd f(m);
    for (Eigen::Index j = 0; j < m; ++j) {
      double acc = n * phase_function(v(j), t_one) - targets[j];
      for (Eigen::Index k = 0; k < m; ++k) {
        if (k != j) acc -= phase_function(v(j) - v(k), t_two);
      }
      f(j) = acc;
    }
    return f;
  }

  Eigen::MatrixXd jacobian(const Eigen::VectorXd& v) const {
    const auto m = v.size();
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index j = 0; j < m; ++j) {
      double diag = n * phase_function_derivative(v(j), t_one);
      for (Eigen::Index k = 0; k < m; ++k) {
        if (k == j) continue;
        const double d = phase_function_derivative(v(j) - v(k), t_two);
        diag -= d;
        jac(j, k) = d;
      }
      jac(j, j) = diag;
    }
    return jac;
  }

  Eigen::VectorXd fixed_point_step(const Eigen::VectorXd& v) const {
    const auto m = v.size();
    Eigen::VectorXd out(m);
    for (Eigen::Index j = 0; j < m; ++j) {
      double rhs = targets[j];
      for (Eigen::Index k = 0; k < m; ++k) {
        if (k != j) rhs += phase_function(v(j) - v(k), t_two);
      }
      out(j) = inverse_phase_function(rhs / n, t_one);
    }
    return out;
  }
};

}  // namespace

std::vector<double> default_quantum_numbers(int num_sites, int num_magnons) {
  std::vector<double> q;
  const bool shift = (num_sites % 2) != 0;
  for (int j = 0; j < num_magnons; ++j) {
    q.push_back(j - 0.5 * (num_magnons - 1) + (shift ? 0.5 : 0.0));
  }
  return q;
}

BetheSolution solve_bethe_real(int num_sites, int num_magnons, double eta,
                               const std::vector<double>& quantum_numbers,
                               const BetheSolverOptions& options) {
  if (num_sites < 1) throw std::invalid_argument("Bethe solver needs N >= 1");
  if (!(eta > 0.0)) throw std::invalid_argument("Bethe solver needs eta > 0");
  if (num_magnons < 0 || 2 * num_magnons > num_sites) {
    throw std::invalid_argument("M must satisfy 0 <= M <= floor(N/2)");
  }
  if (static_cast<int>(quantum_numbers.size()) != num_magnons) {
    throw std::invalid_argument("need exactly M quantum numbers");
  }
  const int parity = (num_sites - num_magnons + 1) & 1;
  for (std::size_t j = 0; j < quantum_numbers.size(); ++j) {
    const double twice = 2.0 * quantum_numbers[j];
    if (std::abs(twice - std::round(twice)) > 1e-12 ||
        (static_cast<long long>(std::llround(twice)) & 1) != parity) {
      throw std::invalid_argument("quantum numbers must lie in Z + (N - M + 1)/2");
    }
    for (std::size_t k = 0; k < j; ++k) {
      if (quantum_numbers[k] == quantum_numbers[j]) {
        throw std::invalid_argument("quantum numbers must be distinct");
      }
    }
  }

  LogBethe eq{num_sites, std::tanh(eta / 2.0), std::tanh(eta), {}};
  Eigen::VectorXd v(num_magnons);
  for (int j = 0; j < num_magnons; ++j) {
    eq.targets.push_back(2.0 * kPi * quantum_numbers[j]);
    v(j) = inverse_phase_function(eq.targets[j] / num_sites, eq.t_one);
  }

  BetheSolution sol;
  Eigen::VectorXd f = eq.residual(v);
  double fnorm = num_magnons ? f.lpNorm<Eigen::Infinity>() : 0.0;
  int polish = 0;
  int it = 0;
  for (; it < options.max_iterations && num_magnons > 0; ++it) {
    // Once close, keep taking Newton steps until they stop helping.
    if (fnorm < 1e-9 && ++polish > 3) break;
    const Eigen::VectorXd step = eq.jacobian(v).partialPivLu().solve(-f);
    double lambda = 1.0;
    bool accepted = false;
    while (lambda > 1e-6) {
      const Eigen::VectorXd trial = v + lambda * step;
      const Eigen::VectorXd ft = eq.residual(trial);
      const double tn = ft.lpNorm<Eigen::Infinity>();
      if (std::isfinite(tn) && tn < fnorm) {
        v = trial;
        f = ft;
        fnorm = tn;
        accepted = true;
        break;
      }
      lambda *= options.damping;
    }
    if (!accepted) {
      if (fnorm < 1e-9) break;  // at machine precision
      const Eigen::VectorXd trial = eq.fixed_point_step(v);
      const Eigen::VectorXd ft = eq.residual(trial);
      v = trial;
      f = ft;
      fnorm = ft.lpNorm<Eigen::Infinity>();
    }
  }
  sol.iterations = it;

  // Rapidities are defined modulo pi; report them in (-pi/2, pi/2].
  std::vector<double> roots(num_magnons);
  for (int j = 0; j < num_magnons; ++j) {
    double r = std::remainder(v(j), kPi);
    if (r <= -kPi / 2.0) r += kPi;
    roots[j] = r;
  }
  sol.roots = BetheRoots{num_sites, eta, roots};
  sol.quantum_numbers = quantum_numbers;
  sol.residuals = bethe_residuals(sol.roots);

  for (int j = 0; j < num_magnons; ++j) {
    for (int k = j + 1; k < num_magnons; ++k) {
      if (std::abs(std::sin(roots[j] - roots[k])) <= 1e-8) {
        throw ConvergenceError("Bethe roots collided during the solve", sol.residuals);
      }
    }
  }
  const double worst =
      sol.residuals.empty() ? 0.0 : *std::max_element(sol.residuals.begin(), sol.residuals.end());
  if (!(worst < options.tolerance)) {
    throw ConvergenceError("Bethe solver did not converge after " + std::to_string(it) +
                               " iterations (max residual " + std::to_string(worst) + ")",
                           sol.residuals);
  }
  sol.energy = bethe_energy(sol.roots);
  return sol;
}

Statevector TwoMagnonAmplitudes::vector() const {
  const Complex total = std::polar(1.0, p1 + p2);
  std::vector<Complex> a(16, Complex{});
  a[3] = total;
  a[5] = xi;
  a[6] = 1.0;
  a[9] = zeta;
  a[10] = std::conj(xi);
  a[12] = std::conj(total);
  return Statevector(4, std::move(a));
}

TwoMagnonAmplitudes two_magnon_components(double p1, double p2, double eta) {
  const Complex e1 = std::polar(1.0, p1);
  const Complex e2 = std::polar(1.0, p2);
  const Complex total = e1 * e2;
  const Complex den_xi = 1.0 + std::conj(total);
  const Complex den_zeta = 1.0 + total;
  if (std::abs(den_xi) < 1e-12 || std::abs(den_zeta) < 1e-12) {
    throw DomainError("two-magnon amplitudes are singular at p1 + p2 = pi (mod 2pi)");
  }
  const double ch = std::cosh(eta);
  TwoMagnonAmplitudes amp{p1, p2, eta, {}, {}};
  amp.xi = (e1 + std::conj(e1) + e2 + std::conj(e2) - 2.0 * ch) / den_xi;
  amp.zeta = (1.0 + e1 * e1 + e2 * e2 + e1 * std::conj(e2) + e2 * std::conj(e1) + total -
              2.0 * ch * (e1 + e2)) /
             den_zeta;
  return amp;
}

double collinearity_residual(const Statevector& a, const Statevector& b) {
  if (a.norm() == 0.0 || b.norm() == 0.0) return 1.0;
  return phase_insensitive_distance(a.normalized(), b.normalized());
}

}  // namespace bethevqe
