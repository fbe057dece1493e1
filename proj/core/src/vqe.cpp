#include "bethevqe/vqe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bethevqe/sampling.hpp"
#include "bethevqe/simulator.hpp"

namespace bethevqe {

void OptimizerConfig::validate() const {
  if (max_evaluations < 1) throw std::invalid_argument("optimizer budget must be >= 1");
  if (!(tolerance > 0.0)) throw std::invalid_argument("optimizer tolerance must be > 0");
  if (!(initial_step != 0.0) || !std::isfinite(initial_step)) {
    throw std::invalid_argument("initial step must be finite and nonzero");
  }
  if (!std::isfinite(initial)) throw std::invalid_argument("initial parameter must be finite");
}

namespace {

struct BudgetExhausted {};

class CountingObjective {
 public:
  CountingObjective(const std::function<double(double)>& f, int budget, Trace& trace)
      : f_(f), budget_(budget), trace_(trace) {}

  double operator()(double x) {
    if (static_cast<int>(trace_.size()) >= budget_) throw BudgetExhausted{};
    const double y = f_(x);
    trace_.emplace_back(x, y);
    return y;
  }

 private:
  const std::function<double(double)>& f_;
  int budget_;
  Trace& trace_;
};

constexpr double kGolden = 1.618033988749894848;
constexpr double kCGold = 0.3819660112501051518;  // 2 - golden ratio

}  // namespace

ScalarMinimum minimize_scalar(const std::function<double(double)>& objective,
                              const OptimizerConfig& config) {
  config.validate();
  ScalarMinimum out;
  CountingObjective f(objective, config.max_evaluations, out.trace);

  try {
    // Bracket: find a < b < c (or reversed) with f(b) <= f(a), f(b) <= f(c).
    double a = config.initial;
    double b = config.initial + config.initial_step;
    double fa = f(a);
    double fb = f(b);
    if (fb > fa) {
      std::swap(a, b);
      std::swap(fa, fb);
    }
    double c = b + kGolden * (b - a);
    double fc = f(c);
    while (fc < fb) {
      a = b;
      fa = fb;
      b = c;
      fb = fc;
      c = b + kGolden * (b - a);
      fc = f(c);
    }

    // Brent on [lo, hi] with the bracket's best interior point.
    double lo = std::min(a, c);
    double hi = std::max(a, c);
    double x = b, w = b, v = b;
    double fx = fb, fw = fb, fv = fb;
    double d = 0.0, e = 0.0;
    constexpr double kRel = 1.5e-8;  // ~sqrt(machine epsilon)
    for (;;) {
      const double mid = 0.5 * (lo + hi);
      const double tol1 = kRel * std::abs(x) + 0.5 * config.tolerance;
      const double tol2 = 2.0 * tol1;
      if (std::abs(x - mid) <= tol2 - 0.5 * (hi - lo)) {
        out.converged = true;
        break;
      }
      bool golden = true;
      if (std::abs(e) > tol1) {
        // Parabola through x, w, v.
        double r = (x - w) * (fx - fv);
        double q = (x - v) * (fx - fw);
        double pnum = (x - v) * q - (x - w) * r;
        q = 2.0 * (q - r);
        if (q > 0.0) pnum = -pnum;
        q = std::abs(q);
        const double etemp = e;
        e = d;
        if (std::abs(pnum) < std::abs(0.5 * q * etemp) && pnum > q * (lo - x) &&
            pnum < q * (hi - x)) {
          d = pnum / q;
          const double u = x + d;
          if (u - lo < tol2 || hi - u < tol2) d = std::copysign(tol1, mid - x);
          golden = false;
        }
      }
      if (golden) {
        e = (x >= mid) ? lo - x : hi - x;
        d = kCGold * e;
      }
      const double u = std::abs(d) >= tol1 ? x + d : x + std::copysign(tol1, d);
      const double fu = f(u);
      if (fu <= fx) {
        if (u >= x) lo = x; else hi = x;
        v = w; fv = fw;
        w = x; fw = fx;
        x = u; fx = fu;
      } else {
        if (u < x) lo = u; else hi = u;
        if (fu <= fw || w == x) {
          v = w; fv = fw;
          w = u; fw = fu;
        } else if (fu <= fv || v == x || v == w) {
          v = u; fv = fu;
        }
      }
    }
  } catch (const BudgetExhausted&) {
    out.converged = false;
  }

  const auto best = std::min_element(out.trace.begin(), out.trace.end(),
                                     [](const auto& l, const auto& r) { return l.second < r.second; });
  out.x = best->first;
  out.f = best->second;
  out.evaluations = static_cast<int>(out.trace.size());
  return out;
}

std::string describe(const Backend& backend) {
  if (std::holds_alternative<ExactBackend>(backend)) return "exact";
  return "shots";
}

std::vector<double> VqeResult::best_so_far() const {
  std::vector<double> out;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [p, e] : trace) {
    best = std::min(best, e);
    out.push_back(best);
  }
  return out;
}

double trial_energy(const AnsatzSpec& ansatz, const PauliSum& hamiltonian,
                    const Backend& backend, double p, std::uint64_t evaluation) {
  const auto state = run_circuit(one_magnon_circuit(ansatz.num_sites, p), Statevector(ansatz.num_sites));
  if (const auto* sampled = std::get_if<SampledBackend>(&backend)) {
    return estimate_energy_sampled(state, hamiltonian, sampled->shots,
                                   derive_seed(sampled->seed, evaluation));
  }
  return expectation(state, hamiltonian);
}

VqeResult vqe_run(const AnsatzSpec& ansatz, const PauliSum& hamiltonian, const Backend& backend,
                  const OptimizerConfig& config) {
  ansatz.validate();
  if (hamiltonian.num_qubits() != ansatz.num_sites) {
    throw std::invalid_argument("ansatz has " + std::to_string(ansatz.num_sites) +
                                " sites but the Hamiltonian acts on " +
                                std::to_string(hamiltonian.num_qubits()) + " qubits");
  }
  if (const auto* sampled = std::get_if<SampledBackend>(&backend); sampled && sampled->shots < 1) {
    throw std::invalid_argument("sampled backend needs shots >= 1");
  }
  const bool flip = ansatz.target == AnsatzTarget::SecondExcited;
  const PauliSum objective_op = flip ? -hamiltonian : hamiltonian;

  // Every evaluation reuses one sample stream. Fresh streams per call make the
  // minimum over the trace pick up downward noise; shared streams keep the
  // sampled landscape correlated across p.
  const std::function<double(double)> objective = [&](double p) {
    return trial_energy(ansatz, objective_op, backend, p, 0);
  };
  const auto min = minimize_scalar(objective, config);

  VqeResult r;
  r.num_sites = ansatz.num_sites;
  r.target = ansatz.target;
  r.backend = describe(backend);
  if (const auto* sampled = std::get_if<SampledBackend>(&backend)) {
    r.shots = sampled->shots;
    r.seed = sampled->seed;
  }
  r.energy = flip ? std::abs(min.f) : min.f;
  r.p = wrap_angle(min.x);
  r.evaluations = min.evaluations;
  r.converged = min.converged;
  r.trace = min.trace;
  return r;
}

std::vector<std::pair<double, double>> energy_landscape(const AnsatzSpec& ansatz,
                                                        const PauliSum& hamiltonian,
                                                        const std::vector<double>& p_grid) {
  ansatz.validate();
  if (p_grid.empty()) throw std::invalid_argument("landscape grid is empty");
  std::vector<std::pair<double, double>> out;
  out.reserve(p_grid.size());
  for (double p : p_grid) out.emplace_back(p, trial_energy(ansatz, hamiltonian, ExactBackend{}, p));
  return out;
}

double landscape_closed_form(int num_sites, double p, double eta) {
  switch (num_sites) {
    case 2: return std::cosh(eta) - std::cos(p);
    case 4: return std::cosh(eta) - std::pow(std::cos(p), 3);
    default:
      throw std::invalid_argument("closed-form landscape known for 2 or 4 sites only");
  }
}

}  // namespace bethevqe
