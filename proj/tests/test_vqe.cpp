#include <cmath>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "bethevqe/json.hpp"
#include "bethevqe/vqe.hpp"
#include "bethevqe/xxz.hpp"
#include "oracle.hpp"

using namespace bethevqe;

namespace {
double mod_two_pi(double x) { return std::remainder(x, 2 * kPi); }
}  // namespace

TEST(MinimizeScalar, CosineWell) {
  OptimizerConfig cfg;
  cfg.initial = 0.8;
  const auto r = minimize_scalar([](double p) { return std::cosh(1.0) - std::cos(p); }, cfg);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(mod_two_pi(r.x), 0.0, 1e-3);
  EXPECT_NEAR(r.f, 0.54308063, 1e-6);
}

TEST(MinimizeScalar, InvertedCosine) {
  OptimizerConfig cfg;
  cfg.initial = 2.0;
  const auto r = minimize_scalar([](double p) { return std::cos(p) - std::cosh(1.0); }, cfg);
  EXPECT_NEAR(std::abs(mod_two_pi(r.x)), kPi, 1e-3);
  EXPECT_NEAR(r.f, -2.54308063, 1e-6);
}

TEST(MinimizeScalar, QuadraticBowl) {
  OptimizerConfig cfg;
  cfg.initial = 5.0;
  cfg.max_evaluations = 200;
  const auto r = minimize_scalar([](double p) { return (p - 1) * (p - 1); }, cfg);
  EXPECT_NEAR(r.x, 1.0, 1e-8);
}

TEST(MinimizeScalar, BudgetExhaustion) {
  OptimizerConfig cfg;
  cfg.initial = 5.0;
  cfg.max_evaluations = 4;
  const auto r = minimize_scalar([](double p) { return (p - 1) * (p - 1); }, cfg);
  EXPECT_FALSE(r.converged);
  EXPECT_LE(r.trace.size(), 4u);
  double best = 1e300;
  for (const auto& [x, f] : r.trace) best = std::min(best, f);
  EXPECT_EQ(r.f, best);
}

TEST(MinimizeScalar, ConfigValidation) {
  OptimizerConfig cfg;
  cfg.max_evaluations = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.tolerance = 0.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Vqe, TwoSitesFirstExcited) {
  const auto r = vqe_run({2, AnsatzTarget::FirstExcited}, build_hamiltonian({2, 1.0}),
                         ExactBackend{}, {});
  EXPECT_NEAR(r.energy, 0.54308063, 1e-6);
  EXPECT_NEAR(r.p, 0.0, 1e-3);
  EXPECT_EQ(r.backend, "exact");
}

TEST(Vqe, TwoSitesSecondExcited) {
  const auto r = vqe_run({2, AnsatzTarget::SecondExcited}, build_hamiltonian({2, 1.0}),
                         ExactBackend{}, {});
  EXPECT_NEAR(r.energy, 2.54308063, 1e-6);
  EXPECT_NEAR(std::abs(r.p), kPi, 1e-3);
  EXPECT_GT(r.p, -kPi);
  EXPECT_LE(r.p, kPi);
}

TEST(Vqe, FourSites) {
  const auto r = vqe_run({4, AnsatzTarget::FirstExcited}, build_hamiltonian({4, 1.0}),
                         ExactBackend{}, {});
  EXPECT_NEAR(r.energy, 0.54308063, 1e-4);
  EXPECT_NEAR(r.p, 0.0, 1e-2);
}

TEST(Vqe, RecordInvariants) {
  const auto r = vqe_run({4, AnsatzTarget::FirstExcited}, build_hamiltonian({4, 1.0}),
                         SampledBackend{2048, 5}, {});
  EXPECT_LE(r.trace.size(), 60u);
  EXPECT_EQ(static_cast<std::size_t>(r.evaluations), r.trace.size());
  const auto best = r.best_so_far();
  for (std::size_t i = 1; i < best.size(); ++i) EXPECT_LE(best[i], best[i - 1]);
  EXPECT_EQ(r.energy, best.back());
}

TEST(Vqe, MismatchedSizes) {
  EXPECT_THROW(vqe_run({4, AnsatzTarget::FirstExcited}, build_hamiltonian({2, 1.0}),
                       ExactBackend{}, {}),
               std::invalid_argument);
  EXPECT_THROW(vqe_run({2, AnsatzTarget::FirstExcited}, build_hamiltonian({2, 1.0}),
                       SampledBackend{0, 1}, {}),
               std::invalid_argument);
}

TEST(Vqe, DeterministicJson) {
  const auto h = build_hamiltonian({4, 1.0});
  const auto a = vqe_run({4, AnsatzTarget::FirstExcited}, h, SampledBackend{1000, 9}, {});
  const auto b = vqe_run({4, AnsatzTarget::FirstExcited}, h, SampledBackend{1000, 9}, {});
  EXPECT_EQ(vqe_result_to_json(a, 1.0).dump(), vqe_result_to_json(b, 1.0).dump());
}

TEST(Landscape, ClosedFormsOnDenseGrids) {
  for (int n : {2, 4}) {
    for (double eta : {0.5, 1.0, 2.0}) {
      std::vector<double> grid;
      for (int k = 0; k < 181; ++k) grid.push_back(-kPi + 2 * kPi * k / 180);
      const auto land = energy_landscape({n, AnsatzTarget::FirstExcited},
                                         build_hamiltonian({n, eta}), grid);
      for (const auto& [p, e] : land) {
        const double c = std::cos(p);
        const double closed = std::cosh(eta) - (n == 2 ? c : c * c * c);
        EXPECT_NEAR(e, closed, 1e-10);
        EXPECT_NEAR(landscape_closed_form(n, p, eta), closed, 1e-15);
      }
    }
  }
}

TEST(Landscape, CoincidentNodes) {
  for (int n : {2, 4}) {
    const auto land = energy_landscape({n, AnsatzTarget::FirstExcited}, build_hamiltonian({n, 1.0}),
                                       {0.0, kPi / 2, kPi});
    EXPECT_NEAR(land[0].second, 0.54308063, 5e-9);
    EXPECT_NEAR(land[1].second, 1.54308063, 5e-9);
    EXPECT_NEAR(land[2].second, 2.54308063, 5e-9);
  }
  EXPECT_THROW(energy_landscape({2, AnsatzTarget::FirstExcited}, build_hamiltonian({2, 1.0}), {}),
               std::invalid_argument);
}

TEST(Landscape, GridMinimumMatchesVqe) {
  std::vector<double> grid;
  for (int k = 0; k < 721; ++k) grid.push_back(-kPi + 2 * kPi * k / 720);
  const auto h = build_hamiltonian({4, 1.3});
  const auto land = energy_landscape({4, AnsatzTarget::FirstExcited}, h, grid);
  double best = 1e300;
  for (const auto& [p, e] : land) best = std::min(best, e);
  const auto r = vqe_run({4, AnsatzTarget::FirstExcited}, h, ExactBackend{}, {});
  EXPECT_NEAR(r.energy, best, 1e-6);
}

TEST(Json, StatevectorRoundTrip) {
  std::mt19937_64 rng(1);
  const auto s = oracle::random_state(3, rng);
  const auto back = statevector_from_json(statevector_to_json(s));
  for (std::size_t i = 0; i < s.dim(); ++i) EXPECT_EQ(back[i], s[i]);
  EXPECT_THROW(statevector_from_json(nlohmann::json::array({{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}})),
               std::invalid_argument);
}

TEST(Json, SpectrumAndResultFields) {
  const auto j = spectrum_to_json(exact_spectrum({2, 1.0}));
  EXPECT_EQ(j.at("N"), 2);
  EXPECT_EQ(j.at("levels").size(), 4u);
  const auto r = vqe_run({2, AnsatzTarget::FirstExcited}, build_hamiltonian({2, 1.0}),
                         ExactBackend{}, {});
  const auto rj = vqe_result_to_json(r, 1.0);
  for (const char* key : {"N", "eta", "target", "backend", "energy", "p", "evaluations", "trace"}) {
    EXPECT_TRUE(rj.contains(key)) << key;
  }
}
