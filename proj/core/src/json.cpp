#include "bethevqe/json.hpp"

#include <cmath>

namespace bethevqe {

nlohmann::json statevector_to_json(const Statevector& state) {
  auto j = nlohmann::json::array();
  for (const auto& a : state.amplitudes()) j.push_back({a.real(), a.imag()});
  return j;
}

Statevector statevector_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("statevector JSON must be a non-empty array");
  std::vector<Complex> amps;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument("statevector JSON entries must be [re, im] pairs");
    }
    amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  const auto n = static_cast<int>(std::lround(std::log2(static_cast<double>(amps.size()))));
  return Statevector(n, std::move(amps));
}

nlohmann::json spectrum_to_json(const Spectrum& spectrum) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& l : spectrum.levels()) levels.push_back({{"E", l.energy}, {"sz", l.sz}});
  return {{"N", spectrum.params().num_sites}, {"eta", spectrum.params().eta}, {"levels", levels}};
}

nlohmann::json roots_to_json(const BetheRoots& roots) {
  std::vector<double> v_im(roots.rapidities.size(), 0.0);
  return {{"N", roots.num_sites},
          {"M", roots.num_magnons()},
          {"eta", roots.eta},
          {"p", roots.momenta()},
          {"v_re", roots.rapidities},
          {"v_im", v_im},
          {"residuals", bethe_residuals(roots)},
          {"energy", bethe_energy(roots)}};
}

nlohmann::json vqe_result_to_json(const VqeResult& result, double eta) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& [p, e] : result.trace) trace.push_back({p, e});
  return {{"N", result.num_sites},
          {"eta", eta},
          {"target", to_string(result.target)},
          {"backend", result.backend},
          {"shots", result.shots},
          {"seed", result.seed},
          {"energy", result.energy},
          {"p", result.p},
          {"evaluations", result.evaluations},
          {"converged", result.converged},
          {"trace", trace}};
}

}  // namespace bethevqe
