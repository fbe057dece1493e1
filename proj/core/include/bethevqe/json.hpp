#pragma once

#include <nlohmann/json.hpp>

#include "bethevqe/bethe_roots.hpp"
#include "bethevqe/statevector.hpp"
#include "bethevqe/vqe.hpp"
#include "bethevqe/xxz.hpp"

namespace bethevqe {

/// [[re, im], ...] in ascending basis-index order.
nlohmann::json statevector_to_json(const Statevector& state);
Statevector statevector_from_json(const nlohmann::json& j);

/// {"N", "eta", "levels": [{"E", "sz"}, ...]}
nlohmann::json spectrum_to_json(const Spectrum& spectrum);

/// {"N", "M", "eta", "p", "v_re", "v_im", "residuals", "energy"}
nlohmann::json roots_to_json(const BetheRoots& roots);

/// {"N", "eta", "target", "backend", "shots", "seed", "energy", "p",
///  "evaluations", "converged", "trace": [[p, E], ...]}
nlohmann::json vqe_result_to_json(const VqeResult& result, double eta);

}  // namespace bethevqe
