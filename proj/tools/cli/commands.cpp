#include "cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bethevqe/ansatz.hpp"
#include "bethevqe/bethe_roots.hpp"
#include "bethevqe/circuit_text.hpp"
#include "bethevqe/json.hpp"
#include "bethevqe/pauli.hpp"
#include "bethevqe/simulator.hpp"
#include "bethevqe/vqe.hpp"
#include "bethevqe/xxz.hpp"

#ifndef BETHEVQE_VERSION
#define BETHEVQE_VERSION "dev"
#endif

namespace bethevqe::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

fs::path resolve_output(const std::string& path) {
  fs::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("BETHEVQE_OUTPUT_DIR"); dir && *dir) {
      return fs::path(dir) / p;
    }
  }
  return p;
}

// Writes next to the destination and renames, so a failed run never leaves
// a truncated file behind.
void write_atomic(const std::string& path, const std::string& content) {
  const fs::path target = resolve_output(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << content;
    f.flush();
    if (!f) {
      f.close();
      fs::remove(tmp);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  fs::rename(tmp, target);
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json manifest(const std::string& subcommand, json flags, std::optional<std::uint64_t> seed) {
  json m = {{"subcommand", subcommand},
            {"flags", std::move(flags)},
            {"version", BETHEVQE_VERSION},
            {"timestamp", utc_timestamp()}};
  m["seed"] = seed ? json(*seed) : json(nullptr);
  return m;
}

std::string fixed(double x, int digits = 8) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string full(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
  int sites = 2;
  double eta = 1.0;
  std::string json_path;
};

int cmd_spectrum(const SpectrumArgs& a, std::ostream& out) {
  const auto spec = exact_spectrum(XxzParams{a.sites, a.eta});
  out << "# N=" << a.sites << " eta=" << full(a.eta) << " levels=" << spec.size() << '\n';
  out << "# index energy sz\n";
  for (std::size_t i = 0; i < spec.size(); ++i) {
    out << i << ' ' << fixed(spec.levels()[i].energy) << ' ' << spec.levels()[i].sz << '\n';
  }
  if (!a.json_path.empty()) {
    json j = spectrum_to_json(spec);
    j["manifest"] = manifest("spectrum", {{"sites", a.sites}, {"eta", a.eta}, {"json", a.json_path}},
                             std::nullopt);
    write_atomic(a.json_path, j.dump(2) + "\n");
  }
  return kSuccess;
}

// --------------------------------------------------------------------- vqe

struct VqeArgs {
  int sites = 2;
  double eta = 1.0;
  std::string target = "first";
  std::string backend = "exact";
  std::optional<std::int64_t> shots;
  std::uint64_t seed = 0;
  int budget = 60;
  double p0 = 1.0;
  std::string json_path;
};

int cmd_vqe(const VqeArgs& a, std::ostream& out) {
  if (a.sites != 2 && a.sites != 4) throw UsageError("--sites must be 2 or 4 for vqe");
  if (a.target == "second" && a.sites != 2) {
    throw UsageError("--target second is only available with --sites 2");
  }
  if (a.backend == "exact" && a.shots) throw UsageError("--shots requires --backend shots");

  const AnsatzSpec ansatz{a.sites, a.target == "second" ? AnsatzTarget::SecondExcited
                                                        : AnsatzTarget::FirstExcited};
  const std::int64_t shots = a.shots.value_or(a.sites == 2 ? 1024 : 8192);
  Backend backend = ExactBackend{};
  if (a.backend == "shots") backend = SampledBackend{shots, a.seed};

  OptimizerConfig config;
  config.initial = a.p0;
  config.max_evaluations = a.budget;

  const auto result = vqe_run(ansatz, build_hamiltonian(XxzParams{a.sites, a.eta}), backend, config);

  out << "vqe N=" << a.sites << " eta=" << full(a.eta) << " target=" << a.target
      << " backend=" << a.backend;
  if (a.backend == "shots") out << " shots=" << shots << " seed=" << a.seed;
  out << " energy=" << fixed(result.energy) << " p=" << fixed(result.p)
      << " evaluations=" << result.evaluations << (result.converged ? "" : " (budget exhausted)")
      << '\n';

  if (!a.json_path.empty()) {
    json j = vqe_result_to_json(result, a.eta);
    json flags = {{"sites", a.sites},   {"eta", a.eta},       {"target", a.target},
                  {"backend", a.backend}, {"budget", a.budget}, {"p0", a.p0},
                  {"json", a.json_path}};
    if (a.backend == "shots") {
      flags["shots"] = shots;
      flags["seed"] = a.seed;
    }
    j["manifest"] = manifest("vqe", flags,
                             a.backend == "shots" ? std::optional<std::uint64_t>(a.seed)
                                                  : std::nullopt);
    write_atomic(a.json_path, j.dump(2) + "\n");
  }
  return kSuccess;
}

// ------------------------------------------------------------------- bethe

struct BetheArgs {
  int sites = 2;
  int magnons = 1;
  double eta = 1.0;
  std::vector<double> quantum_numbers;
  std::vector<double> momenta;
  std::string json_path;
};

int cmd_bethe_solve(const BetheArgs& a, std::ostream& out) {
  const auto qn = a.quantum_numbers.empty() ? default_quantum_numbers(a.sites, a.magnons)
                                            : a.quantum_numbers;
  const auto sol = solve_bethe_real(a.sites, a.magnons, a.eta, qn);
  json j = roots_to_json(sol.roots);
  j["quantum_numbers"] = sol.quantum_numbers;
  j["iterations"] = sol.iterations;
  j["manifest"] = manifest("bethe solve",
                           {{"sites", a.sites},
                            {"magnons", a.magnons},
                            {"eta", a.eta},
                            {"quantum_numbers", qn},
                            {"json", a.json_path}},
                           std::nullopt);
  out << j.dump(2) << '\n';
  if (!a.json_path.empty()) write_atomic(a.json_path, j.dump(2) + "\n");
  return kSuccess;
}

int cmd_bethe_verify(const BetheArgs& a, std::ostream& out) {
  if (static_cast<int>(a.momenta.size()) != a.magnons) {
    throw UsageError("--p must list exactly --magnons values");
  }
  const auto roots = BetheRoots::from_momenta(a.sites, a.eta, a.momenta);
  json j = roots_to_json(roots);
  if (a.sites <= kMaxDenseSites) {
    const auto psi = bethe_state(roots);
    const auto h = build_hamiltonian(XxzParams{a.sites, a.eta});
    const auto hpsi = apply(h, psi);
    const double e = bethe_energy(roots);
    double r2 = 0.0;
    for (std::size_t i = 0; i < psi.dim(); ++i) r2 += std::norm(hpsi[i] - e * psi[i]);
    j["eigenstate_residual"] = std::sqrt(r2);
    j["expectation"] = expectation(psi, h);
  }
  j["manifest"] = manifest("bethe verify",
                           {{"sites", a.sites},
                            {"magnons", a.magnons},
                            {"eta", a.eta},
                            {"p", a.momenta},
                            {"json", a.json_path}},
                           std::nullopt);
  out << j.dump(2) << '\n';
  if (!a.json_path.empty()) write_atomic(a.json_path, j.dump(2) + "\n");
  return kSuccess;
}

// ------------------------------------------------------------------- sweep

struct SweepArgs {
  int sites = 2;
  double eta = 1.0;
  int points = 181;
  std::string csv_path;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  if (a.sites != 2 && a.sites != 4) throw UsageError("--sites must be 2 or 4 for sweep");
  if (a.points < 2) throw UsageError("--points must be at least 2");
  std::vector<double> grid;
  for (int k = 0; k < a.points; ++k) grid.push_back(-kPi + 2.0 * kPi * k / (a.points - 1));
  const auto landscape = energy_landscape(AnsatzSpec{a.sites, AnsatzTarget::FirstExcited},
                                          build_hamiltonian(XxzParams{a.sites, a.eta}), grid);
  std::ostringstream csv;
  csv << "p,energy,closed_form,abs_diff\n";
  double worst = 0.0;
  for (const auto& [p, e] : landscape) {
    const double closed = landscape_closed_form(a.sites, p, a.eta);
    const double diff = std::abs(e - closed);
    worst = std::max(worst, diff);
    csv << full(p) << ',' << full(e) << ',' << full(closed) << ',' << full(diff) << '\n';
  }
  write_atomic(a.csv_path, csv.str());
  out << "sweep N=" << a.sites << " eta=" << full(a.eta) << " points=" << a.points
      << " max abs_diff=" << full(worst) << '\n';
  return kSuccess;
}

// ----------------------------------------------------------------- circuit

struct CircuitArgs {
  int sites = 2;
  double p = 0.0;
  std::string out_path;
  std::string in_path;
  std::string json_path;
};

int cmd_circuit_emit(const CircuitArgs& a, std::ostream& out) {
  if (a.sites != 2 && a.sites != 4) throw UsageError("--sites must be 2 or 4 for circuit emit");
  const auto text = emit_circuit_text(one_magnon_circuit(a.sites, a.p));
  if (a.out_path.empty()) {
    out << text;
  } else {
    write_atomic(a.out_path, text);
  }
  return kSuccess;
}

int cmd_circuit_run(const CircuitArgs& a, std::ostream& out) {
  std::ifstream f(a.in_path);
  if (!f) throw UsageError("cannot read " + a.in_path);
  std::stringstream buf;
  buf << f.rdbuf();
  const auto circuit = parse_circuit_text(buf.str());
  const auto state = run_circuit(circuit, Statevector(circuit.num_qubits()));
  json j = {{"num_qubits", circuit.num_qubits()},
            {"gates", circuit.size()},
            {"amplitudes", statevector_to_json(state)}};
  j["manifest"] = manifest("circuit run", {{"in", a.in_path}, {"json", a.json_path}},
                           std::nullopt);
  out << j.dump(2) << '\n';
  if (!a.json_path.empty()) write_atomic(a.json_path, j.dump(2) + "\n");
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"XXZ chain VQE and Bethe ansatz laboratory", "bethevqe"};
  app.require_subcommand(1);
  app.set_version_flag("--version", BETHEVQE_VERSION);

  SpectrumArgs spectrum_args;
  auto* spectrum = app.add_subcommand("spectrum", "Exact spectrum by dense diagonalization");
  spectrum->add_option("--sites", spectrum_args.sites, "Chain length N (<= 12)")->required();
  spectrum->add_option("--eta", spectrum_args.eta, "Anisotropy eta > 0")->capture_default_str();
  spectrum->add_option("--json", spectrum_args.json_path, "Write the spectrum as JSON");

  VqeArgs vqe_args;
  std::int64_t shots_flag = 0;
  auto* vqe = app.add_subcommand("vqe", "Variational search over the one-magnon parameter");
  vqe->add_option("--sites", vqe_args.sites, "2 or 4")->required();
  vqe->add_option("--eta", vqe_args.eta, "Anisotropy eta > 0")->capture_default_str();
  vqe->add_option("--target", vqe_args.target, "first or second excited level")
      ->check(CLI::IsMember({"first", "second"}))
      ->capture_default_str();
  vqe->add_option("--backend", vqe_args.backend, "exact or shots")
      ->check(CLI::IsMember({"exact", "shots"}))
      ->capture_default_str();
  auto* shots_opt = vqe->add_option("--shots", shots_flag, "Total shots per energy evaluation")
                        ->check(CLI::PositiveNumber);
  vqe->add_option("--seed", vqe_args.seed, "Seed of the shot sampler")->capture_default_str();
  vqe->add_option("--budget", vqe_args.budget, "Maximum objective evaluations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  vqe->add_option("--p0", vqe_args.p0, "Starting parameter")->capture_default_str();
  vqe->add_option("--json", vqe_args.json_path, "Write the result as JSON");

  BetheArgs bethe_args;
  auto* bethe = app.add_subcommand("bethe", "Bethe equations: solve or verify roots");
  bethe->require_subcommand(1);
  auto* solve = bethe->add_subcommand("solve", "Solve for real roots");
  solve->add_option("--sites", bethe_args.sites, "Chain length N")->required();
  solve->add_option("--magnons", bethe_args.magnons, "Number of magnons M <= N/2")->required();
  solve->add_option("--eta", bethe_args.eta, "Anisotropy eta > 0")->capture_default_str();
  solve->add_option("--quantum-numbers", bethe_args.quantum_numbers,
                    "Comma-separated I_j (default: centred set)")
      ->delimiter(',');
  solve->add_option("--json", bethe_args.json_path, "Write the root set as JSON");
  auto* verify = bethe->add_subcommand("verify", "Check given momenta against the equations");
  verify->add_option("--sites", bethe_args.sites, "Chain length N")->required();
  verify->add_option("--magnons", bethe_args.magnons, "Number of magnons M")->required();
  verify->add_option("--p", bethe_args.momenta, "Comma-separated momenta")
      ->delimiter(',')
      ->required();
  verify->add_option("--eta", bethe_args.eta, "Anisotropy eta > 0")->capture_default_str();
  verify->add_option("--json", bethe_args.json_path, "Write the report as JSON");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Energy landscape of the trial state");
  sweep->add_option("--sites", sweep_args.sites, "2 or 4")->required();
  sweep->add_option("--eta", sweep_args.eta, "Anisotropy eta > 0")->capture_default_str();
  sweep->add_option("--points", sweep_args.points, "Grid points on [-pi, pi]")
      ->capture_default_str();
  sweep->add_option("--csv", sweep_args.csv_path, "Output CSV")->required();

  CircuitArgs circuit_args;
  auto* circuit = app.add_subcommand("circuit", "Trial-state circuits as gate text");
  circuit->require_subcommand(1);
  auto* emit = circuit->add_subcommand("emit", "Print the trial circuit");
  emit->add_option("--sites", circuit_args.sites, "2 or 4")->required();
  emit->add_option("--p", circuit_args.p, "Variational parameter")->required();
  emit->add_option("--out", circuit_args.out_path, "Write to a file instead of stdout");
  auto* run_cmd = circuit->add_subcommand("run", "Simulate a gate-text file from |0...0>");
  run_cmd->add_option("--in", circuit_args.in_path, "Gate text file")->required();
  run_cmd->add_option("--json", circuit_args.json_path, "Write the amplitudes as JSON");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << BETHEVQE_VERSION << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "bethevqe: usage error: " << e.what() << '\n';
    return kUsageError;
  }
  if (*shots_opt) vqe_args.shots = shots_flag;

  try {
    if (*spectrum) return cmd_spectrum(spectrum_args, out);
    if (*vqe) return cmd_vqe(vqe_args, out);
    if (*solve) return cmd_bethe_solve(bethe_args, out);
    if (*verify) return cmd_bethe_verify(bethe_args, out);
    if (*sweep) return cmd_sweep(sweep_args, out);
    if (*emit) return cmd_circuit_emit(circuit_args, out);
    if (*run_cmd) return cmd_circuit_run(circuit_args, out);
  } catch (const UsageError& e) {
    err << "bethevqe: usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "bethevqe: usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ConvergenceError& e) {
    err << "bethevqe: error: " << e.what() << "; residuals";
    for (double r : e.residuals()) err << ' ' << full(r);
    err << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "bethevqe: error: " << e.what() << '\n';
    return kDomainError;
  }
  err << "bethevqe: usage error: no subcommand\n";
  return kUsageError;
}

}  // namespace bethevqe::cli
