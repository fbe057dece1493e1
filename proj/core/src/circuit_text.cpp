#include "bethevqe/circuit_text.hpp"

#include <cstdio>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bethevqe {
namespace {

std::string number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string qubit(int q) { return "q[" + std::to_string(q) + "]"; }

}  // namespace

std::string emit_circuit_text(const Circuit& circuit) {
  std::ostringstream out;
  for (const auto& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::U3:
        out << "u3(" << number(g.params[0]) << ',' << number(g.params[1]) << ','
            << number(g.params[2]) << ") " << qubit(g.qubits[0]);
        break;
      case GateKind::CNOT:
      case GateKind::SWAP:
        out << to_string(g.kind) << ' ' << qubit(g.qubits[0]) << ',' << qubit(g.qubits[1]);
        break;
      default:
        out << to_string(g.kind) << ' ' << qubit(g.qubits[0]);
    }
    out << '\n';
  }
  return out.str();
}

Circuit parse_circuit_text(std::string_view text, int num_qubits) {
  static const std::regex u3_re(
      R"(^\s*u3\(\s*([^,\s]+)\s*,\s*([^,\s]+)\s*,\s*([^,\s\)]+)\s*\)\s*q\[(\d+)\]\s*;?\s*$)");
  static const std::regex one_re(R"(^\s*(x|z|h)\s+q\[(\d+)\]\s*;?\s*$)");
  static const std::regex two_re(R"(^\s*(cx|swap)\s+q\[(\d+)\]\s*,\s*q\[(\d+)\]\s*;?\s*$)");

  std::vector<std::pair<int, Gate>> gates;  // (line, gate)
  int widest = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("circuit text line " + std::to_string(lineno) + ": " + why);
  };
  auto angle = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      fail("bad angle '" + s + "'");
    }
    if (used != s.size()) fail("bad angle '" + s + "'");
    return v;
  };

  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line.compare(first, 2, "//") == 0 || line[first] == '#') continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::smatch m;
    Gate g;
    if (std::regex_match(line, m, u3_re)) {
      g = Gate::u3(std::stoi(m[4]), angle(m[1]), angle(m[2]), angle(m[3]));
    } else if (std::regex_match(line, m, one_re)) {
      const int q = std::stoi(m[2]);
      g = m[1] == "x" ? Gate::x(q) : m[1] == "z" ? Gate::z(q) : Gate::h(q);
    } else if (std::regex_match(line, m, two_re)) {
      const int a = std::stoi(m[2]);
      const int b = std::stoi(m[3]);
      g = m[1] == "cx" ? Gate::cnot(a, b) : Gate::swap(a, b);
    } else {
      fail("unrecognized gate '" + line + "'");
    }
    for (int k = 0; k < g.arity(); ++k) widest = std::max(widest, g.qubits[k] + 1);
    gates.emplace_back(lineno, g);
  }

  Circuit c(num_qubits > 0 ? num_qubits : std::max(widest, 1));
  for (const auto& [at, g] : gates) {
    try {
      c.append(g);
    } catch (const std::logic_error& e) {
      lineno = at;
      fail(e.what());
    }
  }
  return c;
}

}  // namespace bethevqe
