#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace bethevqe {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr Complex kI{0.0, 1.0};

// Hard cap on dense statevectors: 2^24 amplitudes is 256 MiB.
inline constexpr int kMaxQubits = 24;

// Raised when an input lies outside the mathematical domain of an operation
// (singular denominators, sizes above a dense cap, vanishing Bethe vectors).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised by iterative solvers that exhaust their budget. Carries the final
// residuals so callers can report how far off the iterate was.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> residuals)
      : std::runtime_error(what), residuals_(std::move(residuals)) {}
  const std::vector<double>& residuals() const noexcept { return residuals_; }

 private:
  std::vector<double> residuals_;
};

// Wraps an angle into (-pi, pi].
double wrap_angle(double x);

}  // namespace bethevqe
