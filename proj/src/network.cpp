#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/QR>

#include "nssbound/errors.hpp"
#include "nssbound/nelder_mead.hpp"
#include "nssbound/probability.hpp"

namespace nssbound {

namespace {

constexpr double kSingularTolerance = 1e-12;

Complex network_denominator(Complex l11) { return 1.0 + 2.0 * l11 - l11 * l11; }

}  // namespace

UnitaryThree::UnitaryThree(const Eigen::Matrix3cd& lambda) : lambda_(lambda) {
  const Eigen::Matrix3cd defect = lambda.adjoint() * lambda - Eigen::Matrix3cd::Identity();
  if (!(defect.cwiseAbs().maxCoeff() <= 1e-10)) {
    throw InvalidArgument("network matrix is not unitary");
  }
}

double network_probability(const UnitaryThree& u) {
  const Complex den = network_denominator(u(1, 1));
  if (std::abs(den) <= kSingularTolerance) {
    throw SingularNetworkError("network probability: |1 + 2 L11 - L11^2| vanishes");
  }
  const double prod = std::abs(u(1, 2) * u(1, 3) * u(2, 1) * u(3, 1));
  return 4.0 * prod * prod / std::norm(den);
}

std::array<Complex, 3> network_amplitudes(const UnitaryThree& u) {
  const Complex l11 = u(1, 1);
  // Permanent expansion of the (n+2)x(n+2) submatrix on modes {1^n, 2, 3}.
  const Complex p = u(2, 2) * u(3, 3) + u(2, 3) * u(3, 2);
  const Complex q = u(1, 2) * (u(2, 1) * u(3, 3) + u(3, 1) * u(2, 3)) +
                    u(1, 3) * (u(2, 1) * u(3, 2) + u(3, 1) * u(2, 2));
  const Complex x = u(1, 2) * u(1, 3) * u(2, 1) * u(3, 1);
  return {p, l11 * p + q, l11 * l11 * p + 2.0 * l11 * q + 2.0 * x};
}

double network_conditions_residual(const UnitaryThree& u) {
  const auto a = network_amplitudes(u);
  return std::max(std::abs(a[1] - a[0]), std::abs(a[2] + a[0]));
}

double unitarity_bound(Complex lambda11) {
  const double m2 = std::norm(lambda11);
  if (m2 > 1.0 + 1e-12) throw InvalidArgument("unitarity bound: |L11| > 1");
  const Complex den = network_denominator(lambda11);
  if (std::abs(den) <= kSingularTolerance) {
    throw SingularNetworkError("unitarity bound: |1 + 2 L11 - L11^2| vanishes");
  }
  const double a = std::max(0.0, 1.0 - m2);
  return a * a * a * a / (4.0 * std::norm(den));
}

PhaseMinimum phase_minimized_bound(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw InvalidArgument("phase-minimised bound: r outside [0, 1]");
  // The numerator does not depend on the phase: maximise |1 + 2L - L^2|^2.
  auto den2 = [r](double theta) {
    return std::norm(network_denominator(std::polar(r, theta)));
  };
  constexpr int kScan = 3600;
  const double step = 2.0 * std::numbers::pi / kScan;
  int best = 0;
  for (int i = 1; i < kScan; ++i) {
    if (den2(i * step) > den2(best * step)) best = i;
  }
  const auto peak = golden_section_maximize(den2, (best - 1) * step, (best + 1) * step, 1e-12);
  PhaseMinimum out;
  out.theta = std::remainder(peak.x, 2.0 * std::numbers::pi);
  out.bound = unitarity_bound(std::polar(r, out.theta));
  return out;
}

UnitaryThree random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Matrix3cd a;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) a(i, j) = Complex(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<Eigen::Matrix3cd> qr(a);
  Eigen::Matrix3cd q = qr.householderQ();
  const Eigen::Matrix3cd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 3; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return UnitaryThree(q);
}

}  // namespace nssbound
