#include "nssbound/ancilla.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nssbound/errors.hpp"

namespace nssbound {

namespace {

constexpr double kNormalisationTolerance = 1e-12;
constexpr double kNormCrossCheck = 1e-10;

double sum_of_squares(std::span<const double> w) {
  double s = 0.0;
  for (double x : w) s += x * x;
  return s;
}

}  // namespace

AncillaSpec::AncillaSpec(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw InvalidArgument("ancilla: no weights");
  for (double w : weights_) {
    if (!std::isfinite(w)) throw InvalidArgument("ancilla: non-finite weight");
  }
  const double s = sum_of_squares(weights_);
  if (std::abs(s - 1.0) > kNormalisationTolerance) {
    throw InvalidArgument("ancilla: sum of squared weights is " + std::to_string(s));
  }
}

AncillaSpec AncillaSpec::two_weight(int m, int n, double gamma) {
  if (m < 0 || n < 0) throw InvalidArgument("ancilla: negative photon number");
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw InvalidArgument("ancilla: gamma outside [0, 1]");
  std::vector<double> w(static_cast<std::size_t>(std::max(m, n)) + 1, 0.0);
  if (m == n) {
    w[m] = 1.0;
  } else {
    w[m] = gamma;
    w[n] = std::sqrt(std::max(0.0, 1.0 - gamma * gamma));
  }
  return AncillaSpec(std::move(w));
}

AncillaSpec AncillaSpec::three_dim(double gamma1, double gamma2) {
  const double rest = 1.0 - gamma1 * gamma1 - gamma2 * gamma2;
  if (rest < -kNormalisationTolerance) {
    throw InvalidArgument("ancilla: gamma1^2 + gamma2^2 exceeds 1");
  }
  return AncillaSpec({gamma1, gamma2, std::sqrt(std::max(0.0, rest))});
}

SignalState SignalState::make(Complex c0, Complex c1, Complex c2) {
  const double s = std::norm(c0) + std::norm(c1) + std::norm(c2);
  if (std::abs(s - 1.0) > kNormalisationTolerance) {
    throw InvalidArgument("signal: amplitudes are not normalised");
  }
  return SignalState{{c0, c1, c2}};
}

ComplexVector PsiSystem::psi(int l) const {
  const double n = norms.at(static_cast<std::size_t>(l));
  if (!(n > 0.0)) throw DegenerateError("psi_" + std::to_string(l) + " has zero norm");
  return phi[l] / std::sqrt(n);
}

std::array<double, 3> closed_form_norms(const AncillaSpec& anc, const BeamSplitter& bs) {
  const double t2 = std::norm(bs.t());
  const double r2 = 1.0 - t2;
  std::array<double, 3> out{0.0, 0.0, 0.0};
  for (int k = 0; k <= anc.total_photons(); ++k) {
    const double g2 = anc.weight(k) * anc.weight(k);
    if (g2 == 0.0) continue;
    out[0] += g2 * std::pow(t2, k);

    if (k == 0) {
      out[1] += g2 * t2;
    } else {
      const double b = (k + 1) * t2 - k;
      out[1] += g2 * std::pow(t2, k - 1) * b * b;
    }

    if (k == 0) {
      out[2] += g2 * t2 * t2;
    } else if (k == 1) {
      const double b = 3.0 * t2 - 2.0;
      out[2] += g2 * t2 * b * b;
    } else {
      const double b = t2 * t2 - 2.0 * k * t2 * r2 + 0.5 * k * (k - 1) * r2 * r2;
      out[2] += g2 * std::pow(t2, k - 2) * b * b;
    }
  }
  return out;
}

PsiSystem build_psi_system(const AncillaSpec& anc, const BeamSplitter& bs) {
  const int dim = anc.total_photons() + 1;
  PsiSystem ps;
  for (int l = 0; l < 3; ++l) {
    ps.phi[l] = ComplexVector::Zero(dim);
    for (int k = 0; k < dim; ++k) {
      const double g = anc.weight(k);
      if (g != 0.0) ps.phi[l][k] = g * diagonal_element(bs, {l, k});
    }
    ps.norms[l] = ps.phi[l].squaredNorm();
  }

  const auto expected = closed_form_norms(anc, bs);
  for (int l = 0; l < 3; ++l) {
    if (std::abs(expected[l] - ps.norms[l]) > kNormCrossCheck) {
      throw std::logic_error("psi system: N_" + std::to_string(l) +
                             " disagrees with its closed form");
    }
  }
  return ps;
}

double signal_fidelity(const SignalState& target, const SignalState& output) {
  Complex overlap{};
  for (int l = 0; l < 3; ++l) overlap += std::conj(target.c[l]) * output.c[l];
  return std::norm(overlap);
}

GateOutcome apply_conditional_gate(const SignalState& sig, const AncillaSpec& anc,
                                   const BeamSplitter& bs, const ComplexVector& detection) {
  const PsiSystem ps = build_psi_system(anc, bs);
  if (detection.size() != ps.phi[0].size()) {
    throw InvalidArgument("detection: dimension does not match the ancilla");
  }
  if (std::abs(detection.norm() - 1.0) > 1e-10) {
    throw InvalidArgument("detection: not normalised");
  }

  std::array<Complex, 3> amp{};
  double prob = 0.0;
  for (int l = 0; l < 3; ++l) {
    amp[l] = sig.c[l] * detection.dot(ps.phi[l]);
    prob += std::norm(amp[l]);
  }
  if (prob <= 1e-28) {
    throw DegenerateError("conditional gate: detection is orthogonal to every branch");
  }

  // Orthonormal basis of span{phi_l} for the leakage estimate.
  std::vector<ComplexVector> basis;
  for (int l = 0; l < 3; ++l) {
    ComplexVector v = ps.phi[l];
    for (const auto& e : basis) v -= e.dot(v) * e;
    for (const auto& e : basis) v -= e.dot(v) * e;
    const double nv = v.norm();
    if (nv > 1e-10 * std::max(1.0, std::sqrt(ps.norms[l]))) basis.push_back(v / nv);
  }
  double inside = 0.0;
  for (const auto& e : basis) inside += std::norm(e.dot(detection));

  GateOutcome out;
  const double scale = 1.0 / std::sqrt(prob);
  out.output = SignalState{{amp[0] * scale, amp[1] * scale, amp[2] * scale}};
  out.probability = prob;
  out.leakage = std::max(0.0, 1.0 - inside);
  return out;
}

}  // namespace nssbound
