#include "nssbound/probability.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "nssbound/detail/gram.hpp"
#include "nssbound/errors.hpp"

namespace nssbound {

namespace {

bool branch_vanishes(const std::array<double, 3>& norms, int l) {
  const double max_norm = std::max({norms[0], norms[1], norms[2]});
  return !(norms[l] > kNormFloor * std::max(1.0, max_norm));
}

}  // namespace

GramRep gram_schmidt(const PsiSystem& ps) {
  return detail::gram_schmidt_vectors(ps.phi, ps.norms).rep;
}

ComplexVector detection_vector(const PsiSystem& ps, const GramRep& g,
                               const DetectionState& det) {
  const auto full = detail::gram_schmidt_vectors(ps.phi, ps.norms);
  ComplexVector v = det.alpha * full.basis[0];
  if (full.has_e1) {
    v += det.beta * full.basis[1];
  } else if (std::abs(det.beta) > 0.0) {
    throw InvalidArgument("detection: beta set but psi_1 adds no direction");
  }
  if (full.has_e2) {
    v += det.gamma_det * full.basis[2];
  } else if (std::abs(det.gamma_det) > 0.0) {
    throw InvalidArgument("detection: gamma set on a rank-2 system");
  }
  (void)g;
  return v;
}

Probability3d success_probability_3d(const std::array<double, 3>& norms, const GramRep& g) {
  if (g.rank < 3 || !(g.y2 > kRankTolerance) || !(g.z3 > kRankTolerance)) {
    throw RankDeficientError("3d probability: conditional space is not three-dimensional");
  }
  if (branch_vanishes(norms, 1) || branch_vanishes(norms, 2)) {
    throw DegenerateError("3d probability: N1 or N2 vanishes, conditions cannot hold");
  }
  const double s1 = std::sqrt(norms[0] / norms[1]);
  const double s2 = std::sqrt(norms[0] / norms[2]);
  const Complex a = s1 - g.y1;
  const Complex b = s2 + g.z1 + (g.z2 / g.y2) * a;
  const double denom = 1.0 + std::norm(a) / (g.y2 * g.y2) + std::norm(b) / (g.z3 * g.z3);

  Probability3d out;
  out.p = norms[0] / denom;
  const double alpha = std::sqrt(1.0 / denom);
  out.det.alpha = alpha;
  out.det.beta = alpha * (s1 - std::conj(g.y1)) / g.y2;
  out.det.gamma_det =
      -alpha / g.z3 * (s2 + std::conj(g.z1) + std::conj(g.z2) / g.y2 * (s1 - std::conj(g.y1)));
  return out;
}

Probability3d success_probability_3d(const PsiSystem& ps, const GramRep& g) {
  return success_probability_3d(ps.norms, g);
}

Probability2d success_probability_2d(const std::array<double, 3>& norms, const GramRep& g) {
  if (g.rank >= 3) {
    throw InvalidArgument("2d probability: conditional space is three-dimensional");
  }
  Probability2d out;
  if (!(g.y2 > kRankTolerance) || branch_vanishes(norms, 1) || branch_vanishes(norms, 2)) {
    out.p = 0.0;
    out.constraint_residual = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  const double s1 = std::sqrt(norms[0] / norms[1]);
  const double s2 = std::sqrt(norms[0] / norms[2]);
  const Complex a = s1 - g.y1;
  const double denom = 1.0 + std::norm(a) / (g.y2 * g.y2);
  out.p = norms[0] / denom;
  out.constraint_residual = std::abs(-s2 - g.z1 - (g.z2 / g.y2) * a);
  const double alpha = std::sqrt(1.0 / denom);
  out.det.alpha = alpha;
  out.det.beta = alpha * (s1 - std::conj(g.y1)) / g.y2;
  return out;
}

Probability2d success_probability_2d(const PsiSystem& ps, const GramRep& g) {
  return success_probability_2d(ps.norms, g);
}

double success_probability_rank_aware(const PsiSystem& ps, GateKind kind) {
  const double sign = kind == GateKind::SignShift ? -1.0 : 1.0;
  const std::array<ComplexVector, 2> w{ps.phi[0] - ps.phi[1], ps.phi[0] - sign * ps.phi[2]};
  const double scale = std::max({1.0, ps.norms[0], ps.norms[1], ps.norms[2]});

  std::vector<ComplexVector> basis;
  for (const auto& v0 : w) {
    ComplexVector v = v0;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& e : basis) v -= e.dot(v) * e;
    }
    const double nv = v.norm();
    if (nv > 1e-10 * std::sqrt(scale)) basis.push_back(v / nv);
  }
  ComplexVector r = ps.phi[0];
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& e : basis) r -= e.dot(r) * e;
  }
  return r.squaredNorm();
}

double conditions_residual(const PsiSystem& ps, const ComplexVector& detection) {
  const Complex a0 = detection.dot(ps.phi[0]);
  const Complex a1 = detection.dot(ps.phi[1]);
  const Complex a2 = detection.dot(ps.phi[2]);
  return std::max(std::abs(a0 - a1), std::abs(a0 + a2));
}

}  // namespace nssbound
