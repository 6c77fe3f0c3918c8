#pragma once

#include <array>
#include <cmath>

#include "nssbound/errors.hpp"
#include "nssbound/probability.hpp"

namespace nssbound::detail {

template <class Vec>
struct GramResult {
  GramRep rep;
  std::array<Vec, 3> basis;  // e0, e1, e2; only the first `rep.rank` are meaningful
  bool has_e1 = false;
  bool has_e2 = false;
};

// Modified Gram-Schmidt with one re-orthogonalisation pass. y2 and z3 are
// residual norms rather than sqrt(1 - |y1|^2), so collinear inputs give
// values at rounding level instead of sqrt(eps).
template <class Vec>
GramResult<Vec> gram_schmidt_vectors(const std::array<Vec, 3>& phi,
                                     const std::array<double, 3>& norms) {
  using Scalar = typename Vec::Scalar;
  const double max_norm = std::max({norms[0], norms[1], norms[2]});
  const double floor = kNormFloor * std::max(1.0, max_norm);
  if (!(norms[0] > floor)) throw DegenerateError("gram-schmidt: psi_0 has zero norm");

  GramResult<Vec> out;
  GramRep& g = out.rep;
  const Vec e0 = phi[0] / std::sqrt(norms[0]);
  out.basis[0] = e0;

  if (norms[1] > floor) {
    const Vec psi1 = phi[1] / std::sqrt(norms[1]);
    Scalar y1 = e0.dot(psi1);
    Vec r1 = psi1 - y1 * e0;
    const Scalar dy = e0.dot(r1);
    y1 += dy;
    r1 -= dy * e0;
    g.y1 = Complex(y1);
    g.y2 = r1.norm();
    if (g.y2 > kRankTolerance) {
      out.basis[1] = r1 / g.y2;
      out.has_e1 = true;
    }
  }

  if (norms[2] > floor) {
    const Vec psi2 = phi[2] / std::sqrt(norms[2]);
    Scalar z1 = e0.dot(psi2);
    Scalar z2{};
    Vec r2 = psi2 - z1 * e0;
    if (out.has_e1) {
      z2 = out.basis[1].dot(r2);
      r2 -= z2 * out.basis[1];
    }
    // second pass
    const Scalar d1 = e0.dot(r2);
    z1 += d1;
    r2 -= d1 * e0;
    if (out.has_e1) {
      const Scalar d2 = out.basis[1].dot(r2);
      z2 += d2;
      r2 -= d2 * out.basis[1];
    }
    g.z1 = Complex(z1);
    g.z2 = Complex(z2);
    g.z3 = r2.norm();
    if (g.z3 > kRankTolerance) {
      out.basis[2] = r2 / g.z3;
      out.has_e2 = true;
    }
  }

  g.rank = 1 + (out.has_e1 ? 1 : 0) + (out.has_e2 ? 1 : 0);
  return out;
}

}  // namespace nssbound::detail
