#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "nssbound/errors.hpp"
#include "nssbound/probability.hpp"

namespace nssbound {

namespace {

constexpr double kImagTolerance = 1e-12;

double real_part(Complex v, const char* what) {
  if (std::abs(v.imag()) > kImagTolerance * std::max(1.0, std::abs(v))) {
    throw InvalidArgument(std::string("real-overlap form: ") + what + " is complex");
  }
  return v.real();
}

// N0 - b^T M^+ b with M the Gram matrix of phi0 - phi1 and phi0 + phi2 and b
// their overlaps with phi_0, everything expressed through the phi Gram matrix.
double rank_aware_from_gram(const Eigen::Matrix3d& gram) {
  Eigen::Matrix<double, 2, 3> w;
  w << 1.0, -1.0, 0.0, 1.0, 0.0, 1.0;
  const Eigen::Matrix2d m = w * gram * w.transpose();
  const Eigen::Vector2d b = w * gram.col(0);

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(m);
  const double cutoff = 1e-12 * std::max(1.0, std::abs(m.trace()));
  double projected = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double lambda = es.eigenvalues()(i);
    if (lambda > cutoff) {
      const double c = es.eigenvectors().col(i).dot(b);
      projected += c * c / lambda;
    }
  }
  return std::max(0.0, gram(0, 0) - projected);
}

}  // namespace

Eigen::Matrix3cd OverlapSet::gram_matrix() const {
  Eigen::Matrix3cd g;
  g << n0, v01, v02, std::conj(v01), n1, v12, std::conj(v02), std::conj(v12), n2;
  return g;
}

bool OverlapSet::is_positive_semidefinite() const {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(gram_matrix(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -1e-10;
}

OverlapSet overlaps(const PsiSystem& ps) {
  OverlapSet o;
  o.v01 = ps.phi[0].dot(ps.phi[1]);
  o.v02 = ps.phi[0].dot(ps.phi[2]);
  o.v12 = ps.phi[1].dot(ps.phi[2]);
  o.n0 = ps.norms[0];
  o.n1 = ps.norms[1];
  o.n2 = ps.norms[2];
  return o;
}

double geometric_probability_overlaps(const OverlapSet& o, GateKind kind) {
  const double flip = kind == GateKind::Identity ? -1.0 : 1.0;
  const double v01 = real_part(o.v01, "v01");
  const double v02 = flip * real_part(o.v02, "v02");
  const double v12 = flip * real_part(o.v12, "v12");
  const double n0 = o.n0;
  const double n1 = o.n1;
  const double n2 = o.n2;
  if (!(n0 > 0.0)) throw DegenerateError("overlap form: N0 vanishes");

  const double num = (n0 * v12 * v12 + n1 * v02 * v02 + n2 * v01 * v01) - n0 * n1 * n2 -
                     2.0 * v01 * v02 * v12;
  const double den = 2.0 * (v01 * v02 + v01 * v12 - v02 * v12) -
                     2.0 * (n0 * v12 + n1 * v02 - n2 * v01) +
                     (v01 * v01 + v02 * v02 + v12 * v12) - (n0 * n1 + n0 * n2 + n1 * n2);

  const double scale = std::max({1.0, n0, n1, n2});
  if (std::abs(den) > 1e-12 * scale * scale) return num / den;

  // Collapsed difference span: evaluate the limit directly. The flipped
  // overlaps already describe phi_2 -> -phi_2, so the sign-shift geometry applies.
  Eigen::Matrix3d gram;
  gram << n0, v01, v02, v01, n1, v12, v02, v12, n2;
  return rank_aware_from_gram(gram);
}

double geometric_probability_vectors(const Eigen::Vector3d& phi0, const Eigen::Vector3d& phi1,
                                     const Eigen::Vector3d& phi2) {
  const Eigen::Vector3d c01 = phi0.cross(phi1);
  const double triple = c01.dot(phi2);
  const Eigen::Vector3d diag = c01 - phi2.cross(phi0 - phi1);
  const double den = diag.squaredNorm();
  const double scale = std::max({1.0, phi0.squaredNorm(), phi1.squaredNorm(), phi2.squaredNorm()});
  if (den <= 1e-24 * scale * scale) {
    throw DegenerateError("cross-product form: zero denominator");
  }
  const double p = triple * triple / den;

  const double dual = dual_vector_probability(phi0, phi1, phi2);
  if (std::abs(dual - p) > 1e-10 * std::max(1.0, std::abs(p))) {
    throw std::logic_error("cross-product and dual-vector forms disagree");
  }
  return p;
}

double dual_vector_probability(const Eigen::Vector3d& phi0, const Eigen::Vector3d& phi1,
                               const Eigen::Vector3d& phi2) {
  const Eigen::Vector3d d0 = phi1.cross(phi2);
  const Eigen::Vector3d d1 = phi2.cross(phi0);
  const Eigen::Vector3d d2 = phi0.cross(phi1);
  const double volume = d0.cross(d1).dot(d2);
  const double den = (d0 + d1 - d2).squaredNorm();
  const double scale = std::max({1.0, d0.squaredNorm(), d1.squaredNorm(), d2.squaredNorm()});
  if (den <= 1e-24 * scale * scale) {
    throw DegenerateError("dual-vector form: zero denominator");
  }
  return volume / den;
}

std::array<Eigen::Vector3d, 3> representation_vectors(const PsiSystem& ps, const GramRep& g) {
  const double y1 = real_part(g.y1, "y1");
  const double z1 = real_part(g.z1, "z1");
  const double z2 = real_part(g.z2, "z2");
  const double s0 = std::sqrt(ps.norms[0]);
  const double s1 = std::sqrt(ps.norms[1]);
  const double s2 = std::sqrt(ps.norms[2]);
  return {Eigen::Vector3d(s0, 0.0, 0.0), Eigen::Vector3d(s1 * y1, s1 * g.y2, 0.0),
          Eigen::Vector3d(s2 * z1, s2 * z2, s2 * g.z3)};
}

}  // namespace nssbound
