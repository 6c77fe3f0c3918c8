#pragma once

#include <array>
#include <random>

#include "nssbound/ancilla.hpp"
#include "nssbound/types.hpp"

namespace nssbound {

/// y2 or z3 at or below this value means the conditional space collapsed.
inline constexpr double kRankTolerance = 1e-10;

/// Norms N_l at or below this value are treated as an identically zero branch.
inline constexpr double kNormFloor = 1e-24;

/// Coordinates of psi_1 = (y1, y2, 0) and psi_2 = (z1, z2, z3) in the
/// orthonormal basis obtained by Gram-Schmidt starting from psi_0.
struct GramRep {
  Complex y1{};
  double y2 = 0.0;
  Complex z1{};
  Complex z2{};
  double z3 = 0.0;
  int rank = 1;
};

/// Detection ket (alpha, beta, gamma) in the Gram basis; alpha is real and
/// non-negative.
struct DetectionState {
  Complex alpha{};
  Complex beta{};
  Complex gamma_det{};
};

/// Which single-mode map the projection has to implement.
enum class GateKind {
  SignShift,  ///< c0|0> + c1|1> - c2|2>
  Identity,   ///< c0|0> + c1|1> + c2|2>
};

/// Gram-Schmidt representation of the three conditional vectors.
/// Throws DegenerateError if N_0 vanishes. A vanishing N_1 or N_2 leaves the
/// corresponding coordinates at zero.
GramRep gram_schmidt(const PsiSystem& ps);

/// Detection ket in k-space for a Gram-basis representation.
ComplexVector detection_vector(const PsiSystem& ps, const GramRep& g, const DetectionState& det);

struct Probability3d {
  double p = 0.0;
  DetectionState det;
};

/// p = N0 [1 + |sqrt(N0/N1) - y1|^2/y2^2
///           + |sqrt(N0/N2) + z1 + (z2/y2)(sqrt(N0/N1) - y1)|^2/z3^2]^-1
///
/// Requires rank 3 (RankDeficientError otherwise) and non-zero N1, N2
/// (DegenerateError otherwise).
Probability3d success_probability_3d(const std::array<double, 3>& norms, const GramRep& g);
Probability3d success_probability_3d(const PsiSystem& ps, const GramRep& g);

struct Probability2d {
  double p = 0.0;
  /// |-sqrt(N0/N2) - z1 - (z2/y2)(sqrt(N0/N1) - y1)|; p is only achievable
  /// when this vanishes. NaN when p = 0 is forced by the degeneracy.
  double constraint_residual = 0.0;
  DetectionState det;
};

/// p = N0 [1 + |sqrt(N0/N1) - y1|^2 / y2^2]^-1 for a two-dimensional span.
/// Rank 1, or a vanishing N1/N2, gives p = 0. Rank 3 is rejected.
Probability2d success_probability_2d(const std::array<double, 3>& norms, const GramRep& g);
Probability2d success_probability_2d(const PsiSystem& ps, const GramRep& g);

/// Largest N0 |<psi|psi0>|^2 over detection kets obeying the conditions,
/// computed as the squared distance from phi_0 to span{phi_0 - phi_1,
/// phi_0 -/+ phi_2}. Valid for every rank; equals the 3d formula on rank-3
/// systems and the 2d formula whenever its constraint holds.
double success_probability_rank_aware(const PsiSystem& ps, GateKind kind = GateKind::SignShift);

/// Residual of the conditions sqrt(N0)<psi|psi0> = sqrt(N1)<psi|psi1> =
/// -sqrt(N2)<psi|psi2> for a k-space detection ket (max abs deviation).
double conditions_residual(const PsiSystem& ps, const ComplexVector& detection);

// --- geometric forms --------------------------------------------------------

/// Overlaps v_ij = <phi_i|phi_j> and norms N_l of the unnormalised vectors.
struct OverlapSet {
  Complex v01{};
  Complex v02{};
  Complex v12{};
  double n0 = 0.0;
  double n1 = 0.0;
  double n2 = 0.0;

  Eigen::Matrix3cd gram_matrix() const;
  /// Smallest Gram eigenvalue >= -1e-10.
  bool is_positive_semidefinite() const;
};

OverlapSet overlaps(const PsiSystem& ps);

/// Rational expression in v_ij and N_l; real overlaps only (InvalidArgument
/// otherwise). GateKind::Identity flips v02 and v12. Where the expression
/// is 0/0 (the span of the differences collapsed) the rank-aware limit
/// computed from the same overlaps is returned; DegenerateError if N0 = 0.
double geometric_probability_overlaps(const OverlapSet& o, GateKind kind = GateKind::SignShift);

/// [(phi0 x phi1) . phi2]^2 / |(phi0 x phi1) - phi2 x (phi0 - phi1)|^2,
/// checked against the dual-vector form (phi0' x phi1') . phi2' /
/// |phi0' + phi1' - phi2'|^2. Throws DegenerateError for a zero denominator.
double geometric_probability_vectors(const Eigen::Vector3d& phi0, const Eigen::Vector3d& phi1,
                                     const Eigen::Vector3d& phi2);

/// Dual-vector form on its own.
double dual_vector_probability(const Eigen::Vector3d& phi0, const Eigen::Vector3d& phi1,
                               const Eigen::Vector3d& phi2);

/// Real 3-vectors sqrt(N_l) * (Gram coordinates of psi_l). Requires real
/// Gram coordinates (InvalidArgument otherwise).
std::array<Eigen::Vector3d, 3> representation_vectors(const PsiSystem& ps, const GramRep& g);

// --- SU(3) network -------------------------------------------------------------

/// 3x3 unitary Lambda; mode 1 is the signal, modes 2 and 3 the ancillas.
class UnitaryThree {
 public:
  /// Throws InvalidArgument unless Lambda^dag Lambda = 1 within 1e-10 per entry.
  explicit UnitaryThree(const Eigen::Matrix3cd& lambda);

  const Eigen::Matrix3cd& lambda() const { return lambda_; }
  /// 1-based access matching the usual Lambda_ij notation.
  Complex operator()(int i, int j) const { return lambda_(i - 1, j - 1); }

 private:
  Eigen::Matrix3cd lambda_;
};

/// 4 |L12 L13 L21 L31|^2 / |1 + 2 L11 - L11^2|^2.
/// Throws SingularNetworkError when the denominator is below 1e-12.
double network_probability(const UnitaryThree& u);

/// Signal amplitudes A_n (n = 0, 1, 2) for ancilla |1,1> in modes 2, 3 and
/// detection of |1,1>: A_n = L11^{n-2} [L11^2 P + n L11 Q + n(n-1) X].
std::array<Complex, 3> network_amplitudes(const UnitaryThree& u);

/// max(|A1 - A0|, |A2 + A0|); zero exactly when the network realises the
/// sign shift and the Eq.-style probability formula applies.
double network_conditions_residual(const UnitaryThree& u);

/// (1 - |L11|^2)^4 / (4 |1 + 2 L11 - L11^2|^2); requires |L11| <= 1.
double unitarity_bound(Complex lambda11);

struct PhaseMinimum {
  double theta = 0.0;
  double bound = 0.0;
};

/// min over theta of unitarity_bound(r e^{i theta}) for fixed r in [0, 1].
PhaseMinimum phase_minimized_bound(double r);

/// Haar-random 3x3 unitary (QR of a complex Gaussian matrix, phases fixed).
UnitaryThree random_unitary(std::mt19937_64& rng);

}  // namespace nssbound
