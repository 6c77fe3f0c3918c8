#pragma once

#include <compare>
#include <map>

#include "nssbound/types.hpp"

namespace nssbound {

/// The active two-mode beamsplitter with matrix ((T, R), (-R*, T*)).
///
/// Creation operators of the signal mode a and the ancilla mode b map as
///   a^dag -> T a^dag + R b^dag,   b^dag -> -R* a^dag + T* b^dag.
class BeamSplitter {
 public:
  /// Throws InvalidArgument unless |t|^2 + |r|^2 = 1 within 1e-12.
  BeamSplitter(Complex t, Complex r);

  /// Splitter with transmission t and real non-negative reflection.
  static BeamSplitter from_transmission(Complex t);

  Complex t() const { return t_; }
  Complex r() const { return r_; }

  /// The inverse element (T -> T*, R -> -R).
  BeamSplitter inverse() const;

  Eigen::Matrix2cd matrix() const;

 private:
  Complex t_;
  Complex r_;
};

/// Occupation |n, k>: n photons in the signal mode, k in the ancilla mode.
struct FockPair {
  int n = 0;
  int k = 0;

  auto operator<=>(const FockPair&) const = default;
};

/// Sparse two-mode state confined to one total-photon-number sector.
class TwoModeState {
 public:
  explicit TwoModeState(int total_photons);

  /// The normalised basis state |pair>.
  static TwoModeState basis(FockPair pair);

  int total_photons() const { return total_; }

  /// Throws InvalidArgument if pair is outside the sector.
  void set(FockPair pair, Complex amplitude);
  Complex amplitude(FockPair pair) const;

  const std::map<FockPair, Complex>& amplitudes() const { return amplitudes_; }

  double norm() const;

 private:
  int total_;
  std::map<FockPair, Complex> amplitudes_;
};

/// Exact image of `state` under the beamsplitter, by binomial expansion of
/// the transformed creation operators. Throws ResourceError when the state
/// carries more than `photon_cap` photons.
TwoModeState apply_beamsplitter(const BeamSplitter& bs, const TwoModeState& state,
                                int photon_cap = kDefaultPhotonCap);

/// <n k|U|n k> in closed form:
///   k >= n : (T*)^{k-n} P_n^{(0,k-n)}(2|T|^2 - 1)
///   n >  k : T^{n-k}    P_k^{(0,n-k)}(2|T|^2 - 1)
/// Both branches are free of negative powers, so T = 0 is a regular point.
Complex diagonal_element(const BeamSplitter& bs, FockPair pair);

/// Largest polynomial order accepted by jacobi_polynomial.
inline constexpr int kMaxJacobiOrder = 128;

/// P_order^{(0, beta)}(x) by the three-term recurrence. Negative beta is
/// accepted for beta >= -order through the reflection
/// P_n^{(0,-l)}(x) = ((x+1)/2)^l P_{n-l}^{(0,l)}(x).
double jacobi_polynomial(int order, int beta, double x);

}  // namespace nssbound
