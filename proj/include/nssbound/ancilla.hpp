#pragma once

#include <array>
#include <span>
#include <vector>

#include "nssbound/fock.hpp"
#include "nssbound/types.hpp"

namespace nssbound {

/// Ancilla with exactly N photons: sum_k gamma_k |k>|A_{N-k}>, where |k> is
/// the Fock state entering the active beamsplitter. Only the real weights
/// gamma_k are stored; the multimode tails |A_{N-k}> are orthonormal labels.
class AncillaSpec {
 public:
  /// Throws InvalidArgument unless sum gamma_k^2 = 1 within 1e-12.
  explicit AncillaSpec(std::vector<double> weights);

  /// gamma |m>|A_n> + sqrt(1 - gamma^2) |n>|A_m>; m == n gives |m>.
  static AncillaSpec two_weight(int m, int n, double gamma);

  /// gamma1 |0> + gamma2 |1> + sqrt(1 - gamma1^2 - gamma2^2) |2>.
  static AncillaSpec three_dim(double gamma1, double gamma2);

  int total_photons() const { return static_cast<int>(weights_.size()) - 1; }
  std::span<const double> weights() const { return weights_; }
  double weight(int k) const { return weights_.at(static_cast<std::size_t>(k)); }

 private:
  std::vector<double> weights_;
};

/// Signal c0|0> + c1|1> + c2|2>.
struct SignalState {
  std::array<Complex, 3> c{};

  /// Throws InvalidArgument unless the amplitudes are normalised to 1e-12.
  static SignalState make(Complex c0, Complex c1, Complex c2);
};

/// The three conditional vectors phi_l = sqrt(N_l) psi_l over k = 0..N and
/// their squared norms N_l.
struct PsiSystem {
  std::array<ComplexVector, 3> phi;
  std::array<double, 3> norms{};

  /// Normalised psi_l; throws DegenerateError if N_l vanishes.
  ComplexVector psi(int l) const;
};

/// phi_l[k] = gamma_k <l k|U|l k>. The norms are cross-checked against
/// closed_form_norms and a mismatch above 1e-10 raises std::logic_error.
PsiSystem build_psi_system(const AncillaSpec& anc, const BeamSplitter& bs);

/// N_0, N_1, N_2 as explicit sums over k in |T|^2, without negative powers.
std::array<double, 3> closed_form_norms(const AncillaSpec& anc, const BeamSplitter& bs);

struct GateOutcome {
  SignalState output;
  double probability = 0.0;
  /// Squared weight of the detection vector outside span{psi_0, psi_1, psi_2}.
  double leakage = 0.0;
};

/// Projects the ancilla onto the detection ket `detection` (indexed by k,
/// unit norm) and returns the renormalised signal together with the
/// probability sum_l |c_l <psi|phi_l>|^2.
///
/// Throws DegenerateError if the projected signal vanishes.
GateOutcome apply_conditional_gate(const SignalState& sig, const AncillaSpec& anc,
                                   const BeamSplitter& bs, const ComplexVector& detection);

/// |<target|output>|^2 for normalised signals.
double signal_fidelity(const SignalState& target, const SignalState& output);

}  // namespace nssbound
