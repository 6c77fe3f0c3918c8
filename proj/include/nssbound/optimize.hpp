#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nssbound/probability.hpp"
#include "nssbound/types.hpp"

namespace nssbound {

/// Conjectured ceiling used by every sweep invariant.
inline constexpr double kQuarterBound = 0.25;
inline constexpr double kBoundTolerance = 1e-9;

// --- two-weight ancilla --------------------------------------------------------

/// gamma |m>|A_n> + sqrt(1 - gamma^2) |n>|A_m> with real transmission t.
struct TwoWeightConfig {
  int m = 0;
  int n = 1;
  double gamma = 0.5;
  double t = 0.5;
};

/// p = (m-n)^2 (1-t^2)^2 / [ a_n^2 / (gamma^2 t^{2m}) + a_m^2 / ((1-gamma^2) t^{2n}) ]
/// with a_j = t - (j+1) t^2 + j. Returns 0 for m == n, t == 0, |t| >= 1 and
/// gamma in {0, 1}; InvalidArgument for gamma outside [0, 1].
double p_two_weight(const TwoWeightConfig& cfg);

/// Same expression with a complex transmission (a_j = T* - (j+1)|T|^2 + j).
double p_two_weight(int m, int n, double gamma, Complex t);

/// Maximising weight: gamma^2 = 1 / (1 + |t|^m |a_m| / (|t|^n |a_n|)).
/// Requires 0 < |t| < 1 (InvalidArgument); DegenerateError if a_m = a_n = 0.
double gamma_max(int m, int n, double t);
double gamma_max(int m, int n, Complex t);

/// (m-n)^2 (1-|t|^2)^2 |t|^{2(m+n)} / (|a_n| |t|^n + |a_m| |t|^m)^2,
/// the value of p_two_weight at gamma_max.
double p_max_two_weight(int m, int n, double t);
double p_max_two_weight(int m, int n, Complex t);

/// First-principles check: psi system -> Gram-Schmidt -> 2d formula.
Probability2d two_weight_first_principles(int m, int n, double gamma, Complex t);

struct TwoWeightRecord {
  int m = 0;
  int n = 0;
  double t_star = 0.0;  // NaN when no physical root gives p > 0
  double gamma = 0.0;
  double p_max = 0.0;
  /// 2d-formula constraint residual from first principles at (gamma, t_star).
  double constraint_residual = 0.0;
  /// |p_max - first-principles p|.
  double consistency_error = 0.0;
};

struct TwoWeightSweep {
  /// Every pair with m <= n, m <= m_max, n <= n_max, ordered by (m, n).
  std::vector<TwoWeightRecord> records;
  TwoWeightRecord best;
  int violations = 0;  // records above kQuarterBound + kBoundTolerance
};

/// Solves quartic_real(m, n) for each pair and keeps the best physical root.
/// Requires 0 <= m_max, n_max <= 64.
TwoWeightSweep sweep_two_weight(int m_max, int n_max);

/// Best root of the pair (m, n), or a zero record when none applies.
TwoWeightRecord best_two_weight_root(int m, int n);

struct ComplexRootRecord {
  Complex t{};
  double gamma = 0.0;
  double p_max = 0.0;
  double quartic_residual = 0.0;
};

/// Complex-T mode: 64 x 64 polar grid on the open unit disk for
/// |quartic_complex|^2, Nelder-Mead polish from the grid's local minima,
/// then p_max at every converged root (|residual| <= 1e-9) away from T = 0.
/// Sorted by decreasing p_max.
std::vector<ComplexRootRecord> complex_two_weight_roots(int m, int n, int grid = 64);

// --- three-dimensional ancilla ------------------------------------------------

struct ThreeDimRecord {
  double t = 0.0;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double gamma3 = 0.0;
  double p = 0.0;
};

struct ThreeDimSweep {
  std::vector<ThreeDimRecord> records;  // one per grid point, grid order
  ThreeDimRecord best;                  // largest record of the grid
  /// Peak re-optimised in t between its grid neighbours.
  std::optional<ThreeDimRecord> polished;
  std::vector<std::size_t> local_maxima;  // indices into records
};

struct ThreeDimOptions {
  int gamma_steps = 201;
  bool polish_peak = true;
};

/// Largest success probability over (gamma1, gamma2) >= 0 for one real t:
/// gamma_steps^2 grid over the quarter disk (rank-3 interior points, 3d
/// formula), then simplex refinement in the angles gamma1 = cos a,
/// gamma2 = sin a cos b of the rank-aware value.
ThreeDimRecord maximize_three_dim(double t, int gamma_steps = 201);

/// Rank-aware probability for the ancilla (g1, g2, sqrt(1 - g1^2 - g2^2)).
double three_dim_probability(double t, double g1, double g2);

/// Curve over the grid (points must lie in (-1, 1)).
ThreeDimSweep optimize_three_dim(std::span<const double> t_grid, const ThreeDimOptions& opt = {});

/// t_i = t_min + (i + 1)(t_max - t_min)/(steps + 1), i = 0..steps-1.
std::vector<double> interior_grid(double t_min, double t_max, int steps);

/// Indices i with p[i-1] < p[i] >= p[i+1]; plateaus count once.
std::vector<std::size_t> local_maxima(std::span<const double> values);

// --- SU(3) network ---------------------------------------------------------------

struct NetworkSearchOptions {
  int restarts = 64;
  std::uint64_t seed = 1;
  /// Adds a start at the identity (all angles zero) before the random ones.
  bool identity_start = false;
};

struct NetworkSearchResult {
  double p = 0.0;  // network_probability(u)
  UnitaryThree u{Eigen::Matrix3cd::Identity()};
  double residual = 0.0;   // network_conditions_residual(u)
  double amplitude = 0.0;  // |A_0|^2
  int starts = 0;
};

/// U = diag(e^{i phi}) R12(theta1, delta1) R13(theta2, delta2) R23(theta3, delta3).
UnitaryThree euler_unitary(std::span<const double> params);

/// Maximises |A_0|^2 subject to A_1 = A_0 and A_2 = -A_0. Each start first
/// climbs the unconstrained network formula, then follows a quadratic
/// penalty continuation (mu = 1 ... 1e8) with a simplex search per stage.
NetworkSearchResult maximize_network(const NetworkSearchOptions& opt = {});

}  // namespace nssbound

namespace nssbound {

/// Everything needed to run the two-weight gate at its best physical root.
struct TwoWeightGate {
  AncillaSpec ancilla;
  BeamSplitter splitter;
  ComplexVector detection;  // unit norm, indexed by k
  double p = 0.0;
};

/// Gate for the pair (m, n) at best_two_weight_root; DegenerateError when
/// the pair has no root with p > 0.
TwoWeightGate two_weight_gate(int m, int n);

}  // namespace nssbound
