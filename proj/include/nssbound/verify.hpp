#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nssbound/ancilla.hpp"

namespace nssbound {

struct CheckResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Expanded beamsplitter image vs closed-form diagonal elements for n <= 4,
/// k <= 12 on 21 real and 20 complex transmissions.
CheckResult check_oracle_equivalence();

/// Pairwise spread of the 3d formula, the overlap form, the cross-product
/// form and the dual-vector form on `systems` random rank-3 systems.
CheckResult check_formula_consistency(int systems, std::uint64_t seed);

/// Identity gate at T = 1 must succeed with certainty.
CheckResult check_identity_gate();

/// First-principles constraint residual and probability mismatch at the
/// quartic roots of every pair up to (max, max).
CheckResult check_quartic_constraint(int max);

/// Residual of the m = n + 1 closed-form roots, n = 0..n_max.
CheckResult check_adjacent_roots(int n_max);

/// max(network_probability - unitarity_bound, 0) over random unitaries.
CheckResult check_unitarity_bound(int samples, std::uint64_t seed);

/// 1 - fidelity of the (0,1) gate output with (c0, c1, -c2) over random signals.
CheckResult check_gate_end_to_end(int signals, std::uint64_t seed);

/// All suites with their default sizes.
std::vector<CheckResult> run_verification(std::uint64_t seed = 1);

/// Normalised signal with complex Gaussian amplitudes.
SignalState random_signal(std::mt19937_64& rng);

}  // namespace nssbound
