#include "nssbound/verify.hpp"

#include <algorithm>
#include <cmath>

#include "nssbound/errors.hpp"
#include "nssbound/optimize.hpp"
#include "nssbound/polynomial.hpp"
#include "nssbound/probability.hpp"

namespace nssbound {

namespace {

CheckResult make(std::string name, double dev, double tol) {
  return {std::move(name), dev, tol, dev <= tol};
}

}  // namespace

SignalState random_signal(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::array<Complex, 3> c;
  double s = 0.0;
  for (auto& x : c) {
    x = Complex(gauss(rng), gauss(rng));
    s += std::norm(x);
  }
  const double k = 1.0 / std::sqrt(s);
  return SignalState::make(c[0] * k, c[1] * k, c[2] * k);
}

CheckResult check_oracle_equivalence() {
  std::vector<Complex> ts;
  for (int i = 0; i <= 20; ++i) ts.emplace_back(-1.0 + 0.1 * i, 0.0);
  for (int i = 0; i < 20; ++i) {
    ts.push_back(std::polar(0.05 + 0.9 * i / 19.0, 0.3 + 2.0 * std::acos(-1.0) * i / 20.0));
  }
  double dev = 0.0;
  for (const Complex t : ts) {
    const auto bs = BeamSplitter::from_transmission(t);
    for (int n = 0; n <= 4; ++n) {
      for (int k = 0; k <= 12; ++k) {
        const auto out = apply_beamsplitter(bs, TwoModeState::basis({n, k}));
        dev = std::max(dev, std::abs(out.amplitude({n, k}) - diagonal_element(bs, {n, k})));
      }
    }
  }
  return make("oracle-equivalence", dev, 1e-10);
}

CheckResult check_formula_consistency(int systems, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> tdist(-0.95, 0.95);
  std::uniform_real_distribution<double> adist(0.1, 0.5 * std::acos(-1.0) - 0.1);
  double dev = 0.0;
  int done = 0;
  while (done < systems) {
    const double t = tdist(rng);
    const double a = adist(rng);
    const double b = adist(rng);
    if (std::abs(t) < 0.05) continue;
    const auto anc = AncillaSpec::three_dim(std::cos(a), std::sin(a) * std::cos(b));
    const auto ps = build_psi_system(anc, BeamSplitter::from_transmission(Complex(t, 0.0)));
    const auto g = gram_schmidt(ps);
    if (g.rank < 3) continue;
    const auto v = representation_vectors(ps, g);
    const std::array<double, 4> p{success_probability_3d(ps, g).p,
                                  geometric_probability_overlaps(overlaps(ps)),
                                  geometric_probability_vectors(v[0], v[1], v[2]),
                                  dual_vector_probability(v[0], v[1], v[2])};
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) dev = std::max(dev, std::abs(p[i] - p[j]));
    }
    ++done;
  }
  return make("formula-consistency", dev, 1e-9);
}

CheckResult check_identity_gate() {
  const auto ps = build_psi_system(AncillaSpec::three_dim(0.6, 0.5),
                                   BeamSplitter::from_transmission(Complex(1.0, 0.0)));
  const double a = success_probability_rank_aware(ps, GateKind::Identity);
  const double b = geometric_probability_overlaps(overlaps(ps), GateKind::Identity);
  return make("identity-gate-unit-transmission", std::max(std::abs(a - 1.0), std::abs(b - 1.0)),
              1e-10);
}

CheckResult check_quartic_constraint(int max) {
  const auto sweep = sweep_two_weight(max, max);
  double dev = 0.0;
  for (const auto& r : sweep.records) {
    if (!(r.p_max > 0.0)) continue;
    dev = std::max({dev, r.constraint_residual, r.consistency_error});
  }
  return make("quartic-constraint", dev, 1e-8);
}

CheckResult check_adjacent_roots(int n_max) {
  double dev = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    const auto q = quartic_real(n + 1, n);
    const auto r = closed_form_adjacent(n);
    dev = std::max({dev, std::abs(q(r.t_plus)), std::abs(q(r.t_minus)), std::abs(q(r.t3))});
  }
  return make("adjacent-closed-forms", dev, 1e-10);
}

CheckResult check_unitarity_bound(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double dev = 0.0;
  for (int i = 0; i < samples; ++i) {
    const auto u = random_unitary(rng);
    double p = 0.0;
    try {
      p = network_probability(u);
    } catch (const SingularNetworkError&) {
      continue;
    }
    dev = std::max(dev, p - unitarity_bound(u(1, 1)));
  }
  return make("unitarity-bound", std::max(0.0, dev), 1e-10);
}

CheckResult check_gate_end_to_end(int signals, std::uint64_t seed) {
  const auto gate = two_weight_gate(0, 1);
  std::mt19937_64 rng(seed);
  double dev = std::abs(gate.p - kQuarterBound);
  for (int i = 0; i < signals; ++i) {
    const auto sig = random_signal(rng);
    const auto out = apply_conditional_gate(sig, gate.ancilla, gate.splitter, gate.detection);
    const SignalState target{{sig.c[0], sig.c[1], -sig.c[2]}};
    dev = std::max({dev, 1.0 - signal_fidelity(target, out.output),
                    std::abs(out.probability - kQuarterBound)});
  }
  return make("gate-end-to-end", dev, 1e-9);
}

std::vector<CheckResult> run_verification(std::uint64_t seed) {
  return {check_oracle_equivalence(),      check_formula_consistency(100, seed),
          check_identity_gate(),           check_quartic_constraint(20),
          check_adjacent_roots(10),        check_unitarity_bound(200, seed),
          check_gate_end_to_end(10, seed)};
}

}  // namespace nssbound
