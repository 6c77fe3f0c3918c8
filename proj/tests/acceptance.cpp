// Acceptance checks 1-9. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "nssbound/errors.hpp"
#include "nssbound/optimize.hpp"
#include "nssbound/polynomial.hpp"
#include "nssbound/probability.hpp"
#include "nssbound/verify.hpp"

using namespace nssbound;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

int failures = 0;
int evaluated = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = o.pass && secs < limit_s;
  std::printf("%s %d %s: %s [%.2f s, limit %.0f s]\n", pass ? "PASS" : "FAIL", id, title, o.detail.c_str(),
              secs, limit_s);
  std::fflush(stdout);
  ++evaluated;
  if (!pass) ++failures;
}

const double kTStar = 1.0 - std::sqrt(2.0);

}  // namespace

int main() {
  criterion(1, "single-photon optimum", 1.0, [] {
    const auto roots = solve_physical_roots(quartic_real(0, 1));
    double best_err = HUGE_VAL;
    double t = 0.0;
    for (double r : roots.roots) {
      if (std::abs(r - kTStar) < best_err) {
        best_err = std::abs(r - kTStar);
        t = r;
      }
    }
    const double p = p_max_two_weight(0, 1, t);
    return Outcome{best_err <= 1e-10 && std::abs(p - 0.25) <= 1e-9,
                   "|T - (1 - sqrt2)| = " + fmt("%.2e", best_err) + ", |p - 1/4| = " + fmt("%.2e", std::abs(p - 0.25))};
  });

  criterion(2, "two-weight sweep m < n <= 20", 10.0, [] {
    const auto s = sweep_two_weight(20, 20);
    double max_other = 0.0;
    double at01 = 0.0;
    bool ok = true;
    for (const auto& r : s.records) {
      if (r.m >= r.n) continue;
      ok = ok && r.p_max <= kQuarterBound + 1e-9;
      if (r.m == 0 && r.n == 1) {
        at01 = r.p_max;
      } else {
        max_other = std::max(max_other, r.p_max);
      }
    }
    ok = ok && std::abs(at01 - 0.25) <= 1e-9 && max_other < 0.25 - 1e-9;
    return Outcome{ok, "p(0,1) = " + fmt("%.12f", at01) + ", max elsewhere = " + fmt("%.9f", max_other)};
  });

  criterion(3, "three-weight ancilla curve", 120.0, [] {
    const auto grid = interior_grid(-1.0, 1.0, 2001);
    const auto s = optimize_three_dim(grid);
    const auto& peak = s.polished ? *s.polished : s.best;
    const bool ok = std::abs(peak.p - 0.25) <= 1e-4 && std::abs(peak.t - kTStar) <= 2e-3 &&
                    s.local_maxima.size() == 3;
    return Outcome{ok, "max p = " + fmt("%.8f", peak.p) + " at T = " + fmt("%.6f", peak.t) +
                           ", local maxima = " + std::to_string(s.local_maxima.size())};
  });

  criterion(4, "SU(3) network maximum in [0.234, 0.236]", 30.0, [] {
    const auto r = maximize_network();
    return Outcome{r.p >= 0.234 && r.p <= 0.236,
                   "p = " + fmt("%.10f", r.p) + ", condition residual = " + fmt("%.1e", r.residual)};
  });

  criterion(5, "unitarity bound", 5.0, [] {
    std::mt19937_64 rng(2024);
    double worst = -HUGE_VAL;
    for (int i = 0; i < 200; ++i) {
      const auto u = random_unitary(rng);
      worst = std::max(worst, network_probability(u) - unitarity_bound(u(1, 1)));
    }
    double best = -1.0;
    double best_r = -1.0;
    for (int i = 0; i <= 1000; ++i) {
      const double r = i / 1000.0;
      const double b = phase_minimized_bound(r).bound;
      if (b > best) {
        best = b;
        best_r = r;
      }
    }
    const bool ok = worst <= 1e-10 && std::abs(best - 0.25) <= 1e-6 && best_r == 0.0;
    return Outcome{ok, "max(p - bound) = " + fmt("%.2e", worst) + ", max_r min_theta bound = " +
                           fmt("%.9f", best) + " at r = " + fmt("%.3f", best_r)};
  });

  criterion(6, "expansion vs Jacobi closed form", 5.0, [] {
    const auto c = check_oracle_equivalence();
    return Outcome{c.max_deviation <= 1e-10, "max deviation = " + fmt("%.2e", c.max_deviation)};
  });

  criterion(7, "formula cross-consistency", 5.0, [] {
    const auto c = check_formula_consistency(100, 7);
    const auto ps = build_psi_system(AncillaSpec::three_dim(0.5, 0.5), BeamSplitter::from_transmission(1.0));
    const double id = geometric_probability_overlaps(overlaps(ps), GateKind::Identity);
    const double ra = success_probability_rank_aware(ps, GateKind::Identity);
    const double id_err = std::max(std::abs(id - 1.0), std::abs(ra - 1.0));
    return Outcome{c.max_deviation <= 1e-9 && id_err <= 1e-10,
                   "pairwise spread = " + fmt("%.2e", c.max_deviation) + ", |p_identity(T=1) - 1| = " +
                       fmt("%.2e", id_err)};
  });

  criterion(8, "end-to-end sign-shift gate", 1.0, [] {
    const auto gate = two_weight_gate(0, 1);
    std::mt19937_64 rng(8);
    double worst_fid = 1.0;
    double lo = HUGE_VAL;
    double hi = -HUGE_VAL;
    for (int i = 0; i < 10; ++i) {
      const auto sig = random_signal(rng);
      const auto out = apply_conditional_gate(sig, gate.ancilla, gate.splitter, gate.detection);
      const SignalState target{{sig.c[0], sig.c[1], -sig.c[2]}};
      worst_fid = std::min(worst_fid, signal_fidelity(target, out.output));
      lo = std::min(lo, out.probability);
      hi = std::max(hi, out.probability);
    }
    const bool ok = worst_fid >= 1.0 - 1e-9 && std::abs(lo - 0.25) <= 1e-9 && std::abs(hi - 0.25) <= 1e-9 &&
                    hi - lo <= 1e-12;
    return Outcome{ok, "min fidelity = 1 - " + fmt("%.1e", 1.0 - worst_fid) + ", p = " + fmt("%.12f", lo) +
                           ", spread = " + fmt("%.1e", hi - lo)};
  });

  criterion(9, "adjacent-pair closed-form family", 1.0, [] {
    double residual = 0.0;
    double max_p = 0.0;
    bool decreasing = true;
    double prev = HUGE_VAL;
    for (int n = 0; n <= 10; ++n) {
      const auto q = quartic_real(n + 1, n);
      const auto r = closed_form_adjacent(n);
      for (double t : {r.t_plus, r.t_minus, r.t3}) {
        residual = std::max(residual, std::abs(q(t)));
        if (std::abs(t) > 0.0 && std::abs(t) < 1.0) max_p = std::max(max_p, p_max_two_weight(n + 1, n, t));
      }
      const double p3 = p_max_two_weight(n + 1, n, r.t3);
      decreasing = decreasing && p3 < prev;
      prev = p3;
    }
    const bool ok = residual <= 1e-10 && decreasing && max_p <= kQuarterBound + kBoundTolerance;
    return Outcome{ok, "max residual = " + fmt("%.2e", residual) + ", p(T3) decreasing = " +
                           (decreasing ? std::string("yes") : std::string("no")) + ", max p = " + fmt("%.12f", max_p)};
  });

  std::printf("criteria evaluated: %d, failed: %d\n", evaluated, failures);
  return failures == 0 ? 0 : 1;
}
