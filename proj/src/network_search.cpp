#include <cmath>
#include <random>

#include "nssbound/errors.hpp"
#include "nssbound/nelder_mead.hpp"
#include "nssbound/optimize.hpp"

namespace nssbound {

namespace {

constexpr int kParams = 9;
constexpr double kAcceptResidual = 1e-6;

Eigen::Matrix3cd planar(int p, int q, double theta, double delta) {
  Eigen::Matrix3cd r = Eigen::Matrix3cd::Identity();
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  r(p, p) = c;
  r(q, q) = c;
  r(p, q) = -std::polar(s, delta);
  r(q, p) = std::polar(s, -delta);
  return r;
}

double penalised(std::span<const double> x, double mu) {
  const auto a = network_amplitudes(euler_unitary(x));
  return -std::norm(a[0]) + mu * (std::norm(a[1] - a[0]) + std::norm(a[2] + a[0]));
}

// Warm-up objective: the network formula without the conditions. Starts at
// or near the identity otherwise slide into the trivial point A_0 = 0.
double unconstrained(std::span<const double> x) {
  try {
    return -network_probability(euler_unitary(x));
  } catch (const SingularNetworkError&) {
    return HUGE_VAL;
  }
}

}  // namespace

UnitaryThree euler_unitary(std::span<const double> x) {
  if (x.size() != kParams) throw InvalidArgument("euler unitary: expected 9 parameters");
  Eigen::Matrix3cd d = Eigen::Matrix3cd::Zero();
  for (int i = 0; i < 3; ++i) d(i, i) = std::polar(1.0, x[i]);
  return UnitaryThree(d * planar(0, 1, x[3], x[4]) * planar(0, 2, x[5], x[6]) *
                      planar(1, 2, x[7], x[8]));
}

NetworkSearchResult maximize_network(const NetworkSearchOptions& opt) {
  if (opt.restarts < 0) throw InvalidArgument("network search: negative restart count");
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::acos(-1.0));

  std::vector<std::vector<double>> starts;
  if (opt.identity_start) starts.emplace_back(kParams, 0.0);
  for (int r = 0; r < opt.restarts; ++r) {
    std::vector<double> x(kParams);
    for (double& v : x) v = angle(rng);
    starts.push_back(std::move(x));
  }

  NelderMeadOptions nm;
  nm.initial_step = 0.2;
  nm.tolerance = 1e-10;
  nm.max_evaluations = 6000;
  nm.max_restarts = 2;

  NetworkSearchResult best;
  bool have = false;
  bool best_feasible = false;
  for (auto x : starts) {
    x = minimize_nelder_mead(unconstrained, x, nm).x;
    for (double mu = 1.0; mu <= 1e8; mu *= 10.0) {
      x = minimize_nelder_mead([mu](std::span<const double> v) { return penalised(v, mu); }, x, nm).x;
      nm.initial_step = 0.05;
    }
    nm.initial_step = 0.2;

    const UnitaryThree u = euler_unitary(x);
    NetworkSearchResult cand;
    cand.u = u;
    cand.residual = network_conditions_residual(u);
    cand.amplitude = std::norm(network_amplitudes(u)[0]);
    try {
      cand.p = network_probability(u);
    } catch (const SingularNetworkError&) {
      continue;
    }
    const bool feasible = cand.residual <= kAcceptResidual;
    const bool better = !have || (feasible && !best_feasible) ||
                        (feasible == best_feasible && cand.amplitude > best.amplitude);
    if (better) {
      best = cand;
      best_feasible = feasible;
      have = true;
    }
  }
  best.starts = static_cast<int>(starts.size());
  return best;
}

}  // namespace nssbound
