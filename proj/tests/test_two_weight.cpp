#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "nssbound/errors.hpp"
#include "nssbound/optimize.hpp"
#include "nssbound/polynomial.hpp"
#include "oracles.hpp"

using namespace nssbound;

TEST_CASE("two-weight probability limits") {
  CHECK(p_two_weight({1, 1, 0.4, 0.3}) == 0.0);
  CHECK(p_two_weight({0, 1, 0.4, 0.0}) == 0.0);
  CHECK(p_two_weight({0, 1, 0.4, 1.0}) == 0.0);
  CHECK(p_two_weight({0, 1, 0.4, -1.0}) == 0.0);
  CHECK(p_two_weight({0, 1, 0.0, 0.3}) == 0.0);
  CHECK_THROWS_AS(p_two_weight({0, 1, 1.2, 0.3}), InvalidArgument);
  CHECK_THROWS_AS(gamma_max(0, 1, 0.0), InvalidArgument);
  CHECK_THROWS_AS(gamma_max(0, 1, 1.0), InvalidArgument);
}

TEST_CASE("single-photon optimum") {
  const double t = 1.0 - std::sqrt(2.0);
  const double g = gamma_max(0, 1, t);
  CHECK(p_two_weight({0, 1, g, t}) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(p_max_two_weight(0, 1, t) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("m = 2, n = 1 values") {
  const double s = std::sqrt(1.0 / 3.0);
  // p(T_{1,2}) = (1/4)(n/(n+2))^n (sqrt(n/(n+2)) -/+ 1)^2 with T_1 = +sqrt paired with the minus sign
  CHECK(p_max_two_weight(2, 1, s) == doctest::Approx(0.25 / 3.0 * (s - 1.0) * (s - 1.0)).epsilon(1e-12));
  CHECK(p_max_two_weight(2, 1, -s) == doctest::Approx(0.25 / 3.0 * (s + 1.0) * (s + 1.0)).epsilon(1e-12));
  CHECK(p_max_two_weight(2, 1, -s) == doctest::Approx(0.2073362).epsilon(1e-6));

  const double t3 = (1.0 - std::sqrt(5.0)) / 2.0;
  const double x = 8.0;
  const double y = 4.0 * (7.0 - 3.0 * std::sqrt(5.0));
  const double z = 2.0 * (1.0 - std::sqrt(5.0)) * (1.0 - std::sqrt(5.0));
  const double closed = z / std::pow(std::sqrt(x) + std::sqrt(y), 2);
  CHECK(p_max_two_weight(2, 1, t3) == doctest::Approx(closed).epsilon(1e-12));
  CHECK(closed == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("adjacent family closed forms in n") {
  double prev = HUGE_VAL;
  double px = -HUGE_VAL, py = -HUGE_VAL, pz = -HUGE_VAL;
  for (int n = 0; n <= 40; ++n) {
    const double nn = n;
    const double w = std::sqrt(nn * nn + 2.0 * nn + 2.0);
    const double x = 3.0 + nn + 2.0 * nn * nn + nn * nn * nn + nn * nn * nn * nn - (nn * nn * nn + nn - 2.0) * w;
    const double y = (1.0 + nn) * (1.0 + nn) * (3.0 + 3.0 * nn + nn * nn - (nn + 2.0) * w);
    const double z = 2.0 * std::pow(nn + 1.0, 2.0 * (1.0 - nn)) * std::pow(1.0 - w, 2.0 * nn);
    const double t3 = closed_form_adjacent(n).t3;
    const double p = p_max_two_weight(n + 1, n, t3);
    if (n >= 1) CHECK(p == doctest::Approx(z / std::pow(std::sqrt(x) + std::sqrt(y), 2)).epsilon(1e-9));
    CHECK(p < prev);
    CHECK(p <= 0.25 + 1e-12);
    CHECK(x > px);
    CHECK(y > py);
    CHECK(z > pz);
    prev = p;
    px = x;
    py = y;
    pz = z;
  }
}

TEST_CASE("gamma_max swap symmetry and golden-section oracle") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> idx(0, 8);
  std::uniform_real_distribution<double> tdist(-0.97, 0.97);
  int tested = 0;
  while (tested < 50) {
    const int m = idx(rng);
    const int n = idx(rng);
    const double t = tdist(rng);
    if (m == n || std::abs(t) < 0.05) continue;
    const double g = gamma_max(m, n, t);
    const double gs = gamma_max(n, m, t);
    CHECK(g * g + gs * gs == doctest::Approx(1.0).epsilon(1e-12));

    double arg = 0.0;
    const double best = oracle::ternary_max(
        [&](double gamma) { return p_two_weight({m, n, gamma, t}); }, 1e-9, 1.0 - 1e-9, arg);
    const double pm = p_max_two_weight(m, n, t);
    CHECK(pm == doctest::Approx(best).epsilon(1e-8));
    CHECK(std::abs(pm - best) <= 1e-8);
    CHECK(p_two_weight({m, n, g, t}) == doctest::Approx(pm).epsilon(1e-10));
    if (g > 1e-4 && g < 1.0 - 1e-4) {
      CHECK(p_two_weight({m, n, g, t}) >= p_two_weight({m, n, g + 1e-4, t}));
      CHECK(p_two_weight({m, n, g, t}) >= p_two_weight({m, n, g - 1e-4, t}));
    }
    ++tested;
  }
}

TEST_CASE("formula equals first principles wherever the constraint holds") {
  for (int m = 0; m <= 8; ++m) {
    for (int n = 0; n <= 8; ++n) {
      if (m == n) continue;
      for (double t : solve_physical_roots(quartic_real(m, n)).roots) {
        if (std::abs(t) < 1e-9 || std::abs(t) > 1.0 - 1e-9) continue;
        const double g = gamma_max(m, n, t);
        const auto fp = two_weight_first_principles(m, n, g, t);
        CHECK(fp.constraint_residual < 1e-8);
        CHECK(fp.p == doctest::Approx(p_max_two_weight(m, n, t)).epsilon(1e-8));
        // any gamma works on the constraint surface
        const auto fp2 = two_weight_first_principles(m, n, 0.37, t);
        CHECK(fp2.constraint_residual < 1e-8);
        CHECK(fp2.p == doctest::Approx(p_two_weight({m, n, 0.37, t})).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("sweep over m, n <= 20") {
  const auto s = sweep_two_weight(20, 20);
  CHECK(s.records.size() == 231);
  CHECK(s.violations == 0);
  CHECK(s.best.m == 0);
  CHECK(s.best.n == 1);
  CHECK(s.best.p_max == doctest::Approx(0.25).epsilon(1e-12));
  double max_p = 0.0;
  for (const auto& r : s.records) {
    max_p = std::max(max_p, r.p_max);
    CHECK(r.p_max <= 0.25 + 1e-9);
    if (r.m == r.n) {
      CHECK(r.p_max == 0.0);
      CHECK(std::isnan(r.t_star));
    } else if (!(r.m == 0 && r.n == 1)) {
      CHECK(r.p_max < 0.25 - 1e-9);
    }
    if (r.p_max > 0.0) {
      CHECK(r.constraint_residual < 1e-8);
      CHECK(r.consistency_error < 1e-8);
    }
  }
  CHECK(std::abs(s.best.p_max - max_p) <= 1e-12);
  CHECK_THROWS_AS(sweep_two_weight(65, 3), InvalidArgument);
}

TEST_CASE("sweeps are deterministic") {
  const auto a = sweep_two_weight(12, 15);
  const auto b = sweep_two_weight(12, 15);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(std::memcmp(&a.records[i].p_max, &b.records[i].p_max, sizeof(double)) == 0);
    CHECK(std::memcmp(&a.records[i].t_star, &b.records[i].t_star, sizeof(double)) == 0);
  }
}

TEST_CASE("complex-T search") {
  const auto roots = complex_two_weight_roots(0, 1);
  REQUIRE_FALSE(roots.empty());
  CHECK(roots.front().p_max == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(std::abs(roots.front().t - (1.0 - std::sqrt(2.0))) < 1e-7);
  for (int m = 0; m <= 3; ++m) {
    for (int n = m + 1; n <= 4; ++n) {
      for (const auto& r : complex_two_weight_roots(m, n)) {
        CHECK(r.quartic_residual <= 1e-9);
        CHECK(r.p_max <= 0.25 + 1e-9);
        const auto fp = two_weight_first_principles(m, n, r.gamma, r.t);
        CHECK(fp.constraint_residual < 1e-6);
        CHECK(fp.p == doctest::Approx(r.p_max).epsilon(1e-6));
      }
    }
  }
}
