#include <doctest.h>

#include <cmath>
#include <cstring>

#include "nssbound/errors.hpp"
#include "nssbound/nelder_mead.hpp"
#include "nssbound/optimize.hpp"

using namespace nssbound;

TEST_CASE("interior grid") {
  const auto g = interior_grid(-1.0, 1.0, 3);
  REQUIRE(g.size() == 3);
  CHECK(g[0] == doctest::Approx(-0.5));
  CHECK(g[1] == doctest::Approx(0.0));
  CHECK(g[2] == doctest::Approx(0.5));
  CHECK_THROWS_AS(interior_grid(1.0, -1.0, 3), InvalidArgument);
}

TEST_CASE("local maxima helper") {
  const std::vector<double> v{0, 1, 0, 2, 2, 1, 3, 4};
  const auto m = local_maxima(v);
  REQUIRE(m.size() == 2);
  CHECK(m[0] == 1);
  CHECK(m[1] == 3);
  CHECK(local_maxima(std::vector<double>{1, 2, 3}).empty());
}

TEST_CASE("nelder-mead and golden section") {
  const auto r = minimize_nelder_mead(
      [](std::span<const double> x) {
        return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
      },
      {-1.2, 1.0}, {0.1, 1e-10, 0.0, 20000, 4});
  CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(r.x[1] == doctest::Approx(1.0).epsilon(1e-7));
  const auto g = golden_section_maximize([](double x) { return -std::pow(x - 0.3, 2); }, -1.0, 1.0);
  CHECK(g.x == doctest::Approx(0.3).epsilon(1e-9));
  CHECK_THROWS_AS(golden_section_maximize([](double) { return 0.0; }, 1.0, 0.0), InvalidArgument);
}

TEST_CASE("peak of the three-weight ancilla") {
  const double t = 1.0 - std::sqrt(2.0);
  const auto r = maximize_three_dim(t);
  CHECK(r.p == doctest::Approx(0.25).epsilon(1e-6));
  CHECK(std::abs(r.p - 0.25) <= 1e-6);
  CHECK(r.gamma1 * r.gamma1 + r.gamma2 * r.gamma2 + r.gamma3 * r.gamma3 == doctest::Approx(1.0));
  // the library path gives the same value at the returned weights
  CHECK(three_dim_probability(t, r.gamma1, r.gamma2) == doctest::Approx(r.p).epsilon(1e-10));
}

TEST_CASE("fast path agrees with the library path") {
  for (double t : {-0.8, -0.55, -0.2, 0.1, 0.4, 0.7}) {
    const auto r = maximize_three_dim(t, 61);
    CHECK(three_dim_probability(t, r.gamma1, r.gamma2) == doctest::Approx(r.p).epsilon(1e-10));
    CHECK(r.p <= 0.25 + 1e-9);
  }
}

TEST_CASE("vanishes towards unit transmission") {
  CHECK(maximize_three_dim(0.999, 61).p < 1e-6);
  CHECK(maximize_three_dim(-0.999, 61).p < 1e-6);
  CHECK_THROWS_AS(maximize_three_dim(1.0), InvalidArgument);
}

TEST_CASE("local maxima sit on two-weight roots") {
  // (2,1) root (1 - sqrt 5)/2 with the |0> weight suppressed gives 1/5
  const double t = (1.0 - std::sqrt(5.0)) / 2.0;
  const auto r = maximize_three_dim(t, 101);
  CHECK(r.p == doctest::Approx(0.2).epsilon(1e-6));
}

TEST_CASE("coarse curve structure") {
  ThreeDimOptions opt;
  opt.gamma_steps = 81;
  const auto grid = interior_grid(-1.0, 1.0, 399);
  const auto s = optimize_three_dim(grid, opt);
  REQUIRE(s.records.size() == grid.size());
  double max_p = 0.0;
  for (const auto& r : s.records) max_p = std::max(max_p, r.p);
  CHECK(s.best.p == max_p);
  CHECK(s.local_maxima.size() == 3);
  REQUIRE(s.polished.has_value());
  CHECK(s.polished->p >= s.best.p);
  CHECK(s.polished->p == doctest::Approx(0.25).epsilon(1e-6));
  CHECK(s.polished->t == doctest::Approx(1.0 - std::sqrt(2.0)).epsilon(1e-4));

  const auto again = optimize_three_dim(grid, opt);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(std::memcmp(&again.records[i].p, &s.records[i].p, sizeof(double)) == 0);
  }
}
