#include <doctest.h>

#include <cmath>
#include <cstring>

#include "nssbound/errors.hpp"
#include "nssbound/optimize.hpp"

using namespace nssbound;

TEST_CASE("euler parametrisation is unitary and complete at the identity") {
  const std::vector<double> zero(9, 0.0);
  CHECK(euler_unitary(zero).lambda().isApprox(Eigen::Matrix3cd::Identity()));
  const std::vector<double> x{0.3, -1.2, 2.2, 0.7, 0.1, -0.4, 1.9, 1.1, -2.5};
  const auto u = euler_unitary(x);
  CHECK((u.lambda().adjoint() * u.lambda() - Eigen::Matrix3cd::Identity()).norm() < 1e-14);
  CHECK_THROWS_AS(euler_unitary(std::vector<double>(4, 0.0)), InvalidArgument);
}

TEST_CASE("constrained network maximum") {
  const auto r = maximize_network();
  CHECK(r.starts == 64);
  CHECK(r.residual < 1e-6);
  CHECK(r.p <= 0.25);
  CHECK(r.p <= unitarity_bound(r.u(1, 1)) + 1e-10);
  CHECK(r.p > 0.234);
  CHECK(r.p == doctest::Approx(r.amplitude).epsilon(1e-5));
  CHECK(network_probability(r.u) == r.p);
}

TEST_CASE("network search is deterministic per seed") {
  NetworkSearchOptions opt;
  opt.restarts = 6;
  opt.seed = 42;
  const auto a = maximize_network(opt);
  const auto b = maximize_network(opt);
  CHECK(std::memcmp(&a.p, &b.p, sizeof(double)) == 0);
  CHECK(a.u.lambda() == b.u.lambda());
}

TEST_CASE("identity-seeded start leaves p = 0") {
  NetworkSearchOptions opt;
  opt.restarts = 0;
  opt.identity_start = true;
  const auto r = maximize_network(opt);
  CHECK(r.starts == 1);
  CHECK(r.p > 0.01);
  CHECK(r.residual < 1e-6);
}
