#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "nssbound/cli.hpp"

using namespace nssbound;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "nssbound");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("usage errors exit with 1") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"sweep2d", "--m-max", "notanumber"}).code == kExitUsage);
  CHECK(run({"sweep2d", "--m-max", "99"}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({"sweep3d", "--t-min", "0.5", "--t-max", "0.1"}).code == kExitUsage);
}

TEST_CASE("help documents the CSV columns") {
  const auto r = run({"sweep2d", "--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("m,n,t_star,gamma,p_max,constraint_residual") != std::string::npos);
}

TEST_CASE("sweep2d writes a reproducible CSV") {
  const std::string path = "cli_test_sweep2d.csv";
  const auto a = run({"sweep2d", "--m-max", "20", "--n-max", "20", "--out", path});
  CHECK(a.code == kExitOk);
  CHECK(a.out.find("best 0.250000 at (0,1)") != std::string::npos);
  const auto first = slurp(path);
  CHECK(first.rfind("m,n,t_star,gamma,p_max,constraint_residual\n", 0) == 0);
  CHECK(std::count(first.begin(), first.end(), '\n') == 232);
  CHECK(first.find("0,1,-0.414213562373,") != std::string::npos);
  run({"sweep2d", "--m-max", "20", "--n-max", "20", "--out", path});
  CHECK(slurp(path) == first);
  std::remove(path.c_str());
}

TEST_CASE("tight tolerance reports a contradiction") {
  const auto r = run({"sweep2d", "--m-max", "1", "--n-max", "1", "--tolerance", "-1e-3", "--out", "-"});
  CHECK(r.code == kExitViolation);
}

TEST_CASE("unwritable output path") {
  const auto r = run({"sweep2d", "--out", "/nonexistent-dir/x.csv"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("cannot write") != std::string::npos);
}

TEST_CASE("boundcurve, verify and gate-demo") {
  auto r = run({"boundcurve", "--t-steps", "11", "--out", "-"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("max bound 0.250000 at |L11|=0") != std::string::npos);
  CHECK(r.out.rfind("abs_lambda11,theta_min,bound\n", 0) == 0);

  r = run({"verify"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);

  r = run({"gate-demo", "--seed", "3", "--out", "-"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("p=0.250000") != std::string::npos);
}

TEST_CASE("small sweep3d and su3max runs") {
  auto r = run({"sweep3d", "--t-min", "-0.5", "--t-max", "-0.3", "--t-steps", "9", "--gamma-steps", "41",
                "--out", "-"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("t,gamma1,gamma2,gamma3,p\n", 0) == 0);
  CHECK(r.out.find("polished 0.250000") != std::string::npos);

  r = run({"su3max", "--restarts", "4", "--seed", "2", "--out", "-"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("row,col,re,im\n", 0) == 0);
}
