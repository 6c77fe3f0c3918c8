#include "nssbound/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "nssbound/errors.hpp"
#include "nssbound/optimize.hpp"
#include "nssbound/verify.hpp"

namespace nssbound {

namespace {

struct RunConfig {
  int m_max = 20;
  int n_max = 20;
  double t_min = -1.0;
  double t_max = 1.0;
  int t_steps = 2001;
  int gamma_steps = 201;
  int restarts = 64;
  std::uint64_t seed = 1;
  std::string out = "-";
  double tolerance = kBoundTolerance;
};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string fixed6(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

// CSV rows built in memory, written in one go.
class Csv {
 public:
  explicit Csv(std::vector<std::string> header) { row(header); }

  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) buf_ << (i ? "," : "") << cells[i];
    buf_ << '\n';
  }

  bool write(const std::string& path, std::ostream& out) const {
    if (path == "-") {
      out << buf_.str();
      return true;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) return false;
    f << buf_.str();
    return static_cast<bool>(f.flush());
  }

 private:
  std::ostringstream buf_;
};

int emit(const Csv& csv, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!csv.write(cfg.out, out)) {
    err << "error: cannot write " << cfg.out << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_sweep2d(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto sweep = sweep_two_weight(cfg.m_max, cfg.n_max);
  Csv csv({"m", "n", "t_star", "gamma", "p_max", "constraint_residual"});
  int violations = 0;
  for (const auto& r : sweep.records) {
    csv.row({std::to_string(r.m), std::to_string(r.n), num(r.t_star), num(r.gamma), num(r.p_max),
             num(r.constraint_residual)});
    if (r.p_max > kQuarterBound + cfg.tolerance) ++violations;
  }
  if (const int rc = emit(csv, cfg, out, err)) return rc;
  out << "best " << fixed6(sweep.best.p_max) << " at (" << sweep.best.m << ',' << sweep.best.n
      << ") t=" << num(sweep.best.t_star) << '\n';
  out << "pairs " << sweep.records.size() << " violations " << violations << '\n';
  return violations ? kExitViolation : kExitOk;
}

int cmd_sweep3d(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto grid = interior_grid(cfg.t_min, cfg.t_max, cfg.t_steps);
  ThreeDimOptions opt;
  opt.gamma_steps = cfg.gamma_steps;
  const auto sweep = optimize_three_dim(grid, opt);
  Csv csv({"t", "gamma1", "gamma2", "gamma3", "p"});
  bool violation = false;
  for (const auto& r : sweep.records) {
    csv.row({num(r.t), num(r.gamma1), num(r.gamma2), num(r.gamma3), num(r.p)});
    violation = violation || r.p > kQuarterBound + cfg.tolerance;
  }
  if (const int rc = emit(csv, cfg, out, err)) return rc;
  out << "grid best " << fixed6(sweep.best.p) << " at t=" << num(sweep.best.t) << '\n';
  if (sweep.polished) {
    out << "polished " << fixed6(sweep.polished->p) << " at t=" << num(sweep.polished->t) << '\n';
    violation = violation || sweep.polished->p > kQuarterBound + cfg.tolerance;
  }
  out << "local maxima " << sweep.local_maxima.size() << ':';
  for (auto i : sweep.local_maxima) {
    out << " t=" << num(sweep.records[i].t) << " p=" << fixed6(sweep.records[i].p);
  }
  out << '\n';
  return violation ? kExitViolation : kExitOk;
}

int cmd_su3max(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  NetworkSearchOptions opt;
  opt.restarts = cfg.restarts;
  opt.seed = cfg.seed;
  const auto res = maximize_network(opt);
  Csv csv({"row", "col", "re", "im"});
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      csv.row({std::to_string(i), std::to_string(j), num(res.u(i, j).real()), num(res.u(i, j).imag())});
    }
  }
  if (const int rc = emit(csv, cfg, out, err)) return rc;
  out << "p " << fixed6(res.p) << " residual " << num(res.residual) << " starts " << res.starts
      << '\n';
  return res.p > kQuarterBound + cfg.tolerance ? kExitViolation : kExitOk;
}

int cmd_boundcurve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.t_steps < 2) throw InvalidArgument("boundcurve: need at least 2 points");
  Csv csv({"abs_lambda11", "theta_min", "bound"});
  double best = -1.0;
  double best_r = 0.0;
  for (int i = 0; i < cfg.t_steps; ++i) {
    const double r = static_cast<double>(i) / (cfg.t_steps - 1);
    const auto pm = phase_minimized_bound(r);
    csv.row({num(r), num(pm.theta), num(pm.bound)});
    if (pm.bound > best) {
      best = pm.bound;
      best_r = r;
    }
  }
  if (const int rc = emit(csv, cfg, out, err)) return rc;
  out << "max bound " << fixed6(best) << " at |L11|=" << num(best_r) << '\n';
  return best > kQuarterBound + cfg.tolerance ? kExitViolation : kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto results = run_verification(cfg.seed);
  Csv csv({"check", "max_deviation", "tolerance", "pass"});
  bool ok = true;
  for (const auto& r : results) {
    csv.row({r.name, num(r.max_deviation), num(r.tolerance), r.pass ? "1" : "0"});
    out << (r.pass ? "PASS " : "FAIL ") << r.name << " max_dev=" << num(r.max_deviation)
        << " tol=" << num(r.tolerance) << '\n';
    ok = ok && r.pass;
  }
  if (cfg.out != "-") {
    if (const int rc = emit(csv, cfg, out, err)) return rc;
  }
  return ok ? kExitOk : kExitViolation;
}

int cmd_gate_demo(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto gate = two_weight_gate(0, 1);
  std::mt19937_64 rng(cfg.seed);
  Csv csv({"trial", "c0_re", "c0_im", "c1_re", "c1_im", "c2_re", "c2_im", "out0_re", "out0_im",
           "out1_re", "out1_im", "out2_re", "out2_im", "fidelity", "probability"});
  double worst = 1.0;
  for (int i = 0; i < 10; ++i) {
    const auto sig = random_signal(rng);
    const auto res = apply_conditional_gate(sig, gate.ancilla, gate.splitter, gate.detection);
    const SignalState target{{sig.c[0], sig.c[1], -sig.c[2]}};
    const double f = signal_fidelity(target, res.output);
    worst = std::min(worst, f);
    std::vector<std::string> cells{std::to_string(i)};
    for (const auto c : sig.c) {
      cells.push_back(num(c.real()));
      cells.push_back(num(c.imag()));
    }
    for (const auto c : res.output.c) {
      cells.push_back(num(c.real()));
      cells.push_back(num(c.imag()));
    }
    cells.push_back(num(f));
    cells.push_back(num(res.probability));
    csv.row(cells);
  }
  if (const int rc = emit(csv, cfg, out, err)) return rc;
  out << "T=" << num(gate.splitter.t().real()) << " gamma=" << num(gate.ancilla.weight(0))
      << " p=" << fixed6(gate.p) << " worst fidelity " << num(worst) << '\n';
  return 1.0 - worst > cfg.tolerance ? kExitViolation : kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Success-probability bounds for the linear-optics nonlinear sign shift"};
  app.require_subcommand(1);

  auto out_opt = [&](CLI::App* sub, const std::string& columns) {
    sub->add_option("--out", cfg.out, "CSV output path, '-' for stdout")->capture_default_str();
    sub->add_option("--tolerance", cfg.tolerance, "Slack on the 1/4 ceiling")->capture_default_str();
    sub->footer("CSV columns: " + columns);
  };

  auto* s2 = app.add_subcommand("sweep2d", "Two-weight ancilla: best physical root for every pair m <= n");
  s2->add_option("--m-max", cfg.m_max, "Largest m")->check(CLI::Range(0, 64))->capture_default_str();
  s2->add_option("--n-max", cfg.n_max, "Largest n")->check(CLI::Range(0, 64))->capture_default_str();
  out_opt(s2, "m,n,t_star,gamma,p_max,constraint_residual");

  auto* s3 = app.add_subcommand("sweep3d", "Three-dimensional ancilla: best probability along real T");
  s3->add_option("--t-min", cfg.t_min, "Lower end of the T interval")->capture_default_str();
  s3->add_option("--t-max", cfg.t_max, "Upper end of the T interval")->capture_default_str();
  s3->add_option("--t-steps", cfg.t_steps, "Interior grid points")->check(CLI::PositiveNumber)->capture_default_str();
  s3->add_option("--gamma-steps", cfg.gamma_steps, "Weight grid per axis")->check(CLI::Range(3, 2001))->capture_default_str();
  out_opt(s3, "t,gamma1,gamma2,gamma3,p");

  auto* su = app.add_subcommand("su3max", "Best network probability under the sign-shift conditions");
  su->add_option("--restarts", cfg.restarts, "Random starts")->check(CLI::NonNegativeNumber)->capture_default_str();
  su->add_option("--seed", cfg.seed, "Seed of the start schedule")->capture_default_str();
  out_opt(su, "row,col,re,im (entries of the optimal unitary)");

  auto* bc = app.add_subcommand("boundcurve", "Phase-minimised unitarity bound against |L11|");
  bc->add_option("--t-steps", cfg.t_steps, "Points on [0, 1]")->check(CLI::Range(2, 1000000));
  out_opt(bc, "abs_lambda11,theta_min,bound");

  auto* ve = app.add_subcommand("verify", "Oracle-equivalence and formula-consistency suites");
  ve->add_option("--seed", cfg.seed, "Seed for the random systems")->capture_default_str();
  out_opt(ve, "check,max_deviation,tolerance,pass");

  auto* gd = app.add_subcommand("gate-demo", "Run the (0,1) gate on random signals");
  gd->add_option("--seed", cfg.seed, "Seed for the signals")->capture_default_str();
  out_opt(gd, "trial,c0_re,c0_im,c1_re,c1_im,c2_re,c2_im,out0_re,...,out2_im,fidelity,probability");

  bc->preparse_callback([&](std::size_t) { cfg.t_steps = 201; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*s2) return cmd_sweep2d(cfg, out, err);
    if (*s3) return cmd_sweep3d(cfg, out, err);
    if (*su) return cmd_su3max(cfg, out, err);
    if (*bc) return cmd_boundcurve(cfg, out, err);
    if (*ve) return cmd_verify(cfg, out, err);
    if (*gd) return cmd_gate_demo(cfg, out, err);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace nssbound
