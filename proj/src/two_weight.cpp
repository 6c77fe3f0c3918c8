#include <algorithm>
#include <cmath>
#include <limits>

#include "nssbound/ancilla.hpp"
#include "nssbound/errors.hpp"
#include "nssbound/nelder_mead.hpp"
#include "nssbound/optimize.hpp"
#include "nssbound/polynomial.hpp"

namespace nssbound {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kEdge = 1e-12;
// Simplex runs that drift into the root at T = 0 stop short of it.
constexpr double kOriginRoot = 1e-6;

// a_j = T* - (j+1)|T|^2 + j
Complex bracket(int j, Complex t) {
  return std::conj(t) - static_cast<double>(j + 1) * std::norm(t) + static_cast<double>(j);
}

void check_pair(int m, int n) {
  if (m < 0 || n < 0) throw InvalidArgument("two-weight: negative photon number");
}

void check_open_disk(Complex t) {
  const double a = std::abs(t);
  if (!(a > 0.0 && a < 1.0)) throw InvalidArgument("two-weight: need 0 < |t| < 1");
}

}  // namespace

double p_two_weight(int m, int n, double gamma, Complex t) {
  check_pair(m, n);
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw InvalidArgument("two-weight: gamma outside [0, 1]");
  const double at = std::abs(t);
  if (m == n || at == 0.0 || at >= 1.0 || gamma == 0.0 || gamma == 1.0) return 0.0;

  const double g2 = gamma * gamma;
  const double t2 = at * at;
  const double num = static_cast<double>((m - n) * (m - n)) * (1.0 - t2) * (1.0 - t2);
  const double den = std::norm(bracket(n, t)) / (g2 * std::pow(t2, m)) +
                     std::norm(bracket(m, t)) / ((1.0 - g2) * std::pow(t2, n));
  return num / den;
}

double p_two_weight(const TwoWeightConfig& cfg) {
  return p_two_weight(cfg.m, cfg.n, cfg.gamma, Complex(cfg.t, 0.0));
}

double gamma_max(int m, int n, Complex t) {
  check_pair(m, n);
  check_open_disk(t);
  const double at = std::abs(t);
  const double a = std::pow(at, m) * std::abs(bracket(m, t));
  const double b = std::pow(at, n) * std::abs(bracket(n, t));
  if (a == 0.0 && b == 0.0) throw DegenerateError("gamma_max: both brackets vanish");
  // gamma^2 = [1 +/- |a/b|]^-1; only the "+" branch stays in [0, 1] for a != 0.
  for (double sign : {1.0, -1.0}) {
    const double g2 = b / (b + sign * a);
    if (std::isfinite(g2) && g2 >= 0.0 && g2 <= 1.0) return std::sqrt(g2);
  }
  throw DegenerateError("gamma_max: no branch inside [0, 1]");
}

double gamma_max(int m, int n, double t) { return gamma_max(m, n, Complex(t, 0.0)); }

double p_max_two_weight(int m, int n, Complex t) {
  check_pair(m, n);
  check_open_disk(t);
  if (m == n) return 0.0;
  const double at = std::abs(t);
  const double t2 = at * at;
  const double num = static_cast<double>((m - n) * (m - n)) * (1.0 - t2) * (1.0 - t2) *
                     std::pow(t2, m + n);
  const double s = std::abs(bracket(n, t)) * std::pow(at, n) +
                   std::abs(bracket(m, t)) * std::pow(at, m);
  if (s == 0.0) throw DegenerateError("p_max: both brackets vanish");
  return num / (s * s);
}

double p_max_two_weight(int m, int n, double t) { return p_max_two_weight(m, n, Complex(t, 0.0)); }

Probability2d two_weight_first_principles(int m, int n, double gamma, Complex t) {
  const auto anc = AncillaSpec::two_weight(m, n, gamma);
  const auto ps = build_psi_system(anc, BeamSplitter::from_transmission(t));
  return success_probability_2d(ps, gram_schmidt(ps));
}

TwoWeightRecord best_two_weight_root(int m, int n) {
  check_pair(m, n);
  TwoWeightRecord rec;
  rec.m = m;
  rec.n = n;
  rec.t_star = kNaN;
  rec.constraint_residual = kNaN;
  if (m == n) return rec;

  const auto roots = solve_physical_roots(quartic_real(m, n));
  bool found = false;
  for (double r : roots.roots) {
    if (std::abs(r) <= kEdge || std::abs(r) >= 1.0 - kEdge) continue;
    double p = 0.0;
    try {
      p = p_max_two_weight(m, n, r);
    } catch (const DegenerateError&) {
      continue;
    }
    if (!found || p > rec.p_max) {
      found = true;
      rec.p_max = p;
      rec.t_star = r;
    }
  }
  if (!found) return rec;

  rec.gamma = gamma_max(m, n, rec.t_star);
  const auto fp = two_weight_first_principles(m, n, rec.gamma, Complex(rec.t_star, 0.0));
  rec.constraint_residual = fp.constraint_residual;
  rec.consistency_error = std::abs(fp.p - rec.p_max);
  return rec;
}

TwoWeightSweep sweep_two_weight(int m_max, int n_max) {
  if (m_max < 0 || n_max < 0 || m_max > 64 || n_max > 64) {
    throw InvalidArgument("sweep: m_max and n_max must lie in [0, 64]");
  }
  TwoWeightSweep out;
  bool have_best = false;
  for (int m = 0; m <= m_max; ++m) {
    for (int n = m; n <= n_max; ++n) {
      auto rec = best_two_weight_root(m, n);
      if (rec.p_max > kQuarterBound + kBoundTolerance) ++out.violations;
      if (!have_best || rec.p_max > out.best.p_max) {
        out.best = rec;
        have_best = true;
      }
      out.records.push_back(rec);
    }
  }
  return out;
}

std::vector<ComplexRootRecord> complex_two_weight_roots(int m, int n, int grid) {
  check_pair(m, n);
  if (grid < 4) throw InvalidArgument("complex search: grid too coarse");
  const double two_pi = 2.0 * std::acos(-1.0);

  auto residual = [m, n](Complex t) { return std::norm(quartic_complex(m, n, t)); };

  std::vector<double> value(static_cast<std::size_t>(grid * grid));
  auto at = [&](int i, int j) -> double& { return value[static_cast<std::size_t>(i * grid + j)]; };
  auto point = [&](int i, int j) { return std::polar((i + 0.5) / grid, two_pi * j / grid); };
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) at(i, j) = residual(point(i, j));
  }

  // Seeds are the grid's local minima (angle is periodic); the smallest
  // values alone would all crowd around the root at T = 0.
  struct Cell {
    double value;
    Complex t;
  };
  std::vector<Cell> cells;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      bool minimum = true;
      for (int di = -1; di <= 1 && minimum; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          const int ii = i + di;
          if ((di == 0 && dj == 0) || ii < 0 || ii >= grid) continue;
          if (at(ii, (j + dj + grid) % grid) < at(i, j)) {
            minimum = false;
            break;
          }
        }
      }
      if (minimum) cells.push_back({at(i, j), point(i, j)});
    }
  }
  std::stable_sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.value < b.value; });
  const std::size_t seeds = std::min<std::size_t>(32, cells.size());

  NelderMeadOptions opt;
  opt.initial_step = 1.0 / grid;
  opt.tolerance = 1e-13;
  opt.max_evaluations = 4000;

  std::vector<ComplexRootRecord> out;
  for (std::size_t s = 0; s < seeds; ++s) {
    const auto res = minimize_nelder_mead(
        [&](std::span<const double> x) { return residual(Complex(x[0], x[1])); },
        {cells[s].t.real(), cells[s].t.imag()}, opt);
    const Complex t(res.x[0], res.x[1]);
    const double q = std::sqrt(residual(t));
    const double mag = std::abs(t);
    if (q > 1e-9 || mag <= kOriginRoot || mag >= 1.0 - kEdge) continue;
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const ComplexRootRecord& r) { return std::abs(r.t - t) < 1e-7; });
    if (seen) continue;
    ComplexRootRecord rec;
    rec.t = t;
    rec.quartic_residual = q;
    try {
      rec.gamma = gamma_max(m, n, t);
      rec.p_max = p_max_two_weight(m, n, t);
    } catch (const DegenerateError&) {
      continue;
    }
    out.push_back(rec);
  }
  std::stable_sort(out.begin(), out.end(), [](const ComplexRootRecord& a, const ComplexRootRecord& b) {
    return a.p_max > b.p_max;
  });
  return out;
}

TwoWeightGate two_weight_gate(int m, int n) {
  const auto rec = best_two_weight_root(m, n);
  if (!(rec.p_max > 0.0)) throw DegenerateError("two-weight gate: no usable root");
  auto anc = AncillaSpec::two_weight(m, n, rec.gamma);
  const auto bs = BeamSplitter::from_transmission(Complex(rec.t_star, 0.0));
  const auto ps = build_psi_system(anc, bs);
  const auto g = gram_schmidt(ps);
  const auto p2 = success_probability_2d(ps, g);
  return {std::move(anc), bs, detection_vector(ps, g, p2.det), p2.p};
}

}  // namespace nssbound
