#include <algorithm>
#include <cmath>
#include <limits>

#include "nssbound/ancilla.hpp"
#include "nssbound/detail/gram.hpp"
#include "nssbound/errors.hpp"
#include "nssbound/nelder_mead.hpp"
#include "nssbound/optimize.hpp"

namespace nssbound {

namespace {

using Vec3 = Eigen::Vector3d;

// Diagonal elements <l k|U|l k> for l, k = 0..2 at real t.
Eigen::Matrix3d diagonal_table(double t) {
  const auto bs = BeamSplitter::from_transmission(Complex(t, 0.0));
  Eigen::Matrix3d d;
  for (int l = 0; l < 3; ++l) {
    for (int k = 0; k < 3; ++k) d(l, k) = diagonal_element(bs, {l, k}).real();
  }
  return d;
}

struct Branches {
  std::array<Vec3, 3> phi;
  std::array<double, 3> norms;
};

Branches branches(const Eigen::Matrix3d& d, const Vec3& gamma) {
  Branches b;
  for (int l = 0; l < 3; ++l) {
    b.phi[l] = d.row(l).transpose().cwiseProduct(gamma);
    b.norms[l] = b.phi[l].squaredNorm();
  }
  return b;
}

// 3d formula where it applies, NaN otherwise.
double grid_value(const Branches& b) {
  const double floor = kNormFloor * std::max({1.0, b.norms[0], b.norms[1], b.norms[2]});
  if (!(b.norms[0] > floor && b.norms[1] > floor && b.norms[2] > floor)) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  const auto g = detail::gram_schmidt_vectors(b.phi, b.norms).rep;
  if (g.rank < 3) return std::numeric_limits<double>::quiet_NaN();
  return success_probability_3d(b.norms, g).p;
}

// Squared distance from phi_0 to span{phi_0 - phi_1, phi_0 + phi_2}.
double rank_aware(const Branches& b) {
  const double scale = std::max({1.0, b.norms[0], b.norms[1], b.norms[2]});
  std::array<Vec3, 2> basis;
  int used = 0;
  for (const Vec3& w : {Vec3(b.phi[0] - b.phi[1]), Vec3(b.phi[0] + b.phi[2])}) {
    Vec3 v = w;
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < used; ++i) v -= basis[i].dot(v) * basis[i];
    }
    const double nv = v.norm();
    if (nv > 1e-10 * std::sqrt(scale)) basis[used++] = v / nv;
  }
  Vec3 r = b.phi[0];
  for (int pass = 0; pass < 2; ++pass) {
    for (int i = 0; i < used; ++i) r -= basis[i].dot(r) * basis[i];
  }
  return r.squaredNorm();
}

Vec3 from_angles(double a, double c) {
  const double half_pi = 0.5 * std::acos(-1.0);
  a = std::clamp(a, 0.0, half_pi);
  c = std::clamp(c, 0.0, half_pi);
  return {std::cos(a), std::sin(a) * std::cos(c), std::sin(a) * std::sin(c)};
}

}  // namespace

double three_dim_probability(double t, double g1, double g2) {
  const auto anc = AncillaSpec::three_dim(g1, g2);
  const auto ps = build_psi_system(anc, BeamSplitter::from_transmission(Complex(t, 0.0)));
  return success_probability_rank_aware(ps, GateKind::SignShift);
}

ThreeDimRecord maximize_three_dim(double t, int gamma_steps) {
  if (!(t > -1.0 && t < 1.0)) throw InvalidArgument("three-dim: t must lie in (-1, 1)");
  if (gamma_steps < 3) throw InvalidArgument("three-dim: gamma grid needs at least 3 steps");
  const Eigen::Matrix3d d = diagonal_table(t);

  ThreeDimRecord rec;
  rec.t = t;
  rec.p = -1.0;
  const double h = 1.0 / (gamma_steps - 1);
  for (int i = 1; i < gamma_steps; ++i) {
    const double g1 = i * h;
    for (int j = 1; j < gamma_steps; ++j) {
      const double g2 = j * h;
      const double rest = 1.0 - g1 * g1 - g2 * g2;
      if (rest <= 0.0) break;
      const Vec3 gamma(g1, g2, std::sqrt(rest));
      const double p = grid_value(branches(d, gamma));
      if (p > rec.p) {
        rec.p = p;
        rec.gamma1 = gamma[0];
        rec.gamma2 = gamma[1];
        rec.gamma3 = gamma[2];
      }
    }
  }
  if (rec.p < 0.0) {
    rec.p = 0.0;
    rec.gamma1 = rec.gamma2 = rec.gamma3 = std::numeric_limits<double>::quiet_NaN();
    return rec;
  }

  NelderMeadOptions opt;
  opt.initial_step = h;
  opt.tolerance = 1e-8;
  opt.max_evaluations = 4000;
  const auto res = minimize_nelder_mead(
      [&](std::span<const double> x) { return -rank_aware(branches(d, from_angles(x[0], x[1]))); },
      {std::acos(std::clamp(rec.gamma1, -1.0, 1.0)), std::atan2(rec.gamma3, rec.gamma2)}, opt);
  if (-res.value > rec.p) {
    const Vec3 g = from_angles(res.x[0], res.x[1]);
    rec.p = -res.value;
    rec.gamma1 = g[0];
    rec.gamma2 = g[1];
    rec.gamma3 = g[2];
  }
  return rec;
}

std::vector<double> interior_grid(double t_min, double t_max, int steps) {
  if (steps < 1 || !(t_max > t_min)) throw InvalidArgument("grid: need steps >= 1 and t_max > t_min");
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) out[i] = t_min + (i + 1) * (t_max - t_min) / (steps + 1);
  return out;
}

std::vector<std::size_t> local_maxima(std::span<const double> values) {
  std::vector<std::size_t> out;
  const std::size_t n = values.size();
  std::size_t i = 1;
  while (i + 1 < n) {
    if (values[i] > values[i - 1]) {
      std::size_t j = i;
      while (j + 1 < n && values[j + 1] == values[i]) ++j;
      if (j + 1 < n && values[j + 1] < values[i]) out.push_back(i);
      i = j + 1;
    } else {
      ++i;
    }
  }
  return out;
}

ThreeDimSweep optimize_three_dim(std::span<const double> t_grid, const ThreeDimOptions& opt) {
  ThreeDimSweep out;
  if (t_grid.empty()) return out;
  for (double t : t_grid) {
    if (!(t > -1.0 && t < 1.0)) throw InvalidArgument("three-dim: grid point outside (-1, 1)");
  }

  std::vector<double> curve;
  std::size_t best = 0;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    out.records.push_back(maximize_three_dim(t_grid[i], opt.gamma_steps));
    curve.push_back(out.records.back().p);
    if (curve[i] > curve[best]) best = i;
  }
  out.best = out.records[best];
  out.local_maxima = local_maxima(curve);

  if (opt.polish_peak && t_grid.size() >= 2) {
    const double lo = best > 0 ? t_grid[best - 1] : std::max(-1.0 + 1e-12, 2 * t_grid[0] - t_grid[1]);
    const double hi = best + 1 < t_grid.size()
                          ? t_grid[best + 1]
                          : std::min(1.0 - 1e-12, 2 * t_grid[best] - t_grid[best - 1]);
    const auto peak = golden_section_maximize(
        [&](double t) { return maximize_three_dim(t, opt.gamma_steps).p; }, lo, hi, 1e-9);
    auto rec = maximize_three_dim(peak.x, opt.gamma_steps);
    out.polished = rec.p >= out.best.p ? rec : out.best;
  }
  return out;
}

}  // namespace nssbound
