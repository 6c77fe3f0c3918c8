#include "nssbound/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nssbound/errors.hpp"

namespace nssbound {

namespace {

struct Simplex {
  std::vector<std::vector<double>> x;
  std::vector<double> f;
};

double distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

// One simplex run from x0; returns the best vertex.
NelderMeadResult run_simplex(const Objective& f, const std::vector<double>& x0, double step,
                             const NelderMeadOptions& opt, int budget) {
  const std::size_t n = x0.size();
  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    const double v = f(x);
    return std::isnan(v) ? HUGE_VAL : v;
  };

  Simplex s;
  s.x.push_back(x0);
  s.f.push_back(eval(x0));
  for (std::size_t i = 0; i < n; ++i) {
    auto v = x0;
    v[i] += step;
    s.x.push_back(v);
    s.f.push_back(eval(v));
  }

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), xr(n), xe(n), xc(n);
  bool converged = false;

  while (evals < budget) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return s.f[a] < s.f[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[n - 1];

    double diameter = 0.0;
    for (std::size_t i = 0; i <= n; ++i) diameter = std::max(diameter, distance(s.x[i], s.x[best]));
    if (diameter <= opt.tolerance ||
        (opt.f_tolerance > 0.0 && s.f[worst] - s.f[best] <= opt.f_tolerance)) {
      converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t d = 0; d < n; ++d) centroid[d] += s.x[i][d] / static_cast<double>(n);
    }

    for (std::size_t d = 0; d < n; ++d) xr[d] = centroid[d] + (centroid[d] - s.x[worst][d]);
    const double fr = eval(xr);

    if (fr < s.f[best]) {
      for (std::size_t d = 0; d < n; ++d) xe[d] = centroid[d] + 2.0 * (centroid[d] - s.x[worst][d]);
      const double fe = eval(xe);
      if (fe < fr) {
        s.x[worst] = xe;
        s.f[worst] = fe;
      } else {
        s.x[worst] = xr;
        s.f[worst] = fr;
      }
      continue;
    }
    if (fr < s.f[second]) {
      s.x[worst] = xr;
      s.f[worst] = fr;
      continue;
    }

    const bool outside = fr < s.f[worst];
    for (std::size_t d = 0; d < n; ++d) {
      xc[d] = outside ? centroid[d] + 0.5 * (xr[d] - centroid[d])
                      : centroid[d] + 0.5 * (s.x[worst][d] - centroid[d]);
    }
    const double fc = eval(xc);
    if (fc < std::min(fr, s.f[worst])) {
      s.x[worst] = xc;
      s.f[worst] = fc;
      continue;
    }

    // shrink towards the best vertex
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t d = 0; d < n; ++d) s.x[i][d] = s.x[best][d] + 0.5 * (s.x[i][d] - s.x[best][d]);
      s.f[i] = eval(s.x[i]);
    }
  }

  const auto it = std::min_element(s.f.begin(), s.f.end());
  const auto idx = static_cast<std::size_t>(it - s.f.begin());
  return {s.x[idx], *it, evals, converged};
}

}  // namespace

NelderMeadResult minimize_nelder_mead(const Objective& f, std::vector<double> x0,
                                      const NelderMeadOptions& opt) {
  if (x0.empty()) throw InvalidArgument("nelder-mead: empty starting point");
  if (!(opt.initial_step > 0.0)) throw InvalidArgument("nelder-mead: step must be positive");

  NelderMeadResult best = run_simplex(f, x0, opt.initial_step, opt, opt.max_evaluations);
  double step = opt.initial_step;
  for (int r = 0; r < opt.max_restarts && best.evaluations < opt.max_evaluations; ++r) {
    step *= 0.5;
    auto next = run_simplex(f, best.x, step, opt, opt.max_evaluations - best.evaluations);
    const int total = best.evaluations + next.evaluations;
    const bool improved = next.value < best.value;
    if (improved) {
      best = std::move(next);
    } else {
      best.converged = best.converged && next.converged;
    }
    best.evaluations = total;
    if (!improved) break;
  }
  return best;
}

ScalarMaximum golden_section_maximize(const std::function<double(double)>& f, double a, double b,
                                      double tolerance) {
  if (!(b > a)) throw InvalidArgument("golden section: empty interval");
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tolerance) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
    if (c >= d) break;
  }
  return fc >= fd ? ScalarMaximum{c, fc} : ScalarMaximum{d, fd};
}

}  // namespace nssbound
