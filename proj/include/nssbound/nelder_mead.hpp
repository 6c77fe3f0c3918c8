#pragma once

#include <functional>
#include <span>
#include <vector>

namespace nssbound {

struct NelderMeadOptions {
  double initial_step = 0.1;
  /// Stop when every vertex is within this distance of the best one.
  double tolerance = 1e-10;
  /// Also stop when the spread of function values drops below this (0 disables).
  double f_tolerance = 0.0;
  int max_evaluations = 20000;
  /// Restarts from the best point with the step halved each time; a restart
  /// that does not improve the value ends the search.
  int max_restarts = 4;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Deterministic downhill simplex (standard coefficients 1, 2, 1/2, 1/2).
NelderMeadResult minimize_nelder_mead(const Objective& f, std::vector<double> x0,
                                      const NelderMeadOptions& opt = {});

struct ScalarMaximum {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search for a maximum of a unimodal f on [a, b].
ScalarMaximum golden_section_maximize(const std::function<double(double)>& f, double a, double b,
                                      double tolerance = 1e-12);

}  // namespace nssbound
