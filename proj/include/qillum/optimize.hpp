#pragma once

#include <functional>
#include <span>
#include <vector>

namespace qillum {

struct SimplexResult {
  std::vector<double> point;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Nelder-Mead minimisation from `start` with an axis-aligned initial
/// simplex of edge `step`. Stops when the spread of objective values over
/// the simplex is at most `tolerance`, or after `max_iterations`.
SimplexResult nelder_mead(const Objective& f, std::vector<double> start, double step,
                          double tolerance, int max_iterations);

}  // namespace qillum
