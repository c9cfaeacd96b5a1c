#include "qillum/random.hpp"

#include <cmath>

namespace qillum {

CorrelationVector random_physical_state(Lcg& rng) {
  for (;;) {
    const double a = rng.uniform(-1.0, 1.0);
    const double b = rng.uniform(-1.0, 1.0);
    const double c = rng.uniform(-1.0, 1.0);
    CorrelationVector v(a, b, c);
    if (is_physical(v)) return v;
  }
}

CorrelationVector random_direction(Lcg& rng, double min_component) {
  for (;;) {
    const double a = rng.uniform(-1.0, 1.0);
    const double b = rng.uniform(-1.0, 1.0);
    const double c = rng.uniform(-1.0, 1.0);
    const int large = (std::abs(a) > min_component) + (std::abs(b) > min_component) +
                      (std::abs(c) > min_component);
    if (large >= 2) return {a, b, c};
  }
}

}  // namespace qillum
