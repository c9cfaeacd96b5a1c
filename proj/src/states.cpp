#include "qillum/states.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qillum/error.hpp"

namespace qillum {

CorrelationVector::CorrelationVector(double c1, double c2, double c3) : c_{c1, c2, c3} {
  for (double x : c_) {
    if (!(std::abs(x) <= 1.0)) throw DomainError("correlation component outside [-1, 1]");
  }
}

CorrelationVector CorrelationVector::scaled(double s) const {
  return CorrelationVector(s * c_[0], s * c_[1], s * c_[2]);
}

double CorrelationVector::max_abs() const {
  return std::max({std::abs(c_[0]), std::abs(c_[1]), std::abs(c_[2])});
}

std::string to_string(const CorrelationVector& c) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.6g, %.6g, %.6g)", c[0], c[1], c[2]);
  return buf;
}

Hermitian4 build_density(const CorrelationVector& c) {
  Matrix4 m;
  m(0, 0) = (1.0 + c.c3()) / 4.0;
  m(1, 1) = (1.0 - c.c3()) / 4.0;
  m(2, 2) = (1.0 - c.c3()) / 4.0;
  m(3, 3) = (1.0 + c.c3()) / 4.0;
  m(0, 3) = m(3, 0) = (c.c1() - c.c2()) / 4.0;
  m(1, 2) = m(2, 1) = (c.c1() + c.c2()) / 4.0;
  return Hermitian4(m);
}

SpectrumMMM spectrum(const CorrelationVector& c) {
  const double c1 = c.c1(), c2 = c.c2(), c3 = c.c3();
  return {(1.0 - c1 - c2 - c3) / 4.0, (1.0 - c1 + c2 + c3) / 4.0,
          (1.0 + c1 - c2 + c3) / 4.0, (1.0 + c1 + c2 - c3) / 4.0};
}

bool is_physical(const CorrelationVector& c) {
  const auto l = spectrum(c);
  return std::all_of(l.begin(), l.end(), [](double x) { return x >= -kPhysicalTolerance; });
}

std::string to_string(Family f) {
  switch (f) {
    case Family::Werner: return "werner";
    case Family::Alpha: return "alpha";
    case Family::Beta: return "beta";
  }
  return "?";
}

CorrelationVector family_state(FamilyKind kind) {
  const double t = kind.parameter;
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("family parameter outside [0, 1]");
  switch (kind.family) {
    case Family::Werner: return {t, -t, t};
    case Family::Alpha: return {t, -t, 2.0 * t - 1.0};
    case Family::Beta: return {1.0, 1.0 - 2.0 * t, 2.0 * t - 1.0};
  }
  throw DomainError("unknown family");
}

std::vector<CorrelationVector> local_orbit(const CorrelationVector& c) {
  static constexpr std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  static constexpr std::array<std::array<int, 3>, 4> signs = {
      {{1, 1, 1}, {-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}}};
  std::vector<CorrelationVector> out;
  out.reserve(24);
  for (const auto& p : perms)
    for (const auto& s : signs)
      out.emplace_back(s[0] * c[p[0]] + 0.0, s[1] * c[p[1]] + 0.0, s[2] * c[p[2]] + 0.0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace qillum
