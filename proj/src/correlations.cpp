#include "qillum/correlations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qillum/error.hpp"
#include "qillum/optimize.hpp"

namespace qillum {

namespace {

constexpr double kLn2 = std::numbers::ln2;

// (1 + y) ln(1 + y), zero at y = -1.
double one_plus_log1p(double y) {
  const double u = 1.0 + y;
  return u <= 0.0 ? 0.0 : u * std::log1p(y);
}

}  // namespace

double concurrence(const Hermitian4& rho) {
  const auto eig = hermitian_eigensystem(rho);
  Matrix4 root;
  for (std::size_t k = 0; k < 4; ++k) {
    const double l = eig.values[k];
    if (l < -kPsdTolerance) throw DomainError("concurrence of a non-PSD matrix");
    const double s = std::sqrt(std::max(l, 0.0));
    if (s == 0.0) continue;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c)
        root(r, c) += s * eig.vectors(r, k) * std::conj(eig.vectors(c, k));
  }
  // Singular values of A = sqrt(rho~) sqrt(rho) as |A v_k| over the
  // eigenvectors of A^H A = sqrt(rho) rho~ sqrt(rho). Square roots of that
  // spectrum would lift rounding-level zeros to ~1e-8.
  const Matrix4 flip = kron(pauli(2), pauli(2));
  const Matrix4 a = flip * root.conjugate() * flip * root;
  const auto sys = hermitian_eigensystem(Hermitian4::symmetrized(a.adjoint() * a));
  std::array<double, 4> sv{};
  for (std::size_t k = 0; k < 4; ++k) {
    double norm2 = 0.0;
    for (std::size_t r = 0; r < 4; ++r) {
      Complex x{};
      for (std::size_t c = 0; c < 4; ++c) x += a(r, c) * sys.vectors(c, k);
      norm2 += std::norm(x);
    }
    sv[k] = std::sqrt(norm2);
  }
  std::sort(sv.rbegin(), sv.rend());
  return std::max(0.0, sv[0] - sv[1] - sv[2] - sv[3]);
}

double concurrence_mmm(const CorrelationVector& c) {
  const auto l = spectrum(c);
  return std::max(0.0, 2.0 * *std::max_element(l.begin(), l.end()) - 1.0);
}

double eof_from_concurrence(double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw DomainError("concurrence outside [0, 1]");
  if (c == 0.0) return 0.0;
  const double r = std::sqrt(1.0 - c * c);
  return binary_entropy((1.0 + r) / 2.0);
}

double discord_mmm(const CorrelationVector& c) {
  if (!is_physical(c)) throw DomainError("discord of unphysical correlation vector " + to_string(c));
  const double c1 = c.c1(), c2 = c.c2(), c3 = c.c3();
  // 4 lambda_k = 1 + y_k
  // Pairwise summation makes single-axis states cancel exactly against the
  // classical term.
  const double mutual = ((one_plus_log1p(-c1 - c2 - c3) + one_plus_log1p(-c1 + c2 + c3)) +
                         (one_plus_log1p(c1 - c2 + c3) + one_plus_log1p(c1 + c2 - c3))) /
                        (4.0 * kLn2);
  const double z = c.max_abs();
  const double classical = (one_plus_log1p(z) + one_plus_log1p(-z)) / (2.0 * kLn2);
  const double d = mutual - classical;
  if (d < -1e-9 || d > 1.0 + 1e-9)
    throw NumericalFailure("discord outside [0, 1] beyond rounding", d);
  return std::clamp(d, 0.0, 1.0);
}

CorrelationMeasures measures(const CorrelationVector& c) {
  CorrelationMeasures m;
  m.concurrence = concurrence_mmm(c);
  m.eof = eof_from_concurrence(m.concurrence);
  m.discord = discord_mmm(c);
  return m;
}

double discord_numeric(const Hermitian4& rho) {
  constexpr double pi = std::numbers::pi;
  constexpr int kPhiSteps = 64;
  constexpr int kThetaSteps = 32;

  const double s_ab = von_neumann_entropy(rho);
  const double s_b = von_neumann_entropy(Hermitian2::symmetrized(trace_a(rho.matrix())));

  auto conditional_entropy = [&](double theta, double phi) {
    double total = 0.0;
    for (const auto& o : conditional_states(rho, BlochDirection::wrapped(theta, phi))) {
      if (o.degenerate) continue;
      total += o.probability * von_neumann_entropy(o.state);
    }
    return total;
  };

  double best = std::numeric_limits<double>::infinity();
  double best_theta = 0.0, best_phi = 0.0;
  for (int k = 0; k < kThetaSteps; ++k) {
    const double theta = pi * k / (kThetaSteps - 1);
    for (int i = 0; i < kPhiSteps; ++i) {
      const double phi = 2.0 * pi * i / kPhiSteps;
      const double v = conditional_entropy(theta, phi);
      if (v < best) {
        best = v;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }

  const auto refined = nelder_mead(
      [&](std::span<const double> x) { return conditional_entropy(x[0], x[1]); },
      {best_theta, best_phi}, 0.5 * pi / (kThetaSteps - 1), 1e-9, 500);
  const double minimum = std::min(best, refined.value);
  const double d = s_b - s_ab + minimum;
  if (!refined.converged)
    throw NumericalFailure("discord measurement optimisation did not converge", d);
  if (d < -1e-9) throw NumericalFailure("negative discord beyond rounding", d);
  return std::max(d, 0.0);
}

}  // namespace qillum
