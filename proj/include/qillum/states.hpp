#pragma once

// Maximally-mixed-marginal (Bell-diagonal) two-qubit states
//   rho = (1 + c1 sx.sx + c2 sy.sy + c3 sz.sz) / 4.

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "qillum/qcore.hpp"

namespace qillum {

/// The triple (c1, c2, c3). Each component lies in [-1, 1]; physicality
/// (a PSD density matrix) is a separate check.
class CorrelationVector {
 public:
  constexpr CorrelationVector() = default;
  CorrelationVector(double c1, double c2, double c3);

  double operator[](std::size_t i) const { return c_[i]; }
  double c1() const noexcept { return c_[0]; }
  double c2() const noexcept { return c_[1]; }
  double c3() const noexcept { return c_[2]; }
  const std::array<double, 3>& components() const noexcept { return c_; }

  /// s * c for s in [-1, 1].
  CorrelationVector scaled(double s) const;

  /// max |c_i|.
  double max_abs() const;

  auto operator<=>(const CorrelationVector&) const = default;

 private:
  std::array<double, 3> c_{0.0, 0.0, 0.0};
};

std::string to_string(const CorrelationVector& c);

/// Eigenvalues lambda1..lambda4 in the fixed (not sorted) order
///   (1 - c1 - c2 - c3)/4, (1 - c1 + c2 + c3)/4, (1 + c1 - c2 + c3)/4, (1 + c1 + c2 - c3)/4.
using SpectrumMMM = std::array<double, 4>;

inline constexpr double kPhysicalTolerance = 1e-12;

Hermitian4 build_density(const CorrelationVector& c);
SpectrumMMM spectrum(const CorrelationVector& c);
bool is_physical(const CorrelationVector& c);

enum class Family { Werner, Alpha, Beta };

std::string to_string(Family f);

struct FamilyKind {
  Family family;
  double parameter;  // in [0, 1]
};

/// Werner(w) = (w, -w, w); Alpha(a) = (a, -a, 2a - 1); Beta(b) = (1, 1 - 2b, 2b - 1).
CorrelationVector family_state(FamilyKind kind);

/// Local-unitary orbit: component permutations combined with sign flips of
/// any two components. Distinct members, sorted.
std::vector<CorrelationVector> local_orbit(const CorrelationVector& c);

}  // namespace qillum
