#pragma once

// Dense complex matrices of dimension 2 and 4, a Jacobi eigensolver for the
// Hermitian case, entropies in bits and local projective measurements.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qillum {

using Complex = std::complex<double>;

template <std::size_t N>
class Matrix {
  static_assert(N == 2 || N == 4, "only one- and two-qubit operators");

 public:
  static constexpr std::size_t dim = N;

  Matrix() { entries_.fill(Complex{}); }

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(std::span<const double, N> d) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * N + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * N + c]; }

  Matrix adjoint() const {
    Matrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(r, c) = std::conj((*this)(c, r));
    return m;
  }

  Matrix conjugate() const {
    Matrix m;
    for (std::size_t i = 0; i < N * N; ++i) m.entries_[i] = std::conj(entries_[i]);
    return m;
  }

  Complex trace() const {
    Complex t{};
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  /// Largest |M - M^H| entry.
  double hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = r; c < N; ++c)
        worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return worst;
  }

  bool is_finite() const {
    for (const auto& z : entries_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) entries_[i] -= o.entries_[i];
    return *this;
  }
  Matrix& operator*=(Complex s) {
    for (auto& z : entries_) z *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex ark = a(r, k);
        if (ark == Complex{}) continue;
        for (std::size_t c = 0; c < N; ++c) m(r, c) += ark * b(k, c);
      }
    return m;
  }

  /// Max-entry distance.
  friend double distance(const Matrix& a, const Matrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < N * N; ++i)
      worst = std::max(worst, std::abs(a.entries_[i] - b.entries_[i]));
    return worst;
  }

 private:
  std::array<Complex, N * N> entries_;
};

using Matrix2 = Matrix<2>;
using Matrix4 = Matrix<4>;

/// Kronecker product of two single-qubit operators (first factor is qubit A).
Matrix4 kron(const Matrix2& a, const Matrix2& b);

/// Reduced state of qubit A (traces out B).
Matrix2 trace_b(const Matrix4& m);
/// Reduced state of qubit B (traces out A).
Matrix2 trace_a(const Matrix4& m);

/// sigma_0 = identity, sigma_1..3 = x, y, z.
const Matrix2& pauli(int index);

inline constexpr double kHermiticityTolerance = 1e-12;

/// Matrix known to satisfy the Hermiticity invariant. Construction checks it.
template <std::size_t N>
class Hermitian {
 public:
  explicit Hermitian(const Matrix<N>& m);

  /// Averages m with its adjoint; for matrices that are Hermitian up to
  /// rounding from products such as A B A^H.
  static Hermitian symmetrized(const Matrix<N>& m);

  const Matrix<N>& matrix() const noexcept { return m_; }
  double operator()(std::size_t i) const { return m_(i, i).real(); }
  double trace() const { return m_.trace().real(); }

 private:
  struct Unchecked {};
  Hermitian(const Matrix<N>& m, Unchecked) : m_(m) {}
  Matrix<N> m_;
};

using Hermitian2 = Hermitian<2>;
using Hermitian4 = Hermitian<4>;

template <std::size_t N>
struct EigenSystem {
  std::array<double, N> values;  // descending
  Matrix<N> vectors;             // column k is the eigenvector of values[k]
};

/// Eigenvalues sorted descending. Cyclic complex Jacobi rotations; throws
/// NumericalFailure when the off-diagonal norm stays above 1e-13 after
/// 100 sweeps.
template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const Hermitian<N>& h);

template <std::size_t N>
EigenSystem<N> hermitian_eigensystem(const Hermitian<N>& h);

/// Hermitian overload for raw matrices; throws HermiticityError when the
/// input is not Hermitian within 1e-12.
template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const Matrix<N>& m) {
  return hermitian_eigenvalues(Hermitian<N>(m));
}

/// Single-qubit measurement axis. theta in [0, pi], phi in [0, 2 pi).
class BlochDirection {
 public:
  BlochDirection(double theta, double phi);

  /// Polar angles of a non-zero Cartesian vector.
  static BlochDirection from_vector(double x, double y, double z);
  static BlochDirection along_axis(int axis);  // 1, 2, 3 for x, y, z
  /// Canonical direction for unconstrained angles (optimizer coordinates).
  static BlochDirection wrapped(double theta, double phi);

  double theta() const noexcept { return theta_; }
  double phi() const noexcept { return phi_; }
  std::array<double, 3> unit_vector() const;

  /// (1 + sign * n.sigma) / 2 with sign = +1 or -1.
  Matrix2 projector(int sign) const;

 private:
  double theta_;
  double phi_;
};

/// Projectors onto phi+, phi-, psi+, psi- in that order.
struct BellBasis {
  std::array<Hermitian4, 4> projectors;
};

const BellBasis& bell_basis();

inline constexpr double kPsdTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;

/// -sum p log2 p with 0 log 0 = 0. Throws DomainError for entries < 0 or
/// a sum away from 1 by more than 1e-10.
double shannon_entropy(std::span<const double> p);

/// h(p) = H({p, 1 - p}).
double binary_entropy(double p);

/// Entropy of a spectrum. Values in [-1e-10, 0) clamp to zero; anything
/// below throws NonPsdError.
double spectrum_entropy(std::span<const double> eigenvalues);

/// Von Neumann entropy in bits.
template <std::size_t N>
double von_neumann_entropy(const Hermitian<N>& rho);

/// Applies the product measurement along (a, b) without reading the outcome:
/// sum_ij (P_i^a x P_j^b) rho (P_i^a x P_j^b).
Hermitian4 dephase_product(const Hermitian4& rho, const BlochDirection& a,
                           const BlochDirection& b);

struct ConditionalOutcome {
  double probability;
  Hermitian2 state;  // qubit A after the outcome on B
  bool degenerate;   // probability below 1e-14; state reported as 1/2
};

/// Measures qubit B along +/- b. Index 0 is the +b outcome.
std::array<ConditionalOutcome, 2> conditional_states(const Hermitian4& rho,
                                                     const BlochDirection& b);

}  // namespace qillum
