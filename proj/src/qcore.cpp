#include "qillum/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "qillum/error.hpp"

namespace qillum {

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return m;
}

Matrix2 trace_b(const Matrix4& m) {
  Matrix2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
  return r;
}

Matrix2 trace_a(const Matrix4& m) {
  Matrix2 r;
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t l = 0; l < 2; ++l) r(k, l) = m(k, l) + m(2 + k, 2 + l);
  return r;
}

const Matrix2& pauli(int index) {
  static const std::array<Matrix2, 4> sigma = [] {
    std::array<Matrix2, 4> s;
    s[0] = Matrix2::identity();
    s[1](0, 1) = 1.0;
    s[1](1, 0) = 1.0;
    s[2](0, 1) = Complex(0.0, -1.0);
    s[2](1, 0) = Complex(0.0, 1.0);
    s[3](0, 0) = 1.0;
    s[3](1, 1) = -1.0;
    return s;
  }();
  if (index < 0 || index > 3) throw DomainError("pauli index out of range");
  return sigma[static_cast<std::size_t>(index)];
}

// ---------------------------------------------------------------------------
// Hermitian

template <std::size_t N>
Hermitian<N>::Hermitian(const Matrix<N>& m) : m_(m) {
  if (!m.is_finite()) throw HermiticityError("matrix has non-finite entries");
  const double defect = m.hermiticity_defect();
  if (defect > kHermiticityTolerance)
    throw HermiticityError("matrix is not Hermitian (defect " + std::to_string(defect) + ")");
}

template <std::size_t N>
Hermitian<N> Hermitian<N>::symmetrized(const Matrix<N>& m) {
  if (!m.is_finite()) throw HermiticityError("matrix has non-finite entries");
  Matrix<N> s = (m + m.adjoint()) * Complex(0.5);
  for (std::size_t i = 0; i < N; ++i) s(i, i) = s(i, i).real();
  return Hermitian(s, Unchecked{});
}

template class Hermitian<2>;
template class Hermitian<4>;

// ---------------------------------------------------------------------------
// Jacobi eigensolver

namespace {

constexpr double kOffDiagonalTolerance = 1e-13;
constexpr int kMaxSweeps = 100;

template <std::size_t N>
double off_diagonal_norm(const Matrix<N>& a) {
  double sum = 0.0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c)
      if (r != c) sum += std::norm(a(r, c));
  return std::sqrt(sum);
}

}  // namespace

template <std::size_t N>
EigenSystem<N> hermitian_eigensystem(const Hermitian<N>& h) {
  Matrix<N> a = h.matrix();
  Matrix<N> v = Matrix<N>::identity();

  bool converged = false;
  for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= kOffDiagonalTolerance) {
      converged = true;
      break;
    }
    if (sweep == kMaxSweeps) break;
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double g = std::abs(a(p, q));
        if (g == 0.0) continue;
        // Phase the (p, q) entry real, then a real Jacobi rotation.
        const Complex phase = a(p, q) / g;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        Matrix<N> j = Matrix<N>::identity();
        j(p, p) = c;
        j(p, q) = s;
        j(q, p) = -s * std::conj(phase);
        j(q, q) = c * std::conj(phase);

        a = j.adjoint() * a * j;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        v = v * j;
      }
    }
  }
  if (!converged) {
    throw NumericalFailure("Jacobi eigensolver did not converge in 100 sweeps",
                           off_diagonal_norm(a));
  }

  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  EigenSystem<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < N; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const Hermitian<N>& h) {
  return hermitian_eigensystem(h).values;
}

template EigenSystem<2> hermitian_eigensystem(const Hermitian<2>&);
template EigenSystem<4> hermitian_eigensystem(const Hermitian<4>&);
template std::array<double, 2> hermitian_eigenvalues(const Hermitian<2>&);
template std::array<double, 4> hermitian_eigenvalues(const Hermitian<4>&);

// ---------------------------------------------------------------------------
// Bloch directions and the Bell basis

BlochDirection::BlochDirection(double theta, double phi) : theta_(theta), phi_(phi) {
  constexpr double pi = std::numbers::pi;
  if (!(theta >= 0.0 && theta <= pi)) throw DomainError("theta outside [0, pi]");
  if (!(phi >= 0.0 && phi < 2.0 * pi)) throw DomainError("phi outside [0, 2 pi)");
}

BlochDirection BlochDirection::from_vector(double x, double y, double z) {
  constexpr double pi = std::numbers::pi;
  const double rho = std::hypot(x, y);
  if (rho == 0.0 && z == 0.0) throw DomainError("zero vector has no direction");
  const double theta = std::clamp(std::atan2(rho, z), 0.0, pi);
  double phi = rho == 0.0 ? 0.0 : std::atan2(y, x);
  if (phi < 0.0) phi += 2.0 * pi;
  if (phi >= 2.0 * pi) phi = 0.0;
  return BlochDirection(theta, phi);
}

BlochDirection BlochDirection::along_axis(int axis) {
  switch (axis) {
    case 1: return from_vector(1, 0, 0);
    case 2: return from_vector(0, 1, 0);
    case 3: return from_vector(0, 0, 1);
    default: throw DomainError("axis must be 1, 2 or 3");
  }
}

BlochDirection BlochDirection::wrapped(double theta, double phi) {
  return from_vector(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                     std::cos(theta));
}

std::array<double, 3> BlochDirection::unit_vector() const {
  return {std::sin(theta_) * std::cos(phi_), std::sin(theta_) * std::sin(phi_),
          std::cos(theta_)};
}

Matrix2 BlochDirection::projector(int sign) const {
  const auto n = unit_vector();
  Matrix2 nsigma = pauli(1) * Complex(n[0]) + pauli(2) * Complex(n[1]) + pauli(3) * Complex(n[2]);
  return (Matrix2::identity() + nsigma * Complex(sign >= 0 ? 1.0 : -1.0)) * Complex(0.5);
}

const BellBasis& bell_basis() {
  static const BellBasis basis = [] {
    const double r = 1.0 / std::sqrt(2.0);
    // Amplitudes on |00>, |01>, |10>, |11>.
    const std::array<std::array<double, 4>, 4> kets = {{
        {r, 0, 0, r},
        {r, 0, 0, -r},
        {0, r, r, 0},
        {0, r, -r, 0},
    }};
    auto projector = [](const std::array<double, 4>& k) {
      Matrix4 m;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = k[i] * k[j];
      return Hermitian4(m);
    };
    return BellBasis{{projector(kets[0]), projector(kets[1]), projector(kets[2]),
                      projector(kets[3])}};
  }();
  return basis;
}

// ---------------------------------------------------------------------------
// Entropies

double shannon_entropy(std::span<const double> p) {
  double sum = 0.0;
  double h = 0.0;
  for (double x : p) {
    if (!(x >= 0.0)) throw DomainError("negative or NaN probability");
    sum += x;
    if (x > 0.0) h -= x * std::log2(x);
  }
  if (std::abs(sum - 1.0) > 1e-10) throw DomainError("probabilities do not sum to one");
  return h;
}

double binary_entropy(double p) {
  const std::array<double, 2> d{p, 1.0 - p};
  return shannon_entropy(d);
}

double spectrum_entropy(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (double l : eigenvalues) {
    if (l < -kPsdTolerance) throw NonPsdError("negative eigenvalue " + std::to_string(l));
    if (l > 0.0) s -= l * std::log2(l);
  }
  return s;
}

template <std::size_t N>
double von_neumann_entropy(const Hermitian<N>& rho) {
  if (std::abs(rho.trace() - 1.0) > kTraceTolerance) throw DomainError("state trace is not one");
  const auto values = hermitian_eigenvalues(rho);
  return spectrum_entropy(values);
}

template double von_neumann_entropy(const Hermitian<2>&);
template double von_neumann_entropy(const Hermitian<4>&);

// ---------------------------------------------------------------------------
// Local measurements

Hermitian4 dephase_product(const Hermitian4& rho, const BlochDirection& a,
                           const BlochDirection& b) {
  Matrix4 out;
  for (int i : {1, -1}) {
    for (int j : {1, -1}) {
      const Matrix4 p = kron(a.projector(i), b.projector(j));
      out += p * rho.matrix() * p;
    }
  }
  return Hermitian4::symmetrized(out);
}

std::array<ConditionalOutcome, 2> conditional_states(const Hermitian4& rho,
                                                     const BlochDirection& b) {
  auto outcome = [&](int sign) {
    const Matrix4 k = kron(Matrix2::identity(), b.projector(sign));
    const Matrix4 post = k * rho.matrix() * k;
    const double p = post.trace().real();
    if (p < 1e-14) {
      return ConditionalOutcome{std::max(p, 0.0),
                                Hermitian2(Matrix2::identity() * Complex(0.5)), true};
    }
    return ConditionalOutcome{p, Hermitian2::symmetrized(trace_b(post) * Complex(1.0 / p)),
                              false};
  };
  return {outcome(1), outcome(-1)};
}

}  // namespace qillum
