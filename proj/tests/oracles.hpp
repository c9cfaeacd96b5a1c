#pragma once

// Reference computations for tests. Everything here is built from Eigen
// and explicit formulas; nothing calls into the library under test.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

inline Mat2 pauli(int i) {
  Mat2 m;
  switch (i) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, C(0, -1), C(0, 1), 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return m;
}

inline Mat4 mmm_density(double c1, double c2, double c3) {
  Mat4 m = kron(pauli(0), pauli(0));
  m += c1 * kron(pauli(1), pauli(1)) + c2 * kron(pauli(2), pauli(2)) + c3 * kron(pauli(3), pauli(3));
  return m / 4.0;
}

inline std::vector<double> eigenvalues(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(v.rbegin(), v.rend());
  return v;
}

inline double entropy_bits(const std::vector<double>& p) {
  double s = 0.0;
  for (double x : p)
    if (x > 1e-300) s -= x * std::log2(x);
  return s;
}

inline double vn_entropy(const Eigen::MatrixXcd& rho) { return entropy_bits(eigenvalues(rho)); }

inline double binary_entropy(double p) { return entropy_bits({p, 1.0 - p}); }

inline Mat4 sqrt_psd(const Mat4& rho) {
  Eigen::SelfAdjointEigenSolver<Mat4> es(rho);
  Eigen::Vector4d l = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * l.asDiagonal() * es.eigenvectors().adjoint();
}

// Wootters concurrence from an SVD of sqrt(rho~) sqrt(rho).
inline double concurrence(const Mat4& rho) {
  const Mat4 yy = kron(pauli(2), pauli(2));
  const Mat4 root = sqrt_psd(rho);
  const Mat4 a = yy * root.conjugate() * yy * root;
  Eigen::JacobiSVD<Mat4> svd(a);
  const auto s = svd.singularValues();  // descending
  return std::max(0.0, s[0] - s[1] - s[2] - s[3]);
}

// |<psi| sigma_y sigma_y |psi*>| for a normalised pure state.
inline double concurrence_pure(const Eigen::Vector4cd& psi) {
  const Mat4 yy = kron(pauli(2), pauli(2));
  return std::abs((psi.transpose() * yy * psi)(0, 0));
}

inline double eof(double c) { return binary_entropy((1.0 + std::sqrt(1.0 - c * c)) / 2.0); }

inline Mat2 projector(double theta, double phi, int sign) {
  const std::array<double, 3> n{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                                std::cos(theta)};
  Mat2 m = pauli(0);
  for (int i = 0; i < 3; ++i) m += static_cast<double>(sign) * n[i] * pauli(i + 1);
  return m / 2.0;
}

inline Mat2 partial_trace_b(const Mat4& m) {
  Mat2 r = Mat2::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
  return r;
}

inline Mat2 partial_trace_a(const Mat4& m) {
  Mat2 r = Mat2::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = m(i, j) + m(2 + i, 2 + j);
  return r;
}

// Conditional entropy of A after measuring B along (theta, phi).
inline double conditional_entropy(const Mat4& rho, double theta, double phi) {
  double s = 0.0;
  for (int sign : {1, -1}) {
    const Mat4 p = kron(pauli(0), projector(theta, phi, sign));
    const Mat4 post = p * rho * p;
    const double prob = post.trace().real();
    if (prob < 1e-15) continue;
    s += prob * vn_entropy(partial_trace_b(post) / prob);
  }
  return s;
}

// Grid minimisation over the Bloch sphere (axes lie on the grid) followed
// by a shrinking compass search.
inline double discord_brute(const Mat4& rho, int n_theta = 48, int n_phi = 96) {
  auto f = [&](double t, double p) { return conditional_entropy(rho, t, p); };
  const double pi = std::acos(-1.0);
  double best = INFINITY, bt = 0, bp = 0;
  for (int i = 0; i <= n_theta; ++i)
    for (int j = 0; j < n_phi; ++j) {
      const double t = pi * i / n_theta, p = 2 * pi * j / n_phi;
      const double v = f(t, p);
      if (v < best) best = v, bt = t, bp = p;
    }
  for (double h = pi / n_theta; h > 1e-10; h *= 0.5) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (auto [dt, dp] : {std::pair{h, 0.0}, {-h, 0.0}, {0.0, h}, {0.0, -h}}) {
        const double v = f(bt + dt, bp + dp);
        if (v < best - 1e-15) best = v, bt += dt, bp += dp, moved = true;
      }
    }
  }
  return vn_entropy(partial_trace_a(rho)) - vn_entropy(rho) + best;
}

inline double holevo_joint(double c1, double c2, double c3, double eta, double p0) {
  const Mat4 r0 = mmm_density(eta * c1, eta * c2, eta * c3);
  const Mat4 r1 = mmm_density(0, 0, 0);
  const Mat4 avg = p0 * r0 + (1 - p0) * r1;
  return vn_entropy(avg) - p0 * vn_entropy(r0) - (1 - p0) * vn_entropy(r1);
}

// Product-basis measurement on both hypotheses, best pair over a grid of
// directions that includes the coordinate axes.
inline double holevo_classical_brute(double c1, double c2, double c3, double eta, double p0,
                                     int n_theta = 8, int n_phi = 16) {
  const Mat4 r0 = mmm_density(eta * c1, eta * c2, eta * c3);
  const double pi = std::acos(-1.0);
  std::vector<std::pair<double, double>> dirs;
  for (int i = 0; i <= n_theta; ++i)
    for (int j = 0; j < (i == 0 || i == n_theta ? 1 : n_phi); ++j)
      dirs.emplace_back(pi * i / n_theta, 2 * pi * j / n_phi);
  double best = -INFINITY;
  for (auto [ta, pa] : dirs)
    for (auto [tb, pb] : dirs) {
      std::vector<double> q0, q1, qa;
      for (int sa : {1, -1})
        for (int sb : {1, -1}) {
          const Mat4 p = kron(projector(ta, pa, sa), projector(tb, pb, sb));
          const double x0 = (p * r0).trace().real();
          q0.push_back(x0);
          q1.push_back(0.25);
          qa.push_back(p0 * x0 + (1 - p0) * 0.25);
        }
      best = std::max(best, entropy_bits(qa) - p0 * entropy_bits(q0) - (1 - p0) * entropy_bits(q1));
    }
  return best;
}

// Discord of an MMM state by minimisation, used as delta(.) in the
// encoding identity.
inline double discord_mmm_brute(double c1, double c2, double c3) {
  return discord_brute(mmm_density(c1, c2, c3), 8, 16);
}

// Same recurrence as the library generator, restated.
struct Lcg {
  std::uint64_t x;
  double next() {
    x = x * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(x >> 11) / 9007199254740992.0;
  }
};

inline bool psd(const Mat4& m, double tol = 1e-12) { return eigenvalues(m).back() >= -tol; }

// Haar-ish random unitary from the QR factor of a Gaussian-like matrix.
inline Eigen::MatrixXcd random_unitary(int n, Lcg& rng) {
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = C(rng.next() - 0.5, rng.next() - 0.5);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  return qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
}

}  // namespace oracle
