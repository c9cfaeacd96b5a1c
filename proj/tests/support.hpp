#pragma once

#include "oracles.hpp"
#include "qillum/qcore.hpp"

namespace testsupport {

template <std::size_t N>
Eigen::Matrix<std::complex<double>, N, N> to_eigen(const qillum::Matrix<N>& m) {
  Eigen::Matrix<std::complex<double>, N, N> e;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) e(i, j) = m(i, j);
  return e;
}

template <std::size_t N>
qillum::Matrix<N> from_eigen(const Eigen::MatrixXcd& e) {
  qillum::Matrix<N> m;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = e(i, j);
  return m;
}

}  // namespace testsupport
