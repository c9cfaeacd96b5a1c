#pragma once

#include "qillum/qcore.hpp"
#include "qillum/states.hpp"

namespace qillum {

struct CorrelationMeasures {
  double concurrence = 0.0;
  double eof = 0.0;      // bits
  double discord = 0.0;  // bits
};

/// Wootters concurrence max{0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)},
/// l_i the descending eigenvalues of rho * rho~. The sqrt(l_i) are taken as
/// singular values of sqrt(rho~) sqrt(rho), which keeps rank-deficient
/// (pure) states accurate to rounding.
double concurrence(const Hermitian4& rho);

/// max{0, 2 lambda_max - 1}; agrees with concurrence(build_density(c)).
double concurrence_mmm(const CorrelationVector& c);

/// h((1 + sqrt(1 - C^2)) / 2).
double eof_from_concurrence(double c);

/// Analytic discord of a Bell-diagonal state, measured on either qubit:
///   2 + sum_k l_k log2 l_k - [(1-z)/2 log2(1-z) + (1+z)/2 log2(1+z)],
/// z = max |c_i|. Both mutual-information and classical terms are
/// evaluated in log1p form so the small-|c| regime keeps full relative
/// precision. Throws DomainError for unphysical c.
double discord_mmm(const CorrelationVector& c);

/// All three measures for an MMM state.
CorrelationMeasures measures(const CorrelationVector& c);

/// Discord of a general two-qubit state by direct minimisation over
/// projective measurements on qubit B:
///   S(rho_B) - S(rho_AB) + min_b sum_j p_j S(rho_A|j).
/// 64 x 32 (phi x theta) grid, then Nelder-Mead to 1e-9 on the objective.
/// Throws NumericalFailure after 500 refinement steps.
double discord_numeric(const Hermitian4& rho);

}  // namespace qillum
