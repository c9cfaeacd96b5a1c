#pragma once

// Target-detection hypothesis test with a Bell-diagonal resource. The
// signal qubit returns through a depolarising channel of reflectivity eta
// when the target is present (correlations scale by eta) and is replaced
// by thermal noise when absent (maximally mixed two-qubit state).

#include <optional>
#include <span>
#include <vector>

#include "qillum/qcore.hpp"
#include "qillum/states.hpp"

namespace qillum {

class ProtocolParams {
 public:
  /// eta in [0, 1], p0 in (0, 1). p0 is the prior of "target present".
  ProtocolParams(double eta, double p0);

  double eta() const noexcept { return eta_; }
  double p0() const noexcept { return p0_; }
  double p1() const noexcept { return 1.0 - p0_; }

 private:
  double eta_;
  double p0_;
};

/// How the local (classical) strategy picks its product basis. Max is the
/// best classical receiver; Min is the literal reading kept for debugging.
enum class BasisSense { Max, Min };

struct IlluminationEnsemble {
  CorrelationVector target_present;  // eta * c
  CorrelationVector target_absent;   // 0: maximally mixed
  CorrelationVector average;         // p0 * eta * c
};

struct AdvantageRecord {
  CorrelationVector c;
  SpectrumMMM lambda{};
  double concurrence = 0.0;
  double eof = 0.0;
  double delta_in = 0.0;
  double chi_q = 0.0;
  double chi_c = 0.0;
  double qa = 0.0;
  double delta_enc = 0.0;
  bool separable = true;
};

IlluminationEnsemble make_ensemble(const CorrelationVector& c, const ProtocolParams& params);

/// chi_q = S(rho_bar) - p0 S(rho0) - p1 S(rho1) from the closed-form spectra.
double holevo_joint(const IlluminationEnsemble& ens, const ProtocolParams& params);

struct ClassicalHolevo {
  double value;
  BlochDirection a;  // idler
  BlochDirection b;  // signal
};

/// Holevo information after both hypotheses are dephased in a product
/// basis, optimised over the basis pair: coarse 26 x 26 stencil of
/// directions then Nelder-Mead over the four angles. Matrix route, used as
/// the oracle for the Pauli fast path.
ClassicalHolevo holevo_classical(const IlluminationEnsemble& ens, const ProtocolParams& params,
                                 BasisSense sense = BasisSense::Max);

/// Same quantity on the optimal Pauli pair: both qubits along the axis of
/// max |c_i| (Max), or along two orthogonal axes (Min).
ClassicalHolevo holevo_classical_pauli(const IlluminationEnsemble& ens,
                                       const ProtocolParams& params,
                                       BasisSense sense = BasisSense::Max);

/// Full per-state record; chi_c from the Pauli fast path.
AdvantageRecord quantum_advantage(const CorrelationVector& c, const ProtocolParams& params,
                                  BasisSense sense = BasisSense::Max);

/// p0 delta(eta c) - delta(p0 eta c).
double discord_of_encoding(const CorrelationVector& c, const ProtocolParams& params);

struct ToyDetectionPoint {
  double eta;
  double p_joint_posterior;  // p(there | yes), Bell measurement
  double p_local_posterior;  // p(there | yes), sigma_z on each qubit
  double i_joint;            // I(X:K) in bits
  double i_local;
};

/// Bell-state toy protocol with equal priors: the joint receiver answers
/// "yes" on phi+, the local receiver on equal sigma_z outcomes.
std::vector<ToyDetectionPoint> toy_detection_curves(std::span<const double> eta_grid);

/// p0 eta^2 (1 - p0).
double high_noise_limit(const ProtocolParams& params);

struct AsymptoticsPoint {
  double scale;
  double ratio;           // delta_enc / delta_in at scale * direction
  double residual;        // ratio - limit
  double ratio_half;      // same at scale / 2
  double extrapolated;    // 2 ratio_half - ratio, first-order term removed
  double observed_order;  // log2(|residual| / |residual at scale/2|)
};

struct AsymptoticsReport {
  double limit;
  std::vector<AsymptoticsPoint> points;
};

/// Ratio of discord of encoding to initial discord along a ray towards the
/// maximally mixed state. Throws DegenerateDirectionError for directions
/// with fewer than two non-zero components; scales must lie in (0, 0.1].
AsymptoticsReport high_noise_asymptotics(const CorrelationVector& direction,
                                         const ProtocolParams& params,
                                         std::span<const double> scales);

/// delta(scale c) 2 ln 2 / scale^2, which tends to c2^2 + c3^2 on the
/// |c1| = max branch. Throws BranchError off that branch; scale in (0, 1e-2].
double discord_second_order(const CorrelationVector& c, double scale);

/// 2 v(scale/2) - v(scale): removes the c1 c2 c3 scale term of the raw estimate.
double discord_second_order_extrapolated(const CorrelationVector& c, double scale);

}  // namespace qillum
