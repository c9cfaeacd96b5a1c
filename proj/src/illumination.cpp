#include "qillum/illumination.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qillum/correlations.hpp"
#include "qillum/error.hpp"
#include "qillum/optimize.hpp"

namespace qillum {

ProtocolParams::ProtocolParams(double eta, double p0) : eta_(eta), p0_(p0) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("eta outside [0, 1]");
  if (!(p0 > 0.0 && p0 < 1.0)) throw DomainError("p0 outside (0, 1)");
}

IlluminationEnsemble make_ensemble(const CorrelationVector& c, const ProtocolParams& params) {
  if (!is_physical(c)) throw DomainError("unphysical resource state " + to_string(c));
  return {c.scaled(params.eta()), CorrelationVector{},
          c.scaled(params.p0() * params.eta())};
}

double holevo_joint(const IlluminationEnsemble& ens, const ProtocolParams& params) {
  return spectrum_entropy(spectrum(ens.average)) -
         params.p0() * spectrum_entropy(spectrum(ens.target_present)) -
         params.p1() * spectrum_entropy(spectrum(ens.target_absent));
}

namespace {

// Dephasing an MMM state in the basis pair (a, b) leaves a diagonal state
// with weights (1 +/- t)/4, t = sum_i a_i c_i b_i.
double dephased_entropy(double t) {
  const std::array<double, 4> w{(1.0 + t) / 4.0, (1.0 + t) / 4.0, (1.0 - t) / 4.0,
                                (1.0 - t) / 4.0};
  return spectrum_entropy(w);
}

std::size_t dominant_axis(const CorrelationVector& c) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(c[i]) > std::abs(c[best])) best = i;
  return best;
}

std::vector<std::array<double, 3>> stencil_directions() {
  std::vector<std::array<double, 3>> out;
  for (int x = -1; x <= 1; ++x)
    for (int y = -1; y <= 1; ++y)
      for (int z = -1; z <= 1; ++z)
        if (x != 0 || y != 0 || z != 0) out.push_back({double(x), double(y), double(z)});
  return out;
}

}  // namespace

ClassicalHolevo holevo_classical_pauli(const IlluminationEnsemble& ens,
                                       const ProtocolParams& params, BasisSense sense) {
  if (sense == BasisSense::Min) {
    // orthogonal axes: t = 0 for every Bell-diagonal state
    const double v = dephased_entropy(0.0) - params.p0() * dephased_entropy(0.0) -
                     params.p1() * dephased_entropy(0.0);
    return {v, BlochDirection::along_axis(1), BlochDirection::along_axis(2)};
  }
  const std::size_t axis = dominant_axis(ens.target_present);
  const double v = dephased_entropy(ens.average[axis]) -
                   params.p0() * dephased_entropy(ens.target_present[axis]) -
                   params.p1() * dephased_entropy(ens.target_absent[axis]);
  const auto dir = BlochDirection::along_axis(static_cast<int>(axis) + 1);
  return {v, dir, dir};
}

ClassicalHolevo holevo_classical(const IlluminationEnsemble& ens, const ProtocolParams& params,
                                 BasisSense sense) {
  const Hermitian4 rho0 = build_density(ens.target_present);
  const Hermitian4 rho1 = build_density(ens.target_absent);
  const Hermitian4 rho_bar = build_density(ens.average);
  const double sign = sense == BasisSense::Max ? -1.0 : 1.0;

  auto chi = [&](const BlochDirection& a, const BlochDirection& b) {
    return von_neumann_entropy(dephase_product(rho_bar, a, b)) -
           params.p0() * von_neumann_entropy(dephase_product(rho0, a, b)) -
           params.p1() * von_neumann_entropy(dephase_product(rho1, a, b));
  };

  const auto fast = holevo_classical_pauli(ens, params, sense);

  const auto dirs = stencil_directions();
  double best = std::numeric_limits<double>::infinity();
  std::array<double, 4> start{};
  for (const auto& u : dirs) {
    const auto a = BlochDirection::from_vector(u[0], u[1], u[2]);
    for (const auto& w : dirs) {
      const auto b = BlochDirection::from_vector(w[0], w[1], w[2]);
      const double v = sign * chi(a, b);
      if (v < best) {
        best = v;
        start = {a.theta(), a.phi(), b.theta(), b.phi()};
      }
    }
  }

  auto objective = [&](std::span<const double> x) {
    return sign * chi(BlochDirection::wrapped(x[0], x[1]), BlochDirection::wrapped(x[2], x[3]));
  };
  const auto refined = nelder_mead(objective, {start.begin(), start.end()}, 0.05, 1e-12, 2000);
  if (!refined.converged)
    throw NumericalFailure("classical basis optimisation did not converge", fast.value);

  ClassicalHolevo out{sign * refined.value,
                      BlochDirection::wrapped(refined.point[0], refined.point[1]),
                      BlochDirection::wrapped(refined.point[2], refined.point[3])};
  if (sign * fast.value < refined.value) out = fast;
  return out;
}

double discord_of_encoding(const CorrelationVector& c, const ProtocolParams& params) {
  if (!is_physical(c)) throw DomainError("unphysical resource state " + to_string(c));
  return params.p0() * discord_mmm(c.scaled(params.eta())) -
         discord_mmm(c.scaled(params.p0() * params.eta()));
}

AdvantageRecord quantum_advantage(const CorrelationVector& c, const ProtocolParams& params,
                                  BasisSense sense) {
  const auto ens = make_ensemble(c, params);
  AdvantageRecord r;
  r.c = c;
  r.lambda = spectrum(c);
  r.concurrence = concurrence_mmm(c);
  r.eof = eof_from_concurrence(r.concurrence);
  r.delta_in = discord_mmm(c);
  r.chi_q = holevo_joint(ens, params);
  r.chi_c = holevo_classical_pauli(ens, params, sense).value;
  r.qa = r.chi_q - r.chi_c;
  r.delta_enc = discord_of_encoding(c, params);
  r.separable = r.concurrence == 0.0;
  return r;
}

std::vector<ToyDetectionPoint> toy_detection_curves(std::span<const double> eta_grid) {
  constexpr double p0 = 0.5;
  constexpr double p1 = 0.5;
  auto mutual_information = [&](double yes_there, double yes_absent) {
    const double yes = p0 * yes_there + p1 * yes_absent;
    return binary_entropy(yes) - p0 * binary_entropy(yes_there) - p1 * binary_entropy(yes_absent);
  };

  std::vector<ToyDetectionPoint> out;
  out.reserve(eta_grid.size());
  for (double eta : eta_grid) {
    if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("eta outside [0, 1]");
    ToyDetectionPoint p;
    p.eta = eta;
    p.p_joint_posterior = (1.0 + 3.0 * eta) / (2.0 + 3.0 * eta);
    p.p_local_posterior = (1.0 + eta) / (2.0 + eta);
    p.i_joint = mutual_information((1.0 + 3.0 * eta) / 4.0, 0.25);
    p.i_local = mutual_information((1.0 + eta) / 2.0, 0.5);
    out.push_back(p);
  }
  return out;
}

double high_noise_limit(const ProtocolParams& params) {
  return params.p0() * params.eta() * params.eta() * (1.0 - params.p0());
}

AsymptoticsReport high_noise_asymptotics(const CorrelationVector& direction,
                                         const ProtocolParams& params,
                                         std::span<const double> scales) {
  const auto& d = direction.components();
  const auto nonzero = std::count_if(d.begin(), d.end(), [](double x) { return x != 0.0; });
  if (nonzero < 2)
    throw DegenerateDirectionError("direction " + to_string(direction) +
                                   " has zero discord along the whole ray");

  AsymptoticsReport report{high_noise_limit(params), {}};
  auto ratio_at = [&](double s) {
    const auto c = direction.scaled(s);
    return discord_of_encoding(c, params) / discord_mmm(c);
  };
  for (double s : scales) {
    if (!(s > 0.0 && s <= 0.1)) throw DomainError("asymptotic scale outside (0, 0.1]");
    AsymptoticsPoint p;
    p.scale = s;
    p.ratio = ratio_at(s);
    p.ratio_half = ratio_at(s / 2.0);
    p.residual = p.ratio - report.limit;
    p.extrapolated = 2.0 * p.ratio_half - p.ratio;
    p.observed_order = std::log2(std::abs(p.residual) / std::abs(p.ratio_half - report.limit));
    report.points.push_back(p);
  }
  return report;
}

double discord_second_order(const CorrelationVector& c, double scale) {
  if (!(scale > 0.0 && scale <= 1e-2)) throw DomainError("scale outside (0, 1e-2]");
  if (std::abs(c.c1()) < c.max_abs())
    throw BranchError("|c1| is not the largest component; relabel axes so it is");
  return discord_mmm(c.scaled(scale)) * 2.0 * std::numbers::ln2 / (scale * scale);
}

double discord_second_order_extrapolated(const CorrelationVector& c, double scale) {
  return 2.0 * discord_second_order(c, scale / 2.0) - discord_second_order(c, scale);
}

}  // namespace qillum
