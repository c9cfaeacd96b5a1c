#pragma once

// Sampling of the correlation cube, conditional extremal clustering on a
// mesh, one-parameter family curves, and the locators built on them.

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qillum/illumination.hpp"
#include "qillum/kernels.hpp"

namespace qillum {

struct SweepConfig {
  double grid_step = 0.025;
  double eta = 0.5;
  double p0 = 0.5;
  bool include_separable = true;
  int mesh_resolution = 80;
  BasisSense sense = BasisSense::Max;
  unsigned workers = 0;  // 0 picks std::thread::hardware_concurrency()
  KernelKind kernel = KernelKind::Auto;

  /// Throws DomainError unless 0 < grid_step <= 1 and mesh_resolution >= 2.
  void validate() const;
  ProtocolParams params() const { return ProtocolParams(eta, p0); }
};

/// Grid coordinates on [-1, 1]. When 2/step is an integer n the points are
/// (2i - n)/n, so 0 and +/-1 are hit exactly.
std::vector<double> grid_axis(double step);

/// AdvantageRecord for every physical grid point in lexicographic order of
/// (c1, c2, c3) indices. Output is identical for any worker count.
std::vector<AdvantageRecord> run_sweep(const SweepConfig& config);

enum class Measure { Qa, DeltaIn, Eof };
enum class ClusterStat { MaxEof, MinEof, MaxDiscord, MinDiscord };

std::string_view to_string(Measure m);
std::string_view to_string(ClusterStat s);
double measure_value(const AdvantageRecord& r, Measure m);
/// The quantity a statistic ranks: eof for *Eof, delta_in for *Discord.
double stat_value(const AdvantageRecord& r, ClusterStat s);

struct ClusterCell {
  double value = 0.0;
  CorrelationVector witness;
  std::size_t population = 0;
};

struct ClusterGrid {
  Measure x_axis = Measure::Qa;
  Measure y_axis = Measure::DeltaIn;
  ClusterStat stat = ClusterStat::MaxEof;
  int mesh = 80;
  std::map<std::pair<int, int>, ClusterCell> cells;  // populated cells only
};

/// floor(v * mesh), with v = 1 folded into the top bin and anything below
/// zero into bin 0.
int mesh_bin(double v, int mesh);

/// Extremal stat per mesh cell. Ties keep the first record in input order.
ClusterGrid cluster_extremal(std::span<const AdvantageRecord> records, Measure x_axis,
                             Measure y_axis, ClusterStat stat, int mesh_resolution);

struct ProfilePoint {
  double qa_bin_center;
  double value;
};

/// Cells in the column whose non-qa bin contains fixed_axis_value, ordered
/// by qa. Throws DomainError if neither grid axis is qa.
std::vector<ProfilePoint> column_profile(const ClusterGrid& grid, double fixed_axis_value);

struct BoundSample {
  double parameter = 0.0;
  CorrelationVector c;
  double concurrence = 0.0;
  double eof = 0.0;
  double delta_in = 0.0;
  double qa = 0.0;
  double delta_enc = 0.0;
};

struct BoundCurve {
  Family family = Family::Werner;
  double eta = 0.5;
  double p0 = 0.5;
  std::vector<BoundSample> samples;  // parameter strictly increasing
};

BoundSample evaluate_family_point(Family family, double parameter, const ProtocolParams& params);

/// Werner, Alpha, Beta sampled on [0, 1] at parameter_step.
std::array<BoundCurve, 3> bound_curves(const SweepConfig& config, double parameter_step = 1e-3);

double bound_measure(const BoundSample& s, Measure m);

enum class Envelope { Upper, Lower };

/// y-measure of the curve where its x-measure equals x. Each bracketing
/// segment is refined by bisection on the family parameter with exact
/// re-evaluation; Upper returns the largest of the crossings, Lower the
/// smallest. Empty when x lies outside the curve's range.
std::optional<double> envelope_at(const BoundCurve& curve, Measure x_measure, Measure y_measure,
                                  double x, Envelope side);

struct DominanceReport {
  double max_violation = 0.0;  // > 0 means a record lies beyond the curve
  CorrelationVector worst;
  std::size_t checked = 0;
  std::size_t outside_range = 0;
};

DominanceReport dominance(std::span<const AdvantageRecord> records, const BoundCurve& curve,
                          Measure x_measure, Measure y_measure, Envelope side);

/// EoF where the Werner qa-vs-EoF curve crosses the Alpha curve from below.
std::optional<double> transition_point(double eta, double p0);

struct HornReport {
  bool present = false;
  double grid_max = 0.0;
  CorrelationVector grid_witness;
  double max_separable_discord = 0.0;  // after local refinement
  CorrelationVector witness;
};

/// Largest initial discord among separable records, refined by greedy
/// ascent over integer offsets in {-2..2}^3 times 1e-3, staying inside the
/// separable physical set.
HornReport horn_locate(std::span<const AdvantageRecord> records);

}  // namespace qillum
