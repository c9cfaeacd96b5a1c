#include "qillum/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "qillum/correlations.hpp"
#include "qillum/error.hpp"

namespace qillum {

void SweepConfig::validate() const {
  if (!(grid_step > 0.0 && grid_step <= 1.0)) throw DomainError("grid step must lie in (0, 1]");
  if (mesh_resolution < 2) throw DomainError("mesh resolution must be at least 2");
  (void)params();
}

std::vector<double> grid_axis(double step) {
  if (!(step > 0.0 && step <= 1.0)) throw DomainError("grid step must lie in (0, 1]");
  std::vector<double> axis;
  const double n = 2.0 / step;
  const double rounded = std::round(n);
  if (std::abs(n - rounded) < 1e-9) {
    const auto m = static_cast<long>(rounded);
    axis.reserve(static_cast<std::size_t>(m) + 1);
    for (long i = 0; i <= m; ++i)
      axis.push_back(static_cast<double>(2 * i - m) / static_cast<double>(m) + 0.0);
  } else {
    for (long i = 0;; ++i) {
      const double v = -1.0 + static_cast<double>(i) * step;
      if (v > 1.0 + 1e-12) break;
      axis.push_back(std::min(v, 1.0));
    }
  }
  return axis;
}

namespace {

struct Block {
  std::vector<AdvantageRecord> records;
  std::exception_ptr error;
};

// Re-runs a failed batch one state at a time so the error names the state.
std::exception_ptr locate_failure(std::span<const CorrelationVector> batch,
                                  const ProtocolParams& params, BasisSense sense) {
  for (const auto& c : batch) {
    try {
      (void)quantum_advantage(c, params, sense);
    } catch (const NumericalFailure& e) {
      return std::make_exception_ptr(
          NumericalFailure(std::string(e.what()) + " at c = " + to_string(c), e.best_value()));
    } catch (const Error& e) {
      return std::make_exception_ptr(DomainError(std::string(e.what()) + " at c = " + to_string(c)));
    }
  }
  return std::current_exception();
}

void sweep_block(const SweepConfig& config, const std::vector<double>& axis, std::size_t begin,
                 std::size_t end, KernelKind kernel, Block& out) {
  const std::size_t n = axis.size();
  const auto params = config.params();
  std::vector<CorrelationVector> batch;
  for (std::size_t idx = begin; idx < end; ++idx) {
    const CorrelationVector c(axis[idx / (n * n)], axis[(idx / n) % n], axis[idx % n]);
    if (is_physical(c)) batch.push_back(c);
  }
  std::vector<AdvantageRecord> records(batch.size());
  try {
    evaluate_records(batch, params, config.sense, records, kernel);
  } catch (const Error&) {
    out.error = locate_failure(batch, params, config.sense);
    return;
  }
  if (!config.include_separable)
    std::erase_if(records, [](const AdvantageRecord& r) { return r.separable; });
  out.records = std::move(records);
}

}  // namespace

std::vector<AdvantageRecord> run_sweep(const SweepConfig& config) {
  config.validate();
  const auto axis = grid_axis(config.grid_step);
  const KernelKind kernel = resolve_kernel(config.kernel);
  const std::size_t total = axis.size() * axis.size() * axis.size();

  std::size_t workers = config.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(1, total / 1024));

  std::vector<Block> blocks(workers);
  auto range = [&](std::size_t w) { return w * total / workers; };
  if (workers == 1) {
    sweep_block(config, axis, 0, total, kernel, blocks[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      threads.emplace_back(sweep_block, std::cref(config), std::cref(axis), range(w),
                           range(w + 1), kernel, std::ref(blocks[w]));
    for (auto& t : threads) t.join();
  }

  std::size_t count = 0;
  for (const auto& b : blocks) {
    if (b.error) std::rethrow_exception(b.error);
    count += b.records.size();
  }
  std::vector<AdvantageRecord> out;
  out.reserve(count);
  for (auto& b : blocks) out.insert(out.end(), b.records.begin(), b.records.end());
  return out;
}

std::string_view to_string(Measure m) {
  switch (m) {
    case Measure::Qa: return "qa";
    case Measure::DeltaIn: return "discord";
    case Measure::Eof: return "eof";
  }
  return "?";
}

std::string_view to_string(ClusterStat s) {
  switch (s) {
    case ClusterStat::MaxEof: return "max-eof";
    case ClusterStat::MinEof: return "min-eof";
    case ClusterStat::MaxDiscord: return "max-discord";
    case ClusterStat::MinDiscord: return "min-discord";
  }
  return "?";
}

double measure_value(const AdvantageRecord& r, Measure m) {
  switch (m) {
    case Measure::Qa: return r.qa;
    case Measure::DeltaIn: return r.delta_in;
    case Measure::Eof: return r.eof;
  }
  throw DomainError("unknown measure");
}

double stat_value(const AdvantageRecord& r, ClusterStat s) {
  return (s == ClusterStat::MaxEof || s == ClusterStat::MinEof) ? r.eof : r.delta_in;
}

int mesh_bin(double v, int mesh) {
  if (mesh < 1) throw DomainError("mesh resolution must be positive");
  if (!(v > 0.0)) return 0;
  return std::min(static_cast<int>(std::floor(v * mesh)), mesh - 1);
}

ClusterGrid cluster_extremal(std::span<const AdvantageRecord> records, Measure x_axis,
                             Measure y_axis, ClusterStat stat, int mesh_resolution) {
  if (mesh_resolution < 2) throw DomainError("mesh resolution must be at least 2");
  if (x_axis == y_axis) throw DomainError("cluster axes must differ");
  ClusterGrid grid;
  grid.x_axis = x_axis;
  grid.y_axis = y_axis;
  grid.stat = stat;
  grid.mesh = mesh_resolution;
  const bool want_max = stat == ClusterStat::MaxEof || stat == ClusterStat::MaxDiscord;
  for (const auto& r : records) {
    const std::pair key{mesh_bin(measure_value(r, x_axis), mesh_resolution),
                        mesh_bin(measure_value(r, y_axis), mesh_resolution)};
    const double v = stat_value(r, stat);
    auto [it, inserted] = grid.cells.try_emplace(key, ClusterCell{v, r.c, 0});
    auto& cell = it->second;
    ++cell.population;
    if (!inserted && (want_max ? v > cell.value : v < cell.value)) {
      cell.value = v;
      cell.witness = r.c;
    }
  }
  return grid;
}

std::vector<ProfilePoint> column_profile(const ClusterGrid& grid, double fixed_axis_value) {
  const bool qa_is_x = grid.x_axis == Measure::Qa;
  if (!qa_is_x && grid.y_axis != Measure::Qa) throw DomainError("profile needs a qa axis");
  const int fixed = mesh_bin(fixed_axis_value, grid.mesh);
  std::vector<ProfilePoint> out;
  for (const auto& [key, cell] : grid.cells) {
    const auto [qa_bin, other] = qa_is_x ? key : std::pair{key.second, key.first};
    if (other != fixed) continue;
    out.push_back({(qa_bin + 0.5) / grid.mesh, cell.value});
  }
  std::sort(out.begin(), out.end(), [](const ProfilePoint& a, const ProfilePoint& b) {
    return a.qa_bin_center < b.qa_bin_center;
  });
  return out;
}

BoundSample evaluate_family_point(Family family, double parameter, const ProtocolParams& params) {
  const auto c = family_state({family, parameter});
  const auto r = quantum_advantage(c, params);
  return {parameter, c, r.concurrence, r.eof, r.delta_in, r.qa, r.delta_enc};
}

std::array<BoundCurve, 3> bound_curves(const SweepConfig& config, double parameter_step) {
  if (!(parameter_step > 0.0 && parameter_step <= 0.5))
    throw DomainError("parameter step must lie in (0, 0.5]");
  const auto params = config.params();
  const auto n = static_cast<long>(std::ceil(1.0 / parameter_step - 1e-9));
  std::array<BoundCurve, 3> curves;
  const std::array families{Family::Werner, Family::Alpha, Family::Beta};
  for (std::size_t f = 0; f < 3; ++f) {
    auto& curve = curves[f];
    curve.family = families[f];
    curve.eta = config.eta;
    curve.p0 = config.p0;
    curve.samples.reserve(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
      const double t = i == n ? 1.0 : static_cast<double>(i) * parameter_step;
      curve.samples.push_back(evaluate_family_point(families[f], t, params));
    }
  }
  return curves;
}

double bound_measure(const BoundSample& s, Measure m) {
  switch (m) {
    case Measure::Qa: return s.qa;
    case Measure::DeltaIn: return s.delta_in;
    case Measure::Eof: return s.eof;
  }
  throw DomainError("unknown measure");
}

std::optional<double> envelope_at(const BoundCurve& curve, Measure x_measure, Measure y_measure,
                                  double x, Envelope side) {
  const ProtocolParams params(curve.eta, curve.p0);
  const auto& s = curve.samples;
  std::optional<double> best;
  auto take = [&](double y) {
    if (!best || (side == Envelope::Upper ? y > *best : y < *best)) best = y;
  };
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const double xa = bound_measure(s[i], x_measure);
    const double xb = bound_measure(s[i + 1], x_measure);
    if (x == xa) take(bound_measure(s[i], y_measure));
    if (x == xb) take(bound_measure(s[i + 1], y_measure));
    if (!((xa < x && x < xb) || (xb < x && x < xa))) continue;

    // Illinois variant of regula falsi on the family parameter.
    double ta = s[i].parameter, tb = s[i + 1].parameter;
    double ga = xa - x, gb = xb - x;
    double y = bound_measure(s[i], y_measure);
    int last = 0;
    for (int it = 0; it < 100 && tb - ta > 1e-14; ++it) {
      const double t = std::clamp((ta * gb - tb * ga) / (gb - ga), ta, tb);
      const auto p = evaluate_family_point(curve.family, t, params);
      const double g = bound_measure(p, x_measure) - x;
      y = bound_measure(p, y_measure);
      if (g == 0.0) break;
      if ((g < 0.0) == (ga < 0.0)) {
        ta = t;
        ga = g;
        if (last == -1) gb *= 0.5;
        last = -1;
      } else {
        tb = t;
        gb = g;
        if (last == 1) ga *= 0.5;
        last = 1;
      }
    }
    take(y);
  }
  return best;
}

DominanceReport dominance(std::span<const AdvantageRecord> records, const BoundCurve& curve,
                          Measure x_measure, Measure y_measure, Envelope side) {
  DominanceReport report;
  report.max_violation = -std::numeric_limits<double>::infinity();
  for (const auto& r : records) {
    const auto env = envelope_at(curve, x_measure, y_measure, measure_value(r, x_measure), side);
    if (!env) {
      ++report.outside_range;
      continue;
    }
    ++report.checked;
    const double y = measure_value(r, y_measure);
    const double violation = side == Envelope::Upper ? y - *env : *env - y;
    if (violation > report.max_violation) {
      report.max_violation = violation;
      report.worst = r.c;
    }
  }
  if (report.checked == 0) report.max_violation = 0.0;
  return report;
}

namespace {

double concurrence_for_eof(double eof) {
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    (eof_from_concurrence(mid) < eof ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// qa(Werner) - qa(Alpha) at equal entanglement of formation.
double werner_minus_alpha(double eof, const ProtocolParams& params) {
  const double c = concurrence_for_eof(eof);
  const double w = std::min(1.0, (1.0 + 2.0 * c) / 3.0);
  const double a = std::min(1.0, (1.0 + c) / 2.0);
  return quantum_advantage(family_state({Family::Werner, w}), params).qa -
         quantum_advantage(family_state({Family::Alpha, a}), params).qa;
}

}  // namespace

std::optional<double> transition_point(double eta, double p0) {
  const ProtocolParams params(eta, p0);
  constexpr int kScan = 1000;
  std::vector<double> diff(kScan);
  double largest = 0.0;
  for (int i = 0; i < kScan; ++i) {
    diff[i] = werner_minus_alpha(static_cast<double>(i + 1) / (kScan + 1), params);
    largest = std::max(largest, std::abs(diff[i]));
  }
  if (largest < 1e-12) return std::nullopt;
  for (int i = 0; i + 1 < kScan; ++i) {
    if (!(diff[i] < 0.0 && diff[i + 1] >= 0.0)) continue;
    double lo = static_cast<double>(i + 1) / (kScan + 1);
    double hi = static_cast<double>(i + 2) / (kScan + 1);
    while (hi - lo > 1e-10) {
      const double mid = 0.5 * (lo + hi);
      (werner_minus_alpha(mid, params) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }
  return std::nullopt;
}

HornReport horn_locate(std::span<const AdvantageRecord> records) {
  HornReport report;
  for (const auto& r : records) {
    if (!r.separable) continue;
    if (!report.present || r.delta_in > report.grid_max) {
      report.present = true;
      report.grid_max = r.delta_in;
      report.grid_witness = r.c;
    }
  }
  if (!report.present) return report;

  constexpr double kStep = 1e-3;
  auto c = report.grid_witness.components();
  double best = report.grid_max;
  for (int iter = 0; iter < 100000; ++iter) {
    std::array<double, 3> next = c;
    double next_value = best;
    // Offsets up to 2 steps per axis: on the physical faces the ascent
    // direction can be (1, 1, 2), outside the unit cube stencil.
    for (int dx = -2; dx <= 2; ++dx)
      for (int dy = -2; dy <= 2; ++dy)
        for (int dz = -2; dz <= 2; ++dz) {
          if (dx == 0 && dy == 0 && dz == 0) continue;
          const std::array<double, 3> p{c[0] + dx * kStep, c[1] + dy * kStep, c[2] + dz * kStep};
          if (std::abs(p[0]) > 1.0 || std::abs(p[1]) > 1.0 || std::abs(p[2]) > 1.0) continue;
          const CorrelationVector cv(p[0], p[1], p[2]);
          if (!is_physical(cv) || concurrence_mmm(cv) != 0.0) continue;
          const double v = discord_mmm(cv);
          if (v > next_value) {
            next_value = v;
            next = p;
          }
        }
    if (!(next_value > best)) break;
    best = next_value;
    c = next;
  }
  report.max_separable_discord = best;
  report.witness = CorrelationVector(c[0], c[1], c[2]);
  return report;
}

}  // namespace qillum
