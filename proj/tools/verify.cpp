#include "verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>

#include "qillum/correlations.hpp"
#include "qillum/io.hpp"
#include "qillum/random.hpp"
#include "qillum/sweep.hpp"

namespace qillum::cli {

namespace {

constexpr std::array<double, 3> kColumns = {0.2, 0.4, 0.6};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

SweepConfig sweep_config(const VerifyOptions& o, double default_step, bool separable = true) {
  SweepConfig cfg;
  cfg.grid_step = o.step.value_or(default_step);
  cfg.eta = o.eta;
  cfg.p0 = o.p0;
  cfg.mesh_resolution = o.mesh;
  cfg.include_separable = separable;
  return cfg;
}

CheckOutcome identity(const VerifyOptions& o) {
  CheckOutcome r{"identity", false, {}};
  const auto records = run_sweep(sweep_config(o, 0.05));
  double worst = 0.0;
  CorrelationVector at;
  for (const auto& rec : records) {
    const double d = std::abs(rec.qa - rec.delta_enc);
    if (d > worst) {
      worst = d;
      at = rec.c;
    }
  }
  r.passed = worst <= 1e-8;
  r.lines.push_back(std::to_string(records.size()) + " physical states");
  r.lines.push_back("max |qa - delta_enc| = " + fmt(worst) + " at " + to_string(at) +
                    " (tolerance 1e-8)");
  return r;
}

CheckOutcome limit(const VerifyOptions& o) {
  CheckOutcome r{"limit", true, {}};
  const ProtocolParams params(o.eta, o.p0);
  Lcg rng(o.seed);
  const int n = o.samples.value_or(50);
  const std::array<double, 2> scales = {1e-2, 1e-3};
  double worst_gap = 0.0, worst_shrink = INFINITY;
  double lim = high_noise_limit(params);
  for (int i = 0; i < n; ++i) {
    const auto dir = random_direction(rng);
    const auto rep = high_noise_asymptotics(dir, params, scales);
    const double gap = std::abs(rep.points[1].ratio - rep.limit);
    const double res_coarse = std::abs(rep.points[0].residual);
    const double res_fine = std::abs(rep.points[1].residual);
    const double shrink = res_fine > 0.0 ? res_coarse / res_fine : INFINITY;
    worst_gap = std::max(worst_gap, gap);
    worst_shrink = std::min(worst_shrink, shrink);
    if (gap > 1e-4 || shrink < 3.0) {
      r.passed = false;
      r.lines.push_back("direction " + to_string(dir) + ": gap " + fmt(gap) + ", shrink " +
                        fmt(shrink));
    }
  }
  r.lines.push_back("limit p0 eta^2 (1 - p0) = " + format_fixed(lim));
  r.lines.push_back(std::to_string(n) + " directions, max |ratio(1e-3) - limit| = " +
                    fmt(worst_gap) + " (tolerance 1e-4)");
  r.lines.push_back("min residual shrink 1e-2 -> 1e-3 = " + fmt(worst_shrink) + " (required 3)");
  return r;
}

// Largest drop between consecutive qa bins of a column profile.
double largest_drop(const std::vector<ProfilePoint>& p, double* at_qa = nullptr) {
  double worst = -INFINITY;
  for (std::size_t i = 1; i < p.size(); ++i) {
    const double drop = p[i - 1].value - p[i].value;
    if (drop > worst) {
      worst = drop;
      if (at_qa) *at_qa = p[i].qa_bin_center;
    }
  }
  return worst;
}

// Drop with the number of populated cells; a column with fewer than two
// cells has nothing to compare.
std::string describe_drop(const std::vector<ProfilePoint>& p, double drop) {
  const std::string cells =
      " (" + std::to_string(p.size()) + (p.size() == 1 ? " cell)" : " cells)");
  return p.size() < 2 ? "none" + cells : fmt(drop) + cells;
}

CheckOutcome monotonicity(const VerifyOptions& o) {
  CheckOutcome r{"monotonicity", true, {}};
  const auto all = run_sweep(sweep_config(o, 0.025));
  std::vector<AdvantageRecord> entangled;
  std::copy_if(all.begin(), all.end(), std::back_inserter(entangled),
               [](const AdvantageRecord& a) { return !a.separable; });

  const auto max_eof = cluster_extremal(entangled, Measure::Qa, Measure::DeltaIn,
                                        ClusterStat::MaxEof, o.mesh);
  const auto min_discord = cluster_extremal(all, Measure::Qa, Measure::Eof,
                                            ClusterStat::MinDiscord, o.mesh);
  const auto max_discord = cluster_extremal(all, Measure::Qa, Measure::Eof,
                                            ClusterStat::MaxDiscord, o.mesh);

  for (double col : kColumns) {
    const auto p1 = column_profile(max_eof, col);
    const auto p2 = column_profile(min_discord, col);
    const double d1 = largest_drop(p1);
    const double d2 = largest_drop(p2);
    if (d1 > 1e-3 || d2 > 1e-3) r.passed = false;
    r.lines.push_back("column " + format_fixed(col, 2) + ": max-eof largest drop " +
                      describe_drop(p1, d1) + ", min-discord largest drop " +
                      describe_drop(p2, d2) + " (tolerance 1e-3)");
  }

  bool decrease = false;
  for (double col : kColumns) {
    const auto p = column_profile(max_discord, col);
    double at = 0.0;
    const double d = largest_drop(p, &at);
    // High qa: the drop lands in the upper half of the column's bins.
    const bool high = !p.empty() && at >= 0.5 * (p.front().qa_bin_center + p.back().qa_bin_center);
    if (d > 0.0 && high) decrease = true;
    r.lines.push_back("column " + format_fixed(col, 2) + ": max-discord largest drop " +
                      describe_drop(p, d) + " at qa " + format_fixed(at, 4));
  }
  if (!decrease) {
    r.passed = false;
    r.lines.push_back("no strict max-discord decrease at high qa");
  }
  return r;
}

CheckOutcome discord_oracle(const VerifyOptions& o) {
  CheckOutcome r{"discord-oracle", false, {}};
  Lcg rng(o.seed);
  const int n = o.samples.value_or(200);
  double worst = 0.0;
  CorrelationVector at;
  for (int i = 0; i < n; ++i) {
    const auto c = random_physical_state(rng);
    const double gap = std::abs(discord_mmm(c) - discord_numeric(build_density(c)));
    if (gap > worst) {
      worst = gap;
      at = c;
    }
  }
  r.passed = worst <= 1e-5;
  r.lines.push_back(std::to_string(n) + " states, max |analytic - numeric| = " + fmt(worst) +
                    " at " + to_string(at) + " (tolerance 1e-5)");
  return r;
}

CheckOutcome bounds(const VerifyOptions& o) {
  CheckOutcome r{"bounds", true, {}};
  const auto cfg = sweep_config(o, 0.025);
  const auto records = run_sweep(cfg);
  const auto curves = bound_curves(cfg);
  struct Case {
    const BoundCurve& curve;
    Measure x, y;
    Envelope side;
    const char* what;
  };
  const std::array<Case, 3> cases = {{
      {curves[2], Measure::DeltaIn, Measure::Qa, Envelope::Upper, "beta upper (discord, qa)"},
      {curves[1], Measure::DeltaIn, Measure::Qa, Envelope::Lower, "alpha lower (discord, qa)"},
      {curves[2], Measure::Eof, Measure::DeltaIn, Envelope::Lower, "beta lower (eof, discord)"},
  }};
  for (const auto& c : cases) {
    const auto rep = dominance(records, c.curve, c.x, c.y, c.side);
    const bool ok = rep.max_violation <= 1e-6;
    r.passed = r.passed && ok;
    r.lines.push_back(std::string(c.what) + ": max violation " + fmt(rep.max_violation) + " at " +
                      to_string(rep.worst) + ", " + std::to_string(rep.checked) + " checked, " +
                      std::to_string(rep.outside_range) + " outside range (tolerance 1e-6)" +
                      (ok ? "" : " FAIL"));
  }
  return r;
}

CheckOutcome horn(const VerifyOptions& o) {
  CheckOutcome r{"horn", false, {}};
  auto cfg = sweep_config(o, 0.025);
  const auto all = horn_locate(run_sweep(cfg));
  cfg.workers = 1;
  const auto again = horn_locate(run_sweep(cfg));
  cfg.include_separable = false;
  const auto entangled = horn_locate(run_sweep(cfg));
  const bool in_range =
      all.present && all.max_separable_discord >= 0.30 && all.max_separable_discord <= 0.35;
  const bool reproducible = again.present && again.witness == all.witness &&
                            again.max_separable_discord == all.max_separable_discord;
  r.passed = in_range && reproducible && !entangled.present;
  r.lines.push_back("separable max discord " + format_fixed(all.max_separable_discord, 6) +
                    " at " + to_string(all.witness) + " (grid " +
                    format_fixed(all.grid_max, 6) + " at " + to_string(all.grid_witness) +
                    "), range [0.30, 0.35]");
  r.lines.push_back(std::string("witness reproducible: ") + (reproducible ? "yes" : "no"));
  r.lines.push_back(std::string("entangled-only sweep horn: ") +
                    (entangled.present ? "present" : "absent"));
  return r;
}

}  // namespace

std::optional<Check> parse_check(const std::string& name) {
  for (auto c : {Check::Identity, Check::Limit, Check::Monotonicity, Check::DiscordOracle,
                 Check::Bounds, Check::Horn, Check::All})
    if (to_string(c) == name) return c;
  return std::nullopt;
}

std::string to_string(Check c) {
  switch (c) {
    case Check::Identity: return "identity";
    case Check::Limit: return "limit";
    case Check::Monotonicity: return "monotonicity";
    case Check::DiscordOracle: return "discord-oracle";
    case Check::Bounds: return "bounds";
    case Check::Horn: return "horn";
    case Check::All: return "all";
  }
  return "?";
}

std::vector<CheckOutcome> run_checks(Check check, const VerifyOptions& options) {
  switch (check) {
    case Check::Identity: return {identity(options)};
    case Check::Limit: return {limit(options)};
    case Check::Monotonicity: return {monotonicity(options)};
    case Check::DiscordOracle: return {discord_oracle(options)};
    case Check::Bounds: return {bounds(options)};
    case Check::Horn: return {horn(options)};
    case Check::All:
      return {identity(options), limit(options),  monotonicity(options),
              discord_oracle(options), bounds(options), horn(options)};
  }
  return {};
}

int report(const std::vector<CheckOutcome>& outcomes, std::ostream& out) {
  bool ok = true;
  for (const auto& o : outcomes) {
    out << (o.passed ? "PASS " : "FAIL ") << o.name << '\n';
    for (const auto& l : o.lines) out << "  " << l << '\n';
    ok = ok && o.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace qillum::cli
