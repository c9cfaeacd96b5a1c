#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "qillum/error.hpp"
#include "qillum/figures.hpp"
#include "qillum/io.hpp"
#include "qillum/sweep.hpp"
#include "verify.hpp"

namespace qillum::cli {

namespace {

struct Options {
  std::string c_text;
  double eta = 0.5;
  double p0 = 0.5;
  std::optional<double> step;
  int mesh = 80;
  std::optional<std::string> axes;
  std::optional<std::string> stat;
  bool entangled_only = false;
  std::string basis_sense = "max";
  std::uint64_t seed = 42;
  std::string out_path;
  std::optional<int> samples;
  std::string check;
  std::string figure_kind;
};

CorrelationVector parse_triple(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError("--c: '" + item + "' is not a number");
    v.push_back(x);
  }
  if (v.size() != 3) throw UsageError("--c expects three comma-separated values");
  for (double x : v)
    if (!(x >= -1.0 && x <= 1.0))
      throw DomainError("--c: correlation components must lie in [-1, 1], got " + text);
  return {v[0], v[1], v[2]};
}

BasisSense sense_of(const Options& o) { return o.basis_sense == "min" ? BasisSense::Min : BasisSense::Max; }

SweepConfig sweep_config(const Options& o) {
  SweepConfig cfg;
  cfg.grid_step = o.step.value_or(0.025);
  cfg.eta = o.eta;
  cfg.p0 = o.p0;
  cfg.include_separable = !o.entangled_only;
  cfg.mesh_resolution = o.mesh;
  cfg.sense = sense_of(o);
  return cfg;
}

std::pair<Measure, Measure> axes_of(const std::string& name) {
  if (name == "qa-eof") return {Measure::Qa, Measure::Eof};
  return {Measure::Qa, Measure::DeltaIn};
}

ClusterStat stat_of(const std::string& name) {
  if (name == "min-eof") return ClusterStat::MinEof;
  if (name == "max-discord") return ClusterStat::MaxDiscord;
  if (name == "min-discord") return ClusterStat::MinDiscord;
  return ClusterStat::MaxEof;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) out << text;
  else write_text_file(o.out_path, text);
}

std::vector<double> eta_grid(double step) {
  if (!(step > 0.0 && step <= 1.0)) throw DomainError("eta grid step must lie in (0, 1]");
  std::vector<double> g;
  const auto n = static_cast<long>(std::llround(1.0 / step));
  if (std::abs(n * step - 1.0) < 1e-9) {
    for (long i = 0; i <= n; ++i) g.push_back(static_cast<double>(i) / static_cast<double>(n));
  } else {
    for (long i = 0; i * step <= 1.0 + 1e-12; ++i) g.push_back(std::min(1.0, i * step));
  }
  return g;
}

double rounded(double v) { return std::stod(format_fixed(v, 6)); }

int run_eval(const Options& o, std::ostream& out) {
  const auto c = parse_triple(o.c_text);
  if (!is_physical(c)) throw DomainError("--c " + to_string(c) + " is not a physical state");
  const ProtocolParams params(o.eta, o.p0);
  const auto r = quantum_advantage(c, params, sense_of(o));
  nlohmann::ordered_json j;
  j["c"] = {rounded(c.c1()), rounded(c.c2()), rounded(c.c3())};
  j["eta"] = o.eta;
  j["p0"] = o.p0;
  j["basis_sense"] = o.basis_sense;
  j["lambda"] = {rounded(r.lambda[0]), rounded(r.lambda[1]), rounded(r.lambda[2]),
                 rounded(r.lambda[3])};
  j["concurrence"] = rounded(r.concurrence);
  j["eof"] = rounded(r.eof);
  j["discord_in"] = rounded(r.delta_in);
  j["chi_q"] = rounded(r.chi_q);
  j["chi_c"] = rounded(r.chi_c);
  j["qa"] = rounded(r.qa);
  j["delta_enc"] = rounded(r.delta_enc);
  j["separable"] = r.separable;
  emit(o, j.dump(2) + "\n", out);
  return kExitOk;
}

int run_sweep_cmd(const Options& o, std::ostream& out) {
  const auto records = run_sweep(sweep_config(o));
  std::ostringstream os;
  write_records(os, records);
  emit(o, os.str(), out);
  return kExitOk;
}

int run_cluster(const Options& o, std::ostream& out) {
  const auto cfg = sweep_config(o);
  const auto records = run_sweep(cfg);
  const auto [x, y] = axes_of(o.axes.value_or("qa-discord"));
  const auto grid = cluster_extremal(records, x, y, stat_of(o.stat.value_or("max-eof")), cfg.mesh_resolution);
  std::ostringstream os;
  write_cluster(os, grid);
  emit(o, os.str(), out);
  return kExitOk;
}

int run_toy(const Options& o, std::ostream& out) {
  const auto grid = eta_grid(o.step.value_or(0.01));
  std::ostringstream os;
  write_toy_curves(os, toy_detection_curves(grid));
  emit(o, os.str(), out);
  return kExitOk;
}

int run_figure(const Options& o, std::ostream& out) {
  const auto kind = parse_figure_kind(o.figure_kind);
  if (!kind) throw UsageError("unknown figure kind '" + o.figure_kind + "'");
  FigureMeta meta{o.eta, o.p0, o.step.value_or(0.025), o.mesh};
  FigureData data;
  switch (*kind) {
    case FigureKind::Fig1:
    case FigureKind::Fig2: {
      meta.step = o.step.value_or(0.01);
      data = toy_detection_curves(eta_grid(meta.step));
      break;
    }
    case FigureKind::Fig3b:
    case FigureKind::Fig4a:
    case FigureKind::Fig4b: {
      auto cfg = sweep_config(o);
      if (*kind == FigureKind::Fig4b) cfg.include_separable = false;
      ScatterData sd;
      sd.records = run_sweep(cfg);
      if (*kind != FigureKind::Fig3b) {
        const auto curves = bound_curves(cfg);
        sd.curves.assign(curves.begin(), curves.end());
      }
      data = std::move(sd);
      break;
    }
    case FigureKind::Fig5:
    case FigureKind::Fig6:
    case FigureKind::Fig7: {
      const char* axes = *kind == FigureKind::Fig5 ? "qa-discord" : "qa-eof";
      const char* stat = *kind == FigureKind::Fig5   ? "max-eof"
                         : *kind == FigureKind::Fig6 ? "min-discord"
                                                     : "max-discord";
      const auto cfg = sweep_config(o);
      const auto records = run_sweep(cfg);
      const auto [x, y] = axes_of(o.axes.value_or(axes));
      data = cluster_extremal(records, x, y, stat_of(o.stat.value_or(stat)), cfg.mesh_resolution);
      break;
    }
  }
  emit(o, render_figure(*kind, data, meta), out);
  return kExitOk;
}

int run_verify(const Options& o, std::ostream& out) {
  const auto check = parse_check(o.check);
  if (!check) throw UsageError("unknown check '" + o.check + "'");
  VerifyOptions v;
  v.eta = o.eta;
  v.p0 = o.p0;
  v.step = o.step;
  v.mesh = o.mesh;
  v.samples = o.samples;
  v.seed = o.seed;
  if (v.samples && *v.samples < 1) throw UsageError("--samples must be positive");
  std::ostringstream os;
  const int code = report(run_checks(*check, v), os);
  emit(o, os.str(), out);
  return code;
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum illumination figures of merit for Bell-diagonal two-qubit states", "qillum"};
  app.require_subcommand(1);
  Options o;

  auto add_protocol = [&](CLI::App* cmd) {
    cmd->add_option("--eta", o.eta, "reflectivity in [0, 1]");
    cmd->add_option("--p0", o.p0, "prior of target present, in (0, 1)");
  };
  auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", o.out_path, "output file (default stdout)"); };
  auto add_sense = [&](CLI::App* cmd) {
    cmd->add_option("--basis-sense", o.basis_sense, "classical basis choice")
        ->check(CLI::IsMember({"max", "min"}));
  };
  auto add_grid = [&](CLI::App* cmd) {
    cmd->add_option("--step", o.step, "grid step of the correlation cube");
    cmd->add_flag("--entangled-only", o.entangled_only, "drop separable states");
  };
  auto add_cluster = [&](CLI::App* cmd) {
    cmd->add_option("--mesh", o.mesh, "mesh cells per unit");
    cmd->add_option("--axes", o.axes, "cluster plane")->check(CLI::IsMember({"qa-discord", "qa-eof"}));
    cmd->add_option("--stat", o.stat, "extremal statistic per cell")
        ->check(CLI::IsMember({"max-eof", "min-eof", "max-discord", "min-discord"}));
  };

  auto* eval = app.add_subcommand("eval", "evaluate one state");
  eval->add_option("--c", o.c_text, "correlation vector c1,c2,c3")->required();
  add_protocol(eval);
  add_sense(eval);
  add_out(eval);

  auto* sweep = app.add_subcommand("sweep", "records for every physical grid state (CSV)");
  add_protocol(sweep);
  add_grid(sweep);
  add_sense(sweep);
  add_out(sweep);

  auto* cluster = app.add_subcommand("cluster", "extremal statistic per mesh cell (CSV)");
  add_protocol(cluster);
  add_grid(cluster);
  add_cluster(cluster);
  add_sense(cluster);
  add_out(cluster);

  auto* figure = app.add_subcommand("figure", "render a figure (SVG)");
  figure->add_option("kind", o.figure_kind, "fig1 fig2 fig3b fig4a fig4b fig5 fig6 fig7")->required();
  add_protocol(figure);
  add_grid(figure);
  add_cluster(figure);
  add_sense(figure);
  add_out(figure);

  auto* toy = app.add_subcommand("toy", "Bell-state toy protocol curves (CSV)");
  toy->add_option("--step", o.step, "eta grid step");
  add_out(toy);

  auto* verify = app.add_subcommand("verify", "run a verification check");
  verify->add_option("--check", o.check, "identity limit monotonicity discord-oracle bounds horn all")
      ->required()
      ->check(CLI::IsMember({"identity", "limit", "monotonicity", "discord-oracle", "bounds", "horn", "all"}));
  add_protocol(verify);
  verify->add_option("--step", o.step, "grid step (per-check default)");
  verify->add_option("--mesh", o.mesh, "mesh cells per unit");
  verify->add_option("--samples", o.samples, "random samples (per-check default)");
  verify->add_option("--seed", o.seed, "generator seed");
  add_out(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (figure->parsed() && (figure->count("--axes") || figure->count("--stat"))) {
      const auto kind = parse_figure_kind(o.figure_kind);
      if (kind && (*kind == FigureKind::Fig1 || *kind == FigureKind::Fig2 ||
                   *kind == FigureKind::Fig3b || *kind == FigureKind::Fig4a ||
                   *kind == FigureKind::Fig4b))
        throw UsageError("--axes and --stat apply to heat-map figures only");
    }
    if (eval->parsed()) return run_eval(o, out);
    if (sweep->parsed()) return run_sweep_cmd(o, out);
    if (cluster->parsed()) return run_cluster(o, out);
    if (figure->parsed()) return run_figure(o, out);
    if (toy->parsed()) return run_toy(o, out);
    if (verify->parsed()) return run_verify(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << " (best value " << e.best_value() << ")\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace qillum::cli
