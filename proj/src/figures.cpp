#include "qillum/figures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <set>
#include <utility>

#include "qillum/error.hpp"
#include "qillum/io.hpp"

namespace qillum {

std::string_view to_string(FigureKind k) {
  switch (k) {
    case FigureKind::Fig1: return "fig1";
    case FigureKind::Fig2: return "fig2";
    case FigureKind::Fig3b: return "fig3b";
    case FigureKind::Fig4a: return "fig4a";
    case FigureKind::Fig4b: return "fig4b";
    case FigureKind::Fig5: return "fig5";
    case FigureKind::Fig6: return "fig6";
    case FigureKind::Fig7: return "fig7";
  }
  return "?";
}

std::optional<FigureKind> parse_figure_kind(std::string_view name) {
  for (auto k : {FigureKind::Fig1, FigureKind::Fig2, FigureKind::Fig3b, FigureKind::Fig4a,
                 FigureKind::Fig4b, FigureKind::Fig5, FigureKind::Fig6, FigureKind::Fig7})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

namespace {

bool is_toy(FigureKind k) { return k == FigureKind::Fig1 || k == FigureKind::Fig2; }
bool is_heat(FigureKind k) {
  return k == FigureKind::Fig5 || k == FigureKind::Fig6 || k == FigureKind::Fig7;
}

struct HeatLayout {
  Measure other;
  ClusterStat stat;
};

HeatLayout heat_layout(FigureKind k) {
  switch (k) {
    case FigureKind::Fig5: return {Measure::DeltaIn, ClusterStat::MaxEof};
    case FigureKind::Fig6: return {Measure::Eof, ClusterStat::MinDiscord};
    default: return {Measure::Eof, ClusterStat::MaxDiscord};
  }
}

// Smallest 1-significant-digit value >= v.
double nice_ceiling(double v) {
  if (!(v > 0.0)) return 1.0;
  const double e = std::pow(10.0, std::floor(std::log10(v)));
  return std::ceil(v / e - 1e-9) * e;
}

std::string num(double v, int decimals = 3) { return format_fixed(v, decimals); }

std::string label(Measure m) {
  switch (m) {
    case Measure::Qa: return "quantum advantage (bits)";
    case Measure::DeltaIn: return "initial discord (bits)";
    case Measure::Eof: return "entanglement of formation (ebits)";
  }
  return "";
}

const ClusterGrid& grid_of(const FigureData& data) { return std::get<ClusterGrid>(data); }

}  // namespace

void check_figure_data(FigureKind kind, const FigureData& data) {
  const auto name = std::string(to_string(kind));
  if (is_toy(kind)) {
    if (!std::holds_alternative<std::vector<ToyDetectionPoint>>(data))
      throw UsageError(name + " needs toy detection curves");
    return;
  }
  if (is_heat(kind)) {
    if (!std::holds_alternative<ClusterGrid>(data)) throw UsageError(name + " needs a cluster grid");
    const auto& g = grid_of(data);
    const auto layout = heat_layout(kind);
    const bool axes_ok = (g.x_axis == Measure::Qa && g.y_axis == layout.other) ||
                         (g.y_axis == Measure::Qa && g.x_axis == layout.other);
    if (!axes_ok || g.stat != layout.stat)
      throw UsageError(name + " needs qa-" + std::string(to_string(layout.other)) + " cells with " +
                       std::string(to_string(layout.stat)));
    return;
  }
  if (!std::holds_alternative<ScatterData>(data)) throw UsageError(name + " needs records");
  if (kind == FigureKind::Fig4b) {
    for (const auto& r : std::get<ScatterData>(data).records)
      if (r.separable) throw UsageError("fig4b takes entangled records only");
  }
}

PlotFrame figure_frame(FigureKind kind, const FigureData& data) {
  check_figure_data(kind, data);
  PlotFrame f;
  if (kind == FigureKind::Fig1) {
    f.y_min = 0.5;
    return f;
  }
  if (kind == FigureKind::Fig2) {
    double top = 0.0;
    for (const auto& p : std::get<std::vector<ToyDetectionPoint>>(data))
      top = std::max({top, p.i_joint, p.i_local});
    f.y_max = nice_ceiling(top);
    return f;
  }
  if (is_heat(kind)) {
    const auto& g = grid_of(data);
    int top_bin = -1;
    for (const auto& [key, cell] : g.cells)
      top_bin = std::max(top_bin, g.x_axis == Measure::Qa ? key.first : key.second);
    f.y_max = top_bin < 0 ? 1.0 : static_cast<double>(top_bin + 1) / g.mesh;
    return f;
  }
  const auto& sd = std::get<ScatterData>(data);
  double top = 0.0;
  for (const auto& r : sd.records) top = std::max(top, r.qa);
  if (kind == FigureKind::Fig3b) {
    for (const auto& r : sd.records) top = std::max(top, r.delta_enc);
    f.x_max = f.y_max = nice_ceiling(top);
    return f;
  }
  for (const auto& c : sd.curves)
    for (const auto& s : c.samples) top = std::max(top, s.qa);
  f.y_max = nice_ceiling(top);
  return f;
}

std::string ramp_color(double t) {
  static constexpr std::array<std::array<int, 3>, 5> stops = {
      {{0x44, 0x01, 0x54}, {0x3b, 0x52, 0x8b}, {0x21, 0x91, 0x8c}, {0x5e, 0xc9, 0x62}, {0xfd, 0xe7, 0x25}}};
  t = std::clamp(std::isfinite(t) ? t : 0.0, 0.0, 1.0);
  const double pos = t * 4.0;
  const int i = std::min(static_cast<int>(pos), 3);
  const double u = pos - i;
  char buf[8];
  int rgb[3];
  for (int k = 0; k < 3; ++k)
    rgb[k] = static_cast<int>(std::lround(stops[i][k] + u * (stops[i + 1][k] - stops[i][k])));
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
  return buf;
}

namespace {

class SvgWriter {
 public:
  explicit SvgWriter(const PlotFrame& f) : f_(f) {}

  void line(double x1, double y1, double x2, double y2, std::string_view style) {
    out_ += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" +
            num(y2) + "\" " + std::string(style) + "/>\n";
  }

  void text(double x, double y, std::string_view s, std::string_view extra = "") {
    out_ += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"sans-serif\" font-size=\"13\"";
    if (!extra.empty()) out_ += " " + std::string(extra);
    out_ += ">" + std::string(s) + "</text>\n";
  }

  void polyline(const std::vector<std::pair<double, double>>& pts, std::string_view id,
                std::string_view color) {
    out_ += "<polyline id=\"" + std::string(id) + "\" fill=\"none\" stroke=\"" +
            std::string(color) + "\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const auto& [x, y] : pts) {
      if (!first) out_ += ' ';
      first = false;
      out_ += num(f_.px(x)) + ',' + num(f_.py(y));
    }
    out_ += "\"/>\n";
  }

  void axes(std::string_view x_label, std::string_view y_label) {
    out_ += "<g id=\"axes\">\n";
    out_ += "<rect x=\"" + num(f_.left) + "\" y=\"" + num(f_.top) + "\" width=\"" +
            num(f_.right - f_.left) + "\" height=\"" + num(f_.bottom - f_.top) +
            "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    for (int i = 0; i <= 5; ++i) {
      const double xv = f_.x_min + (f_.x_max - f_.x_min) * i / 5.0;
      const double yv = f_.y_min + (f_.y_max - f_.y_min) * i / 5.0;
      const double px = f_.px(xv), py = f_.py(yv);
      line(px, f_.bottom, px, f_.bottom + 6, "stroke=\"#000000\"");
      text(px, f_.bottom + 22, num(xv), "text-anchor=\"middle\"");
      line(f_.left - 6, py, f_.left, py, "stroke=\"#000000\"");
      text(f_.left - 10, py + 4, num(yv), "text-anchor=\"end\"");
    }
    text((f_.left + f_.right) / 2, 580, x_label, "text-anchor=\"middle\"");
    out_ += "<text x=\"22\" y=\"" + num((f_.top + f_.bottom) / 2) +
            "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" "
            "transform=\"rotate(-90 22 " + num((f_.top + f_.bottom) / 2) + ")\">" +
            std::string(y_label) + "</text>\n";
    out_ += "</g>\n";
  }

  void raw(std::string_view s) { out_ += s; }
  std::string& str() { return out_; }

 private:
  const PlotFrame& f_;
  std::string out_;
};

void legend(SvgWriter& w, const std::vector<std::pair<std::string, std::string>>& entries) {
  w.raw("<g id=\"legend\">\n");
  double y = PlotFrame::top + 10;
  for (const auto& [name, color] : entries) {
    w.line(PlotFrame::right + 12, y, PlotFrame::right + 36, y,
           "stroke=\"" + color + "\" stroke-width=\"2\"");
    w.text(PlotFrame::right + 42, y + 4, name);
    y += 20;
  }
  w.raw("</g>\n");
}

void toy_body(SvgWriter& w, FigureKind kind, const std::vector<ToyDetectionPoint>& pts) {
  std::vector<std::pair<double, double>> joint, local;
  for (const auto& p : pts) {
    joint.emplace_back(p.eta, kind == FigureKind::Fig1 ? p.p_joint_posterior : p.i_joint);
    local.emplace_back(p.eta, kind == FigureKind::Fig1 ? p.p_local_posterior : p.i_local);
  }
  w.polyline(joint, "joint", "#21918c");
  w.polyline(local, "local", "#440154");
  legend(w, {{"joint", "#21918c"}, {"local", "#440154"}});
  w.axes("reflectivity eta", kind == FigureKind::Fig1 ? "P(target present | yes)"
                                                       : "mutual information (bits)");
}

void scatter_body(SvgWriter& w, const PlotFrame& f, FigureKind kind, const ScatterData& sd) {
  const bool identity = kind == FigureKind::Fig3b;
  if (identity) w.line(f.px(0), f.py(0), f.px(f.x_max), f.py(f.y_max), "id=\"diagonal\" stroke=\"#fde725\" stroke-width=\"1\"");
  w.raw("<g id=\"records\" fill=\"#3b528b\">\n");
  std::set<std::pair<long, long>> seen;
  for (const auto& r : sd.records) {
    const double px = f.px(identity ? r.delta_enc : r.delta_in);
    const double py = f.py(r.qa);
    if (!seen.emplace(std::lround(px * 2), std::lround(py * 2)).second) continue;
    w.raw("<circle cx=\"" + num(px) + "\" cy=\"" + num(py) + "\" r=\"1.5\"/>\n");
  }
  w.raw("</g>\n");
  std::vector<std::pair<std::string, std::string>> entries;
  static constexpr std::array<const char*, 3> colors = {"#21918c", "#5ec962", "#440154"};
  for (const auto& c : sd.curves) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(c.samples.size());
    for (const auto& s : c.samples) pts.emplace_back(s.delta_in, s.qa);
    const auto color = colors[static_cast<int>(c.family)];
    w.polyline(pts, to_string(c.family), color);
    entries.emplace_back(to_string(c.family), color);
  }
  if (!entries.empty()) legend(w, entries);
  w.axes(identity ? "discord of encoding (bits)" : label(Measure::DeltaIn), label(Measure::Qa));
}

void heat_body(SvgWriter& w, const PlotFrame& f, const ClusterGrid& g) {
  double lo = 0.0, hi = 0.0;
  bool any = false;
  for (const auto& [key, cell] : g.cells) {
    lo = any ? std::min(lo, cell.value) : cell.value;
    hi = any ? std::max(hi, cell.value) : cell.value;
    any = true;
  }
  const bool qa_x = g.x_axis == Measure::Qa;
  const double cw = 1.0 / g.mesh;
  w.raw("<g id=\"cells\">\n");
  for (const auto& [key, cell] : g.cells) {
    const int qa_bin = qa_x ? key.first : key.second;
    const int other_bin = qa_x ? key.second : key.first;
    const double x0 = f.px(other_bin * cw), x1 = f.px((other_bin + 1) * cw);
    const double y0 = f.py((qa_bin + 1) * cw), y1 = f.py(qa_bin * cw);
    const double t = hi > lo ? (cell.value - lo) / (hi - lo) : 0.0;
    w.raw("<rect x=\"" + num(x0) + "\" y=\"" + num(y0) + "\" width=\"" + num(x1 - x0) +
          "\" height=\"" + num(y1 - y0) + "\" fill=\"" + ramp_color(t) + "\"/>\n");
  }
  w.raw("</g>\n");
  // Colour bar.
  w.raw("<g id=\"colorbar\">\n");
  constexpr int kSteps = 40;
  const double bar_top = PlotFrame::top, bar_h = (PlotFrame::bottom - PlotFrame::top) / kSteps;
  for (int i = 0; i < kSteps; ++i) {
    const double t = 1.0 - (i + 0.5) / kSteps;
    w.raw("<rect x=\"" + num(PlotFrame::right + 20) + "\" y=\"" + num(bar_top + i * bar_h) +
          "\" width=\"20\" height=\"" + num(bar_h) + "\" fill=\"" + ramp_color(t) + "\"/>\n");
  }
  w.text(PlotFrame::right + 46, bar_top + 10, num(hi));
  w.text(PlotFrame::right + 46, PlotFrame::bottom, num(lo));
  w.text(PlotFrame::right + 20, PlotFrame::bottom + 22, std::string(to_string(g.stat)));
  w.raw("</g>\n");
  w.axes(label(qa_x ? g.y_axis : g.x_axis), label(Measure::Qa));
}

}  // namespace

std::string render_figure(FigureKind kind, const FigureData& data, const FigureMeta& meta) {
  const PlotFrame frame = figure_frame(kind, data);
  SvgWriter w(frame);
  w.raw("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
  w.raw("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"600\" "
        "viewBox=\"0 0 800 600\">\n");
  std::string meta_line = "<!-- kind=" + std::string(to_string(kind));
  if (is_heat(kind)) {
    const auto& g = grid_of(data);
    meta_line += " x=" + std::string(to_string(g.x_axis)) + " y=" + std::string(to_string(g.y_axis)) +
                 " stat=" + std::string(to_string(g.stat));
  }
  meta_line += " eta=" + format_fixed(meta.eta) + " p0=" + format_fixed(meta.p0) +
               " step=" + format_fixed(meta.step) + " mesh=" + std::to_string(meta.mesh) +
               " x_range=" + format_fixed(frame.x_min) + ":" + format_fixed(frame.x_max) +
               " y_range=" + format_fixed(frame.y_min) + ":" + format_fixed(frame.y_max) + " -->\n";
  w.raw(meta_line);
  w.raw("<rect width=\"800\" height=\"600\" fill=\"#ffffff\"/>\n");
  if (is_toy(kind)) {
    toy_body(w, kind, std::get<std::vector<ToyDetectionPoint>>(data));
  } else if (is_heat(kind)) {
    heat_body(w, frame, grid_of(data));
  } else {
    scatter_body(w, frame, kind, std::get<ScatterData>(data));
  }
  w.raw("</svg>\n");
  return std::move(w.str());
}

}  // namespace qillum
