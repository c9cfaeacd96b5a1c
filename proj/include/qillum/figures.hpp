#pragma once

// SVG 1.1 figures on a fixed 800 x 600 canvas. Heat-map cells are coloured
// by linear interpolation between five stops
//   #440154, #3b528b, #21918c, #5ec962, #fde725
// over the [min, max] range of the cell values. Output is a pure function
// of the inputs.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qillum/illumination.hpp"
#include "qillum/sweep.hpp"

namespace qillum {

enum class FigureKind { Fig1, Fig2, Fig3b, Fig4a, Fig4b, Fig5, Fig6, Fig7 };

std::string_view to_string(FigureKind k);
std::optional<FigureKind> parse_figure_kind(std::string_view name);

/// Records with optional family curves for the scatter kinds.
struct ScatterData {
  std::vector<AdvantageRecord> records;
  std::vector<BoundCurve> curves;
};

using FigureData = std::variant<std::vector<ToyDetectionPoint>, ScatterData, ClusterGrid>;

struct FigureMeta {
  double eta = 0.5;
  double p0 = 0.5;
  double step = 0.025;
  int mesh = 80;
};

/// Data-to-pixel map of the plot area.
struct PlotFrame {
  double x_min = 0.0, x_max = 1.0;
  double y_min = 0.0, y_max = 1.0;
  static constexpr double left = 90.0, right = 700.0, top = 40.0, bottom = 530.0;

  double px(double x) const { return left + (x - x_min) / (x_max - x_min) * (right - left); }
  double py(double y) const { return bottom - (y - y_min) / (y_max - y_min) * (bottom - top); }
  double data_x(double px_) const { return x_min + (px_ - left) / (right - left) * (x_max - x_min); }
  double data_y(double py_) const { return y_min + (bottom - py_) / (bottom - top) * (y_max - y_min); }
};

/// Throws UsageError when the data does not fit the kind: toy curves for
/// fig1/fig2, records for fig3b/fig4a/fig4b (fig4b entangled only), and a
/// cluster grid with the kind's axes and statistic for fig5 (qa-discord,
/// max-eof), fig6 (qa-eof, min-discord) and fig7 (qa-eof, max-discord).
void check_figure_data(FigureKind kind, const FigureData& data);

PlotFrame figure_frame(FigureKind kind, const FigureData& data);

std::string render_figure(FigureKind kind, const FigureData& data, const FigureMeta& meta);

/// Ramp colour for t in [0, 1] as "#rrggbb".
std::string ramp_color(double t);

}  // namespace qillum
