#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclekit/cycle.hpp"

namespace cyclekit {

struct Viewport {
    double xmin = -3, xmax = 3, ymin = -3, ymax = 3;

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
};

struct Style {
    std::string color = "#1a1a1a";
    double width = 1.2;
    bool dashed = false;
};

/// One drawable element of a scene.
struct SceneElement {
    enum class Kind { cycle, point, orbit, zero_radius, ghost_of, s_ghost_of };

    Kind kind = Kind::cycle;
    std::string name;    // optional label; referenced by ghost elements
    std::string target;  // for ghost_of / s_ghost_of
    Cycle cycle;         // for Kind::cycle
    Point point;         // for point / orbit / zero_radius
    int orbit_count = 0; // 0: use scene samples
    Style style;
};

/// Declarative description of one figure.
struct Scene {
    Sigma sigma = kElliptic;
    Sigma sigma_breve = kElliptic;
    double s = 1.0;
    Viewport viewport;
    int samples = 256;
    int width_px = 640;
    int height_px = 640;
    std::vector<SceneElement> elements;

    FsccParams params() const { return FsccParams(sigma_breve, s); }
};

/// Parses the line-oriented scene format (see docs/scene_format.md).
Scene parse_scene(const std::string& text);

/// Polyline pieces of the sigma-drawing of a cycle, clipped around the
/// viewport; branches and asymptote-separated arcs come as separate pieces.
std::vector<std::vector<Point>> sample_cycle_curve(const Cycle& c, Sigma sigma,
                                                   const Viewport& vp, int samples);

/// Deterministic SVG document: fixed element order, six decimals.
std::string render(const Scene& scene);

/// Conic type from a least-squares fit of a general conic through the points.
/// Returns -1 / 0 / +1 for ellipse / parabola / hyperbola; `residual` gets the
/// relative fit residual.
int classify_conic(const std::vector<Point>& pts, double* residual);

/// 3x3 panel: the zero-radius cycle at p for each cycle-space unit (rows)
/// drawn in each point-space unit (columns). Deterministic like render().
std::string render_zero_radius_grid(const Point& p, int panel_px = 240);

}  // namespace cyclekit
