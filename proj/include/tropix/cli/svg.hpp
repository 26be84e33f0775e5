#pragma once

#include "tropix/cli/scenario.hpp"
#include "tropix/intersect.hpp"

#include <string>
#include <vector>

namespace tropix::cli {

struct PlotCurve {
    std::string name;
    std::string color;
    TropicalHypersurface hypersurface;
};

struct PlotInput {
    std::optional<PlotWindow> window;
    CompactifiedPolyhedron pbar;
    std::vector<PlotCurve> curves;
    /// Stable intersection points, drawn with their multiplicities.
    IntersectionReport intersection;
    /// Drawn as window-edge markers for its pieces at infinity.
    std::optional<CompactifiedSet> prevariety;
};

/// Window used when the scenario does not fix one: every vertex and
/// intersection point plus a margin of 4.
PlotWindow default_window(const PlotInput& in);

/// Plain SVG 1.1; identical input gives identical bytes.
std::string render_svg(const PlotInput& in);

} // namespace tropix::cli
