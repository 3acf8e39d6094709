#pragma once

#include "wvguard/diagnostics.hpp"
#include "wvguard/geometry.hpp"
#include "wvguard/guarding.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wvg
{

struct SvgOverlays
{
    std::optional<GuardSet> guards;
    std::optional<std::vector<BoundaryPoint>> witnesses;
    /// Draws A1/A2 on the polygon and a second panel with the circle embedding:
    /// A1 ∪ E1 as chords inside the circle, A2 ∪ E2 as arcs outside it.
    std::optional<ExchangeGraph> exchange;
    std::optional<GuardSet> red;
    std::optional<GuardSet> blue;
};

/// Deterministic SVG document; identical inputs give byte-identical output.
[[nodiscard]] std::string render_svg(const Polygon& polygon, const SvgOverlays& overlays = {});

} // namespace wvg
