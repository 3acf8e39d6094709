#pragma once

#include "wvguard/geometry.hpp"
#include "wvguard/guarding.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace wvg
{

/// Outcome of cutting away the pockets behind concave angles at u and v.
struct PreprocessResult
{
    /// The reduced polygon; always strict.
    Polygon reduced;
    /// Original indices of u (0) and/or v (n-1), one per cut side.
    GuardSet forced_guards;
    /// First boundary point on the x-axis after u (clockwise) / before v.
    std::optional<Point> cut_a;
    std::optional<Point> cut_b;
    /// Original vertex indices strictly between u and w_a, and strictly between w_b and v.
    std::vector<std::size_t> removed_after_u;
    std::vector<std::size_t> removed_before_v;
    /// reduced vertex index -> original vertex index.
    std::vector<std::size_t> index_map;

    [[nodiscard]] GuardSet to_original(const GuardSet& reduced_guards) const;
};

/// Requires a simple polygon weakly visible from its base edge; throws
/// NotWeaklyVisible otherwise and DegenerateCut when a cut would collapse it.
[[nodiscard]] PreprocessResult preprocess_concave_endpoints(const Polygon& raw);

enum class WitnessKind
{
    EdgeEndpoint,
    Event,
    GapMidpoint,
};

struct WitnessProvenance
{
    WitnessKind kind = WitnessKind::Event;
    /// Vertices whose visible interval on this edge begins or ends here.
    std::vector<std::size_t> sources;
};

struct WitnessSet
{
    std::vector<BoundaryPoint> points;
    std::vector<WitnessProvenance> provenance;
};

/// Every edge's witnesses are its visibility events (endpoints of the visible
/// intervals of every vertex, plus 0 and 1) and the midpoint of each gap between
/// consecutive events. The set of vertices seeing a point is constant on each open
/// gap, so covering the witnesses covers the whole edge.
[[nodiscard]] WitnessSet generate_witnesses(const Polygon& polygon, bool include_base_edge = true);

/// Construction bound: edges * (2 n (n + 1) + 1).
[[nodiscard]] std::size_t witness_bound(const Polygon& polygon, bool include_base_edge = true);

struct GuardPipelineResult
{
    /// Original vertex indices.
    GuardSet guards;
    PreprocessResult preprocess;
    LocalSearchResult search;
    std::optional<WitnessSet> witnesses;
};

/// Preprocess, then local search on the reduced polygon's vertices; forced guards added back.
[[nodiscard]] GuardPipelineResult guard_vertices(const Polygon& raw, const LocalSearchConfig& config);

/// Preprocess, witnesses on the reduced polygon, local search over witnesses and
/// vertices, map back and add the forced guards.
[[nodiscard]] GuardPipelineResult guard_boundary(const Polygon& raw, const LocalSearchConfig& config);

} // namespace wvg
