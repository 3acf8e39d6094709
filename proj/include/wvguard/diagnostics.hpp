#pragma once

#include "wvguard/geometry.hpp"
#include "wvguard/guarding.hpp"
#include "wvguard/visibility.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace wvg
{

enum class Color
{
    None,
    Red,
    Blue,
};

/// Red = an optimal guard set R, blue = the local-search output B. The common part
/// is stripped: red() = R \ B and blue() = B \ R. Vertices seen by a common guard
/// need no exchange-graph support and are exempt from the locality check.
class ColoredSets
{
public:
    ColoredSets(const GuardSet& red, const GuardSet& blue);

    [[nodiscard]] const GuardSet& red() const noexcept { return red_; }
    [[nodiscard]] const GuardSet& blue() const noexcept { return blue_; }
    [[nodiscard]] const GuardSet& common() const noexcept { return common_; }
    [[nodiscard]] const GuardSet& original_red() const noexcept { return original_red_; }
    [[nodiscard]] const GuardSet& original_blue() const noexcept { return original_blue_; }
    /// red() ∪ blue(), the exchange-graph nodes.
    [[nodiscard]] const GuardSet& nodes() const noexcept { return nodes_; }
    [[nodiscard]] Color color(std::size_t vertex) const;
    [[nodiscard]] bool degenerate() const noexcept { return red_.empty() || blue_.empty(); }

private:
    GuardSet original_red_;
    GuardSet original_blue_;
    GuardSet red_;
    GuardSet blue_;
    GuardSet common_;
    GuardSet nodes_;
};

/// lambda(w): earliest node in boundary order that precedes w and sees it.
/// rho(w): latest node that succeeds w and sees it.
struct LambdaRhoMaps
{
    std::vector<std::optional<std::size_t>> lambda;
    std::vector<std::optional<std::size_t>> rho;
};

/// Throws NotCovering unless the unstripped R and B each cover every vertex.
[[nodiscard]] LambdaRhoMaps compute_lambda_rho(const VisibilityGraph& visibility, const ColoredSets& colors);
[[nodiscard]] LambdaRhoMaps compute_lambda_rho(const Polygon& polygon, const ColoredSets& colors);

/// A segment between two vertices, from < to in boundary order.
struct Chord
{
    std::size_t from = 0;
    std::size_t to = 0;

    friend bool operator==(const Chord& a, const Chord& b) { return a.from == b.from && a.to == b.to; }
};

/// Exchange-graph edge stored as (red node, blue node).
using ColoredEdge = std::pair<std::size_t, std::size_t>;

struct ChordFamily
{
    std::vector<Chord> segments;
    std::vector<ColoredEdge> edges;
};

/// A1 = {lambda(w) w} and E1. The fan edge of a node x goes to the innermost A1
/// interval strictly containing x. Throws LaminarityViolation if two A1 intervals
/// interleave.
[[nodiscard]] ChordFamily build_a1_e1(const ColoredSets& colors, const LambdaRhoMaps& maps);
/// Mirror image with rho: A2 = {w rho(w)} and E2.
[[nodiscard]] ChordFamily build_a2_e2(const ColoredSets& colors, const LambdaRhoMaps& maps);
/// (lambda(x), rho(x)) for every non-node x whose two maps have different colors.
[[nodiscard]] std::vector<ColoredEdge> build_e3(const ColoredSets& colors, const LambdaRhoMaps& maps);

struct ExchangeGraph
{
    std::vector<std::size_t> nodes;
    std::vector<Chord> a1;
    std::vector<Chord> a2;
    std::vector<ColoredEdge> e1;
    std::vector<ColoredEdge> e2;
    std::vector<ColoredEdge> e3;

    /// E1 ∪ E2 ∪ E3, sorted and deduplicated.
    [[nodiscard]] std::vector<ColoredEdge> edges() const;
};

[[nodiscard]] ExchangeGraph build_exchange_graph(const ColoredSets& colors, const LambdaRhoMaps& maps);

/// The first pair of interleaving intervals (a1 < a2 < b1 < b2), if any.
[[nodiscard]] std::optional<std::pair<Chord, Chord>> find_interleaving(const std::vector<Chord>& chords);

struct NonCrossingVerdict
{
    bool holds = true;
    bool laminar = true;
    std::optional<std::pair<Chord, Chord>> offending;
};

/// Geometric: no two chords cross transversally. Combinatorial: intervals laminar.
[[nodiscard]] NonCrossingVerdict check_non_crossing(const Polygon& polygon, const std::vector<Chord>& chords);

struct SimpleGraph
{
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

struct PlanarityVerdict
{
    bool planar = true;
    /// Kuratowski subgraph edges when non-planar.
    std::vector<std::pair<std::size_t, std::size_t>> witness;
};

[[nodiscard]] PlanarityVerdict check_planarity(const SimpleGraph& graph);
/// Witness edges are reported in polygon vertex indices.
[[nodiscard]] PlanarityVerdict check_planarity(const ExchangeGraph& graph);

struct LocalityVerdict
{
    bool holds = true;
    std::optional<std::size_t> violated_at;
    /// Vertices skipped because a common guard sees them.
    std::size_t exempt = 0;
};

/// Every non-exempt vertex w is seen by some red r and blue b with (r, b) in edges.
[[nodiscard]] LocalityVerdict check_locality(const VisibilityGraph& visibility, const ColoredSets& colors,
                                             const std::vector<ColoredEdge>& edges);

struct Quadruple
{
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t c = 0;
    std::size_t d = 0;

    friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

struct OrderClaimVerdict
{
    bool holds = true;
    std::optional<Quadruple> counterexample;
    bool exhaustive = false;
    /// Quadruples with a sees c and b sees d that were examined.
    std::uint64_t premises = 0;
};

/// Vertex quadruples a < b < c < d with sees(a,c) and sees(b,d) must have sees(a,d).
/// Exhaustive when C(n,4) <= trials, otherwise `trials` random quadruples.
[[nodiscard]] OrderClaimVerdict check_order_claim(const VisibilityGraph& visibility, std::uint64_t trials,
                                                  std::uint64_t seed);
[[nodiscard]] OrderClaimVerdict check_order_claim(const Polygon& polygon, std::uint64_t trials, std::uint64_t seed);

inline constexpr std::uint64_t default_order_claim_trials = 1U << 20;

struct DiagnosticsReport
{
    GuardSet red;
    GuardSet blue;
    GuardSet common;
    bool degenerate = false;
    LambdaRhoMaps maps;
    ExchangeGraph graph;
    bool bipartite = true;
    NonCrossingVerdict a1;
    NonCrossingVerdict a2;
    PlanarityVerdict planarity;
    LocalityVerdict locality;
    OrderClaimVerdict order_claim;

    [[nodiscard]] bool all_passed() const;
};

/// Builds every proof object for (R, B) on a strict polygon and runs every check.
[[nodiscard]] DiagnosticsReport diagnose(const Polygon& polygon, const GuardSet& red, const GuardSet& blue,
                                         std::uint64_t order_claim_trials = default_order_claim_trials,
                                         std::uint64_t seed = 0);

} // namespace wvg
