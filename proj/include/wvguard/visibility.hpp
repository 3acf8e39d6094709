#pragma once

#include "wvguard/geometry.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <vector>

namespace wvg
{

/// Closed-region visibility: true iff the closed segment ab lies in the closed
/// polygon region. Grazing reflex vertices and running along edges both count.
/// Throws PointOutsidePolygon if either endpoint is outside.
[[nodiscard]] bool sees(const Point& a, const Point& b, const Polygon& polygon);

/// Same predicate without the endpoint containment check. Callers must pass points
/// known to lie in the closed region (vertices, boundary points).
[[nodiscard]] bool sees_unchecked(const Point& a, const Point& b, const Polygon& polygon);

/// Symmetric, reflexive adjacency over polygon vertices.
class VisibilityGraph
{
public:
    explicit VisibilityGraph(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept { return rows_.size(); }
    [[nodiscard]] bool adjacent(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    /// Vertices seen by i, as a bitset over vertex indices.
    [[nodiscard]] const boost::dynamic_bitset<>& row(std::size_t i) const { return rows_[i]; }
    void connect(std::size_t i, std::size_t j);

    friend bool operator==(const VisibilityGraph& a, const VisibilityGraph& b) { return a.rows_ == b.rows_; }

private:
    std::vector<boost::dynamic_bitset<>> rows_;
};

[[nodiscard]] VisibilityGraph visibility_graph(const Polygon& polygon);

/// Closed parameter interval [lo, hi] on a target segment; lo == hi for grazing points.
struct ParamInterval
{
    Rational lo;
    Rational hi;

    friend bool operator==(const ParamInterval& a, const ParamInterval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

struct VisibleIntervalSet
{
    Point source;
    Segment target;
    /// Sorted, pairwise disjoint, each non-empty.
    std::vector<ParamInterval> intervals;

    [[nodiscard]] bool empty() const noexcept { return intervals.empty(); }
    [[nodiscard]] bool contains(const Rational& t) const;
};

/// Parameters along target where visibility from source can change: 0, 1, and the
/// intersections of the target line with every line through source and a polygon
/// vertex. Sorted and deduplicated.
[[nodiscard]] std::vector<Rational> visibility_events(const Point& source, const Segment& target,
                                                      const Polygon& polygon);

/// Exactly { t in [0,1] : sees(source, target.at(t)) } as closed intervals.
/// target must be an edge of the polygon or a sub-segment of the base edge.
[[nodiscard]] VisibleIntervalSet visible_interval(const Point& source, const Segment& target,
                                                  const Polygon& polygon);

/// Whether source sees at least one point of target. Stops at the first witness.
[[nodiscard]] bool sees_any(const Point& source, const Segment& target, const Polygon& polygon);

} // namespace wvg
