#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace wvg
{

/// Exact coordinate. mpq_class keeps values in canonical reduced form after every
/// arithmetic operation, so equality is structural.
using Rational = mpq_class;

/// num / den in canonical form; den must be nonzero.
[[nodiscard]] Rational make_rational(long num, long den);

struct Point
{
    Rational x;
    Rational y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

/// Lexicographic (x, then y). Only used for deterministic sorting.
bool lex_less(const Point& a, const Point& b);

std::ostream& operator<<(std::ostream& os, const Point& p);

struct Segment
{
    Point a;
    Point b;

    /// a + t (b - a)
    [[nodiscard]] Point at(const Rational& t) const;
};

enum class Orientation
{
    Clockwise,
    Counterclockwise,
    Collinear,
};

/// Sign of the exact determinant of (q - p, r - p).
[[nodiscard]] Orientation orientation(const Point& p, const Point& q, const Point& r);
[[nodiscard]] int orientation_sign(const Point& p, const Point& q, const Point& r);

/// r lies on the closed segment pq.
[[nodiscard]] bool on_segment(const Point& p, const Point& q, const Point& r);

/// Closed segments share at least one point.
[[nodiscard]] bool segments_intersect(const Segment& s1, const Segment& s2);

/// The closed segments share a point interior to both (includes collinear overlap).
[[nodiscard]] bool segments_properly_cross(const Segment& s1, const Segment& s2);

/// Interiors meet in exactly one point and the segments are not collinear.
[[nodiscard]] bool segments_cross_transversally(const Segment& s1, const Segment& s2);

/// Simple polygon with a distinguished base edge e = (u, v) on the x-axis.
///
/// Vertices are in clockwise order starting at u = v[0] and ending at v = v[n-1];
/// edge i runs from v[i] to v[(i+1) % n], so the closing edge n-1 is the base edge
/// traversed from v back to u. u = (0, 0) and v lies on the positive x-axis.
///
/// A strict polygon additionally has every non-base vertex strictly above the
/// x-axis, which is equivalent to convex angles at u and v for the weakly-visible
/// inputs we deal with. Relaxed polygons (possibly concave at u or v) exist only as
/// input to the concave-endpoint preprocessing.
class Polygon
{
public:
    /// Validates every invariant; throws Error on violation.
    static Polygon from_normalized(std::vector<Point> vertices, bool allow_concave_endpoints = false);

    [[nodiscard]] std::size_t size() const noexcept { return vertices_.size(); }
    [[nodiscard]] const std::vector<Point>& vertices() const noexcept { return vertices_; }
    [[nodiscard]] const Point& vertex(std::size_t i) const { return vertices_[i]; }
    [[nodiscard]] Segment edge(std::size_t i) const;
    [[nodiscard]] std::size_t base_edge_index() const noexcept { return vertices_.size() - 1; }
    /// The base edge parameterized from u (t = 0) to v (t = 1).
    [[nodiscard]] Segment base_segment() const { return {vertices_.front(), vertices_.back()}; }
    [[nodiscard]] const Point& u() const { return vertices_.front(); }
    [[nodiscard]] const Point& v() const { return vertices_.back(); }
    [[nodiscard]] bool concave_at_u() const;
    [[nodiscard]] bool concave_at_v() const;
    /// Every non-base vertex strictly above the x-axis.
    [[nodiscard]] bool strict() const noexcept { return strict_; }

    friend bool operator==(const Polygon& a, const Polygon& b) { return a.vertices_ == b.vertices_; }

private:
    Polygon(std::vector<Point> vertices, bool strict) : vertices_(std::move(vertices)), strict_(strict) {}

    std::vector<Point> vertices_;
    bool strict_ = true;
};

struct NormalizeOptions
{
    bool allow_concave_endpoints = false;
};

/// Places the base edge on the x-axis with the polygon above it and relists the
/// vertices clockwise from u. Base edges parallel to an axis get a rigid motion;
/// any other direction (dx, dy) uses the similarity
/// (x, y) -> (dx x + dy y, -dy x + dx y), which stays in the rationals and scales by |e|.
///
/// base_edge names two cyclically adjacent indices into raw.
[[nodiscard]] Polygon normalize(const std::vector<Point>& raw, std::pair<std::size_t, std::size_t> base_edge,
                                NormalizeOptions options = {});

/// True iff no two non-adjacent edges meet and adjacent edges share only their endpoint.
[[nodiscard]] bool is_simple(const std::vector<Point>& ring);

/// Twice the signed area; positive for counterclockwise rings.
[[nodiscard]] Rational signed_area2(const std::vector<Point>& ring);

enum class Location
{
    Inside,
    Boundary,
    Outside,
};

[[nodiscard]] Location locate(const Point& p, const Polygon& polygon);

/// A point on the boundary as (edge index, parameter along that edge).
///
/// Canonical form never has t == 1: the end of edge i is stored as the start of
/// edge i + 1 (and the end of the base edge as u = (0, 0)).
struct BoundaryPoint
{
    std::size_t edge = 0;
    Rational t;

    static BoundaryPoint vertex(std::size_t index) { return {index, Rational(0)}; }

    [[nodiscard]] BoundaryPoint canonical(const Polygon& polygon) const;
    [[nodiscard]] Point position(const Polygon& polygon) const;
    [[nodiscard]] bool is_vertex() const { return t == 0; }

    friend bool operator==(const BoundaryPoint& a, const BoundaryPoint& b) { return a.edge == b.edge && a.t == b.t; }
};

/// Order key of canonical boundary points; walking clockwise from u visits them in
/// increasing key order.
[[nodiscard]] bool boundary_less(const BoundaryPoint& a, const BoundaryPoint& b);

/// a is reached strictly before b when walking the boundary clockwise from u.
/// Throws EqualPoints when both denote the same point.
[[nodiscard]] bool precedes(const BoundaryPoint& a, const BoundaryPoint& b, const Polygon& polygon);

/// Exact conversion for rendering and reporting only; never used in predicates.
[[nodiscard]] double to_double(const Rational& r);

/// "p/q" with q > 0; integers still carry "/1".
[[nodiscard]] std::string to_fraction_string(const Rational& r);

} // namespace wvg
