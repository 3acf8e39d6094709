#include "wvguard/geometry.hpp"

#include "wvguard/error.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace wvg
{

Rational make_rational(long num, long den)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    Rational r{mpz_class(num), mpz_class(den)};
    r.canonicalize();
    return r;
}

bool lex_less(const Point& a, const Point& b)
{
    if (a.x != b.x)
        return a.x < b.x;
    return a.y < b.y;
}

std::ostream& operator<<(std::ostream& os, const Point& p)
{
    return os << '(' << to_fraction_string(p.x) << ", " << to_fraction_string(p.y) << ')';
}

Point Segment::at(const Rational& t) const
{
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

namespace
{

// Relative error below 3 ulps. Overflow yields inf or nan, which disables the filter.
double approx(const Rational& v)
{
    if (mpz_cmp_ui(v.get_den_mpz_t(), 1) == 0)
        return mpz_get_d(v.get_num_mpz_t());
    return mpz_get_d(v.get_num_mpz_t()) / mpz_get_d(v.get_den_mpz_t());
}

} // namespace

int orientation_sign(const Point& p, const Point& q, const Point& r)
{
    // Floating-point filter. With inputs within 3 ulps, the computed determinant is
    // within 64 M^2 2^-52 of the true one (M = largest magnitude).
    const double px = approx(p.x), py = approx(p.y);
    const double qx = approx(q.x), qy = approx(q.y);
    const double rx = approx(r.x), ry = approx(r.y);
    const double m = std::max({std::fabs(px), std::fabs(py), std::fabs(qx), std::fabs(qy), std::fabs(rx),
                               std::fabs(ry)});
    if (m > 1e-100 && m < 1e100)
    {
        const double approx = (qx - px) * (ry - py) - (qy - py) * (rx - px);
        const double bound = m * m * 1e-13;
        if (approx > bound)
            return 1;
        if (approx < -bound)
            return -1;
    }
    const Rational det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sgn(det);
}

Orientation orientation(const Point& p, const Point& q, const Point& r)
{
    const int s = orientation_sign(p, q, r);
    if (s > 0)
        return Orientation::Counterclockwise;
    if (s < 0)
        return Orientation::Clockwise;
    return Orientation::Collinear;
}

bool on_segment(const Point& p, const Point& q, const Point& r)
{
    if (orientation_sign(p, q, r) != 0)
        return false;
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
           r.y <= std::max(p.y, q.y);
}

bool segments_intersect(const Segment& s1, const Segment& s2)
{
    const int o1 = orientation_sign(s1.a, s1.b, s2.a);
    const int o2 = orientation_sign(s1.a, s1.b, s2.b);
    const int o3 = orientation_sign(s2.a, s2.b, s1.a);
    const int o4 = orientation_sign(s2.a, s2.b, s1.b);
    if (o1 * o2 < 0 && o3 * o4 < 0)
        return true;
    return on_segment(s1.a, s1.b, s2.a) || on_segment(s1.a, s1.b, s2.b) || on_segment(s2.a, s2.b, s1.a) ||
           on_segment(s2.a, s2.b, s1.b);
}

bool segments_cross_transversally(const Segment& s1, const Segment& s2)
{
    const int o1 = orientation_sign(s1.a, s1.b, s2.a);
    const int o2 = orientation_sign(s1.a, s1.b, s2.b);
    const int o3 = orientation_sign(s2.a, s2.b, s1.a);
    const int o4 = orientation_sign(s2.a, s2.b, s1.b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

namespace
{

// Parameter of r along p->q, for r collinear with the segment.
Rational collinear_param(const Point& p, const Point& q, const Point& r)
{
    if (p.x != q.x)
        return (r.x - p.x) / (q.x - p.x);
    return (r.y - p.y) / (q.y - p.y);
}

} // namespace

bool segments_properly_cross(const Segment& s1, const Segment& s2)
{
    if (segments_cross_transversally(s1, s2))
        return true;
    if (s1.a == s1.b || s2.a == s2.b)
        return false;
    if (orientation_sign(s1.a, s1.b, s2.a) != 0 || orientation_sign(s1.a, s1.b, s2.b) != 0)
    {
        // Touching configurations: one endpoint lies in the interior of the other segment
        // while the segments are not collinear. The shared point is then an endpoint of
        // one of them, so it is not interior to both.
        return false;
    }
    // Collinear: interiors overlap iff the parameter ranges overlap in more than a point.
    Rational t0 = collinear_param(s1.a, s1.b, s2.a);
    Rational t1 = collinear_param(s1.a, s1.b, s2.b);
    if (t0 > t1)
        std::swap(t0, t1);
    const Rational lo = std::max(t0, Rational(0));
    const Rational hi = std::min(t1, Rational(1));
    return lo < hi;
}

Rational signed_area2(const std::vector<Point>& ring)
{
    Rational area = 0;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i)
    {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        area += a.x * b.y - b.x * a.y;
    }
    return area;
}

bool is_simple(const std::vector<Point>& ring)
{
    const std::size_t n = ring.size();
    if (n < 3)
        return false;
    for (std::size_t i = 0; i < n; ++i)
    {
        const Segment ei{ring[i], ring[(i + 1) % n]};
        if (ei.a == ei.b)
            return false;
        for (std::size_t j = i + 1; j < n; ++j)
        {
            const Segment ej{ring[j], ring[(j + 1) % n]};
            const bool adjacent_after = (j == i + 1);
            const bool adjacent_before = (i == 0 && j == n - 1);
            if (adjacent_after || adjacent_before)
            {
                // Shared vertex only: the far endpoint of each must stay off the other.
                const Point& far_i = adjacent_after ? ei.a : ei.b;
                const Point& far_j = adjacent_after ? ej.b : ej.a;
                if (on_segment(ei.a, ei.b, far_j) || on_segment(ej.a, ej.b, far_i))
                    return false;
                continue;
            }
            if (segments_intersect(ei, ej))
                return false;
        }
    }
    return true;
}

namespace
{

void require_non_degenerate(const std::vector<Point>& ring)
{
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i)
    {
        const Point& prev = ring[(i + n - 1) % n];
        const Point& next = ring[(i + 1) % n];
        if (orientation_sign(prev, ring[i], next) == 0)
            throw Error(ErrorKind::DegenerateVertex,
                        "vertex " + std::to_string(i) + " is collinear with its neighbours");
    }
}

} // namespace

Segment Polygon::edge(std::size_t i) const
{
    return {vertices_[i], vertices_[(i + 1) % vertices_.size()]};
}

bool Polygon::concave_at_u() const
{
    return vertices_[1].y < 0;
}

bool Polygon::concave_at_v() const
{
    return vertices_[vertices_.size() - 2].y < 0;
}

Polygon Polygon::from_normalized(std::vector<Point> vertices, bool allow_concave_endpoints)
{
    const std::size_t n = vertices.size();
    if (n < 3)
        throw Error(ErrorKind::NotSimple, "a polygon needs at least 3 vertices");
    require_non_degenerate(vertices);
    if (!is_simple(vertices))
        throw Error(ErrorKind::NotSimple, "boundary is not simple");
    if (vertices.front() != Point{0, 0})
        throw Error(ErrorKind::BaseEdgeNotAnEdge, "u must be the origin in a normalized polygon");
    if (vertices.back().y != 0 || vertices.back().x <= 0)
        throw Error(ErrorKind::BaseEdgeNotAnEdge, "v must lie on the positive x-axis");
    if (signed_area2(vertices) >= 0)
        throw Error(ErrorKind::NotSimple, "vertices are not in clockwise order");
    bool strict = true;
    for (std::size_t i = 1; i + 1 < n; ++i)
        strict = strict && vertices[i].y > 0;
    if (!strict && !allow_concave_endpoints)
        throw Error(ErrorKind::ConcaveBaseAngle, "polygon is not contained in the open half plane above its base edge");
    return Polygon(std::move(vertices), strict);
}

Polygon normalize(const std::vector<Point>& raw, std::pair<std::size_t, std::size_t> base_edge,
                  NormalizeOptions options)
{
    const std::size_t n = raw.size();
    if (n < 3)
        throw Error(ErrorKind::NotSimple, "a polygon needs at least 3 vertices");
    auto [i, j] = base_edge;
    if (i >= n || j >= n || i == j || ((i + 1) % n != j && (j + 1) % n != i))
        throw Error(ErrorKind::BaseEdgeNotAnEdge,
                    "(" + std::to_string(i) + ", " + std::to_string(j) + ") is not an edge");
    require_non_degenerate(raw);
    if (!is_simple(raw))
        throw Error(ErrorKind::NotSimple, "boundary is not simple");

    std::vector<Point> ring = raw;
    std::vector<std::size_t> original(n);
    for (std::size_t k = 0; k < n; ++k)
        original[k] = k;
    if (signed_area2(ring) > 0)
    {
        std::reverse(ring.begin(), ring.end());
        std::reverse(original.begin(), original.end());
    }

    // In clockwise order the base edge runs v -> u, so u is whichever endpoint follows the other.
    std::size_t u_pos = n;
    for (std::size_t k = 0; k < n; ++k)
    {
        const std::size_t prev = original[(k + n - 1) % n];
        if ((original[k] == i && prev == j) || (original[k] == j && prev == i))
            u_pos = k;
    }
    std::rotate(ring.begin(), ring.begin() + static_cast<std::ptrdiff_t>(u_pos), ring.end());

    const Point origin = ring.front();
    const Rational dx = ring.back().x - origin.x;
    const Rational dy = ring.back().y - origin.y;
    Rational cx = dx;
    Rational cy = dy;
    if (dy == 0)
        cx = sgn(dx);
    else if (dx == 0)
        cy = sgn(dy);

    std::vector<Point> out;
    out.reserve(n);
    for (const Point& p : ring)
    {
        const Rational x = p.x - origin.x;
        const Rational y = p.y - origin.y;
        out.push_back({cx * x + cy * y, -cy * x + cx * y});
    }
    return Polygon::from_normalized(std::move(out), options.allow_concave_endpoints);
}

Location locate(const Point& p, const Polygon& polygon)
{
    const std::size_t n = polygon.size();
    bool inside = false;
    for (std::size_t k = 0; k < n; ++k)
    {
        const Point& a = polygon.vertex(k);
        const Point& b = polygon.vertex((k + 1) % n);
        if (on_segment(a, b, p))
            return Location::Boundary;
        if ((a.y > p.y) != (b.y > p.y))
        {
            const int s = orientation_sign(a, b, p);
            if ((s > 0) == (b.y > a.y))
                inside = !inside;
        }
    }
    return inside ? Location::Inside : Location::Outside;
}

BoundaryPoint BoundaryPoint::canonical(const Polygon& polygon) const
{
    if (edge >= polygon.size() || t < 0 || t > 1)
        throw std::out_of_range("boundary point outside its edge");
    if (t == 1)
        return {(edge + 1) % polygon.size(), Rational(0)};
    return *this;
}

Point BoundaryPoint::position(const Polygon& polygon) const
{
    return polygon.edge(edge).at(t);
}

bool boundary_less(const BoundaryPoint& a, const BoundaryPoint& b)
{
    if (a.edge != b.edge)
        return a.edge < b.edge;
    return a.t < b.t;
}

bool precedes(const BoundaryPoint& a, const BoundaryPoint& b, const Polygon& polygon)
{
    const BoundaryPoint ca = a.canonical(polygon);
    const BoundaryPoint cb = b.canonical(polygon);
    if (ca == cb)
        throw Error(ErrorKind::EqualPoints, "precedes() needs two distinct boundary points");
    return boundary_less(ca, cb);
}

double to_double(const Rational& r)
{
    return r.get_d();
}

std::string to_fraction_string(const Rational& r)
{
    std::string s = r.get_str();
    if (s.find('/') == std::string::npos)
        s += "/1";
    return s;
}

} // namespace wvg
