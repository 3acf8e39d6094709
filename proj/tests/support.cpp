#include "support.hpp"

#include <algorithm>

namespace wvg::test
{

Point pt(long x, long y)
{
    return {Rational(x), Rational(y)};
}

std::vector<Point> pts(std::initializer_list<std::pair<long, long>> coords)
{
    std::vector<Point> out;
    for (const auto& [x, y] : coords)
        out.push_back(pt(x, y));
    return out;
}

Polygon poly(std::initializer_list<std::pair<long, long>> coords, bool relaxed)
{
    return Polygon::from_normalized(pts(coords), relaxed);
}

Polygon square()
{
    return poly({{0, 0}, {0, 2}, {2, 2}, {2, 0}});
}

Polygon convex(std::size_t n)
{
    // Points (i, i (n-1-i)) on a downward parabola; the last one closes the base.
    std::vector<Point> v;
    const long m = static_cast<long>(n) - 1;
    for (long i = 0; i <= m; ++i)
        v.push_back(pt(i, i * (m - i)));
    return Polygon::from_normalized(std::move(v));
}

Polygon notched()
{
    return poly({{0, 0}, {2, 4}, {3, 1}, {4, 4}, {6, 0}});
}

namespace
{

Rational cross3(const Point& o, const Point& a, const Point& b)
{
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_closed_segment(const Point& p, const Point& a, const Point& b)
{
    if (cross3(a, b, p) != 0)
        return false;
    return (p.x - a.x) * (p.x - b.x) <= 0 && (p.y - a.y) * (p.y - b.y) <= 0;
}

} // namespace

bool oracle_inside_or_on(const Point& p, const Polygon& polygon)
{
    const auto& v = polygon.vertices();
    const std::size_t n = v.size();
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++)
    {
        if (on_closed_segment(p, v[j], v[i]))
            return true;
        if ((v[i].y > p.y) != (v[j].y > p.y))
        {
            const Rational x = v[j].x + (p.y - v[j].y) * (v[i].x - v[j].x) / (v[i].y - v[j].y);
            if (p.x < x)
                inside = !inside;
        }
    }
    return inside;
}

bool oracle_sees(const Point& a, const Point& b, const Polygon& polygon, int samples)
{
    std::vector<Rational> ts;
    for (int s = 0; s <= samples; ++s)
        ts.push_back(make_rational(s, samples));
    // Points of ab just beside each vertex lying on it: grazing contacts are where a
    // uniform grid is most likely to step over a thin exterior sliver.
    for (const Point& w : polygon.vertices())
    {
        if (a == b || cross3(a, b, w) != 0 || !on_closed_segment(w, a, b))
            continue;
        const Rational t = a.x != b.x ? (w.x - a.x) / (b.x - a.x) : (w.y - a.y) / (b.y - a.y);
        for (const Rational& d : {Rational(0), make_rational(1, 100000), make_rational(-1, 100000)})
            if (t + d >= 0 && t + d <= 1)
                ts.push_back(t + d);
    }
    for (const Rational& t : ts)
    {
        const Point p{a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
        if (!oracle_inside_or_on(p, polygon))
            return false;
    }
    return true;
}

GeneralParams corpus_params(std::size_t index, std::size_t n)
{
    GeneralParams p;
    switch (index % 3)
    {
    case 0:
        break;
    case 1:
        p.terrain.max_height = 4;
        p.terrain.arch = static_cast<long>(n) * 2 / 3;
        break;
    default:
        p.terrain.max_height = 3;
        p.terrain.arch = static_cast<long>(2 * n);
        break;
    }
    return p;
}

namespace
{

std::vector<CorpusEntry> build(std::size_t count, std::size_t n_min, std::size_t n_max, int concave,
                               std::uint64_t seed)
{
    std::vector<CorpusEntry> out;
    for (std::size_t i = 0; i < count; ++i)
    {
        const std::size_t n = n_min + i % (n_max - n_min + 1);
        GeneralParams p = corpus_params(i, n);
        p.concave_u = concave >= 1;
        p.concave_v = concave >= 2;
        const std::uint64_t s = seed * 1000003 + i;
        out.push_back({"n" + std::to_string(n) + "-s" + std::to_string(s), generate_weakly_visible_polygon(n, s, p)});
    }
    return out;
}

} // namespace

std::vector<CorpusEntry> corpus(std::size_t count, std::size_t n_min, std::size_t n_max, std::uint64_t seed)
{
    return build(count, n_min, n_max, 0, seed);
}

std::vector<CorpusEntry> concave_corpus(std::size_t count, std::size_t n_min, std::size_t n_max, bool both,
                                        std::uint64_t seed)
{
    return build(count, n_min, n_max, both ? 2 : 1, seed);
}

bool oracle_covers_vertices(const std::vector<std::size_t>& guards, const Polygon& polygon)
{
    for (std::size_t w = 0; w < polygon.size(); ++w)
    {
        const bool seen = std::any_of(guards.begin(), guards.end(), [&](std::size_t g) {
            return oracle_sees(polygon.vertex(g), polygon.vertex(w), polygon, 400);
        });
        if (!seen)
            return false;
    }
    return true;
}

} // namespace wvg::test
