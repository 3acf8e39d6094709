#include "wvguard/visibility.hpp"

#include "wvguard/error.hpp"

#include <algorithm>

namespace wvg
{

namespace
{

Rational cross(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by)
{
    return ax * by - ay * bx;
}

// Parameter of a point collinear with p->q.
Rational param_along(const Point& p, const Point& q, const Point& r)
{
    if (p.x != q.x)
        return (r.x - p.x) / (q.x - p.x);
    return (r.y - p.y) / (q.y - p.y);
}

void sort_unique(std::vector<Rational>& values)
{
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
}

} // namespace

bool sees_unchecked(const Point& a, const Point& b, const Polygon& polygon)
{
    if (a == b)
        return true;
    const std::size_t n = polygon.size();

    std::vector<int> side(n);
    for (std::size_t k = 0; k < n; ++k)
        side[k] = orientation_sign(a, b, polygon.vertex(k));

    // Boundary contacts along ab: its endpoints plus every vertex lying on it.
    std::vector<Rational> contacts{Rational(0), Rational(1)};
    for (std::size_t k = 0; k < n; ++k)
    {
        const std::size_t next = (k + 1) % n;
        if (side[k] * side[next] < 0)
        {
            const Point& p = polygon.vertex(k);
            const Point& q = polygon.vertex(next);
            if (orientation_sign(p, q, a) * orientation_sign(p, q, b) < 0)
                return false;
        }
        if (side[k] == 0)
        {
            Rational t = param_along(a, b, polygon.vertex(k));
            if (t > 0 && t < 1)
                contacts.push_back(std::move(t));
        }
    }
    sort_unique(contacts);

    const Segment ab{a, b};
    for (std::size_t k = 0; k + 1 < contacts.size(); ++k)
    {
        const Rational mid = (contacts[k] + contacts[k + 1]) / 2;
        if (locate(ab.at(mid), polygon) == Location::Outside)
            return false;
    }
    return true;
}

bool sees(const Point& a, const Point& b, const Polygon& polygon)
{
    if (locate(a, polygon) == Location::Outside || locate(b, polygon) == Location::Outside)
        throw Error(ErrorKind::PointOutsidePolygon, "visibility query with a point outside the polygon");
    return sees_unchecked(a, b, polygon);
}

VisibilityGraph::VisibilityGraph(std::size_t n) : rows_(n, boost::dynamic_bitset<>(n))
{
    for (std::size_t i = 0; i < n; ++i)
        rows_[i].set(i);
}

void VisibilityGraph::connect(std::size_t i, std::size_t j)
{
    rows_[i].set(j);
    rows_[j].set(i);
}

VisibilityGraph visibility_graph(const Polygon& polygon)
{
    const std::size_t n = polygon.size();
    VisibilityGraph graph(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (sees_unchecked(polygon.vertex(i), polygon.vertex(j), polygon))
                graph.connect(i, j);
    return graph;
}

bool VisibleIntervalSet::contains(const Rational& t) const
{
    return std::any_of(intervals.begin(), intervals.end(),
                       [&](const ParamInterval& iv) { return iv.lo <= t && t <= iv.hi; });
}

std::vector<Rational> visibility_events(const Point& source, const Segment& target, const Polygon& polygon)
{
    const Rational dx = target.b.x - target.a.x;
    const Rational dy = target.b.y - target.a.y;
    const Rational ax = target.a.x - source.x;
    const Rational ay = target.a.y - source.y;

    std::vector<Rational> events{Rational(0), Rational(1)};
    auto add = [&events](Rational t) {
        if (t >= 0 && t <= 1)
            events.push_back(std::move(t));
    };
    if (orientation_sign(target.a, target.b, source) == 0)
        add(param_along(target.a, target.b, source));

    for (const Point& w : polygon.vertices())
    {
        if (w == source)
            continue;
        const Rational rx = w.x - source.x;
        const Rational ry = w.y - source.y;
        const Rational denom = cross(rx, ry, dx, dy);
        if (denom != 0)
            add(cross(ax, ay, rx, ry) / denom);
        else if (orientation_sign(target.a, target.b, w) == 0)
            add(param_along(target.a, target.b, w));
    }
    sort_unique(events);
    return events;
}

VisibleIntervalSet visible_interval(const Point& source, const Segment& target, const Polygon& polygon)
{
    if (locate(source, polygon) == Location::Outside)
        throw Error(ErrorKind::PointOutsidePolygon, "visible_interval source lies outside the polygon");

    const std::vector<Rational> events = visibility_events(source, target, polygon);
    VisibleIntervalSet result{source, target, {}};

    // Alternate event points and open gaps; visibility is constant on each gap.
    bool open = false;
    Rational start;
    Rational last;
    auto close_run = [&]() {
        if (open)
            result.intervals.push_back({start, last});
        open = false;
    };
    for (std::size_t k = 0; k < events.size(); ++k)
    {
        if (sees_unchecked(source, target.at(events[k]), polygon))
        {
            if (!open)
                start = events[k];
            open = true;
            last = events[k];
        }
        else
        {
            close_run();
        }
        if (k + 1 == events.size())
            break;
        const Rational mid = (events[k] + events[k + 1]) / 2;
        // The visible set is closed, so a visible gap always follows a visible event.
        if (!sees_unchecked(source, target.at(mid), polygon))
            close_run();
    }
    close_run();
    return result;
}

bool sees_any(const Point& source, const Segment& target, const Polygon& polygon)
{
    // Cheap first try: the closest point of the target.
    const Rational dx = target.b.x - target.a.x;
    const Rational dy = target.b.y - target.a.y;
    Rational foot = ((source.x - target.a.x) * dx + (source.y - target.a.y) * dy) / (dx * dx + dy * dy);
    foot = std::clamp(foot, Rational(0), Rational(1));
    if (sees_unchecked(source, target.at(foot), polygon))
        return true;

    const std::vector<Rational> events = visibility_events(source, target, polygon);
    for (std::size_t k = 0; k + 1 < events.size(); ++k)
        if (sees_unchecked(source, target.at((events[k] + events[k + 1]) / 2), polygon))
            return true;
    for (const Rational& t : events)
        if (sees_unchecked(source, target.at(t), polygon))
            return true;
    return false;
}

} // namespace wvg
