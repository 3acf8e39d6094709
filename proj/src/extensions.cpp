#include "wvguard/extensions.hpp"

#include "wvguard/error.hpp"
#include "wvguard/visibility.hpp"
#include "wvguard/weak_visibility.hpp"

#include <map>

namespace wvg
{

GuardSet PreprocessResult::to_original(const GuardSet& reduced_guards) const
{
    std::vector<std::size_t> out;
    out.reserve(reduced_guards.size());
    for (std::size_t g : reduced_guards)
        out.push_back(index_map.at(g));
    return GuardSet(std::move(out));
}

namespace
{

struct Cut
{
    Point point;
    /// Index of the first vertex strictly beyond the cut point.
    std::size_t beyond;
};

Point axis_crossing(const Point& p, const Point& q)
{
    // p.y and q.y have opposite signs.
    const Rational t = p.y / (p.y - q.y);
    return Segment{p, q}.at(t);
}

// Walks from u clockwise (step = +1) or from v counterclockwise (step = -1) to the
// first boundary point on the x-axis.
std::optional<Cut> find_cut(const Polygon& polygon, bool from_u)
{
    const std::size_t n = polygon.size();
    auto at = [&](std::size_t k) -> const Point& { return polygon.vertex(from_u ? k : n - 1 - k); };
    auto original = [&](std::size_t k) { return from_u ? k : n - 1 - k; };
    for (std::size_t k = 0; k + 1 < n; ++k)
    {
        const Point& p = at(k);
        const Point& q = at(k + 1);
        if (q.y == 0)
        {
            if (k + 2 >= n)
                return std::nullopt;
            return Cut{q, original(k + 2)};
        }
        if (p.y != 0 && sgn(p.y) != sgn(q.y))
            return Cut{axis_crossing(p, q), original(k + 1)};
    }
    return std::nullopt;
}

} // namespace

PreprocessResult preprocess_concave_endpoints(const Polygon& raw)
{
    const std::size_t n = raw.size();
    const WeakVisibilityVerdict verdict = verify_weak_visibility(raw);
    if (!verdict.verified())
        throw Error(ErrorKind::NotWeaklyVisible, "polygon is not weakly visible from its base edge");

    std::size_t first_kept = 1;
    std::size_t last_kept = n - 2;
    std::optional<Point> cut_a;
    std::optional<Point> cut_b;
    std::vector<std::size_t> forced;

    if (raw.concave_at_u())
    {
        const auto cut = find_cut(raw, true);
        if (!cut || cut->beyond >= n - 1)
            throw Error(ErrorKind::DegenerateCut, "cut at u reaches v");
        cut_a = cut->point;
        first_kept = cut->beyond;
        forced.push_back(0);
    }
    if (raw.concave_at_v())
    {
        const auto cut = find_cut(raw, false);
        if (!cut || cut->beyond == 0)
            throw Error(ErrorKind::DegenerateCut, "cut at v reaches u");
        cut_b = cut->point;
        last_kept = cut->beyond;
        forced.push_back(n - 1);
    }
    if (first_kept > last_kept)
        throw Error(ErrorKind::DegenerateCut, "the cuts at u and v overlap");

    PreprocessResult result{raw, GuardSet(forced), cut_a, cut_b, {}, {}, {}};
    for (std::size_t k = 1; k < first_kept; ++k)
        result.removed_after_u.push_back(k);
    for (std::size_t k = last_kept + 1; k + 1 < n; ++k)
        result.removed_before_v.push_back(k);

    if (forced.empty())
    {
        if (!raw.strict())
            throw Error(ErrorKind::NotWeaklyVisible, "boundary leaves the upper half plane away from u and v");
        for (std::size_t k = 0; k < n; ++k)
            result.index_map.push_back(k);
        return result;
    }

    std::vector<Point> kept{raw.u()};
    result.index_map.push_back(0);
    for (std::size_t k = first_kept; k <= last_kept; ++k)
    {
        kept.push_back(raw.vertex(k));
        result.index_map.push_back(k);
    }
    kept.push_back(raw.v());
    result.index_map.push_back(n - 1);
    try
    {
        result.reduced = Polygon::from_normalized(std::move(kept));
    }
    catch (const Error& e)
    {
        throw Error(ErrorKind::DegenerateCut, std::string("reduced polygon is invalid: ") + e.what());
    }
    return result;
}

WitnessSet generate_witnesses(const Polygon& polygon, bool include_base_edge)
{
    if (!polygon.strict())
        throw Error(ErrorKind::ConcaveBaseAngle, "witness generation needs convex angles at u and v");

    const std::size_t n = polygon.size();
    const std::size_t edge_count = include_base_edge ? n : n - 1;

    // Keyed by canonical boundary position so that shared edge endpoints merge.
    auto less = [](const BoundaryPoint& a, const BoundaryPoint& b) { return boundary_less(a, b); };
    std::map<BoundaryPoint, WitnessProvenance, decltype(less)> merged(less);
    auto record = [&](const BoundaryPoint& raw_point, WitnessKind kind, std::optional<std::size_t> source) {
        const BoundaryPoint point = raw_point.canonical(polygon);
        auto [it, inserted] = merged.try_emplace(point, WitnessProvenance{kind, {}});
        if (!inserted && kind == WitnessKind::EdgeEndpoint)
            it->second.kind = kind;
        if (source && (it->second.sources.empty() || it->second.sources.back() != *source))
            it->second.sources.push_back(*source);
    };

    for (std::size_t e = 0; e < edge_count; ++e)
    {
        const Segment edge = polygon.edge(e);
        std::map<Rational, std::vector<std::size_t>> events;
        events[Rational(0)];
        events[Rational(1)];
        for (std::size_t g = 0; g < n; ++g)
        {
            for (const ParamInterval& iv : visible_interval(polygon.vertex(g), edge, polygon).intervals)
            {
                events[iv.lo].push_back(g);
                if (iv.hi != iv.lo)
                    events[iv.hi].push_back(g);
            }
        }
        const Rational* previous = nullptr;
        for (const auto& [t, sources] : events)
        {
            if (previous)
                record({e, (*previous + t) / 2}, WitnessKind::GapMidpoint, std::nullopt);
            const WitnessKind kind = (t == 0 || t == 1) ? WitnessKind::EdgeEndpoint : WitnessKind::Event;
            record({e, t}, kind, std::nullopt);
            for (std::size_t g : sources)
                record({e, t}, kind, g);
            previous = &t;
        }
    }

    WitnessSet out;
    out.points.reserve(merged.size());
    out.provenance.reserve(merged.size());
    for (auto& [point, provenance] : merged)
    {
        std::sort(provenance.sources.begin(), provenance.sources.end());
        provenance.sources.erase(std::unique(provenance.sources.begin(), provenance.sources.end()),
                                 provenance.sources.end());
        out.points.push_back(point);
        out.provenance.push_back(std::move(provenance));
    }
    return out;
}

std::size_t witness_bound(const Polygon& polygon, bool include_base_edge)
{
    const std::size_t n = polygon.size();
    const std::size_t edge_count = include_base_edge ? n : n - 1;
    return edge_count * (2 * n * (n + 1) + 1);
}

GuardPipelineResult guard_vertices(const Polygon& raw, const LocalSearchConfig& config)
{
    PreprocessResult pre = preprocess_concave_endpoints(raw);
    LocalSearchResult search = local_search(pre.reduced, TargetSet::all_vertices(), config);
    GuardSet guards = pre.to_original(search.guards).united(pre.forced_guards);
    return {std::move(guards), std::move(pre), std::move(search), std::nullopt};
}

GuardPipelineResult guard_boundary(const Polygon& raw, const LocalSearchConfig& config)
{
    PreprocessResult pre = preprocess_concave_endpoints(raw);
    WitnessSet witnesses = generate_witnesses(pre.reduced);
    std::vector<BoundaryPoint> targets = witnesses.points;
    for (std::size_t k = 0; k < pre.reduced.size(); ++k)
        targets.push_back(BoundaryPoint::vertex(k));
    LocalSearchResult search = local_search(pre.reduced, TargetSet::points(std::move(targets)), config);
    GuardSet guards = pre.to_original(search.guards).united(pre.forced_guards);
    return {std::move(guards), std::move(pre), std::move(search), std::move(witnesses)};
}

} // namespace wvg
