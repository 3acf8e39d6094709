#include "wvguard/harness/generator.hpp"

#include "wvguard/error.hpp"
#include "wvguard/weak_visibility.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

namespace wvg
{

namespace
{

class Draw
{
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}

    long operator()(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
};

long height_limit(std::size_t n, const TerrainParams& params)
{
    return params.max_height > 0 ? params.max_height : static_cast<long>(3 * n);
}

constexpr int construction_attempts = 1000;

long hump(const TerrainParams& params, long x, long length)
{
    return params.arch * 4 * x * (length - x) / (length * length);
}

// Third-quadrant points around the origin in clockwise order (from south toward
// west), followed by one second-quadrant point. Every consecutive angular step is
// below 180 degrees, so the fan is star-shaped from the origin.
std::vector<Point> pocket(std::size_t depth, long radius, Draw& draw)
{
    while (true)
    {
        std::vector<Point> pts;
        for (std::size_t k = 0; k < depth; ++k)
            pts.push_back({Rational(-draw(1, radius)), Rational(-draw(1, radius))});
        std::sort(pts.begin(), pts.end(), [](const Point& p, const Point& q) {
            return orientation_sign(Point{0, 0}, p, q) < 0;
        });
        bool distinct = true;
        for (std::size_t k = 0; k + 1 < pts.size(); ++k)
            distinct = distinct && orientation_sign(Point{0, 0}, pts[k], pts[k + 1]) != 0;
        if (!distinct)
            continue;
        pts.push_back({Rational(-draw(1, radius)), Rational(draw(1, radius))});
        return pts;
    }
}

std::vector<Point> build_start(std::size_t n, const GeneralParams& params, Draw& draw)
{
    const long height = height_limit(n, params.terrain);
    const long radius = std::max(2L, height / 2);
    const std::size_t depth = std::max<std::size_t>(1, (n - 2) / 4);

    std::vector<Point> u_side;
    std::vector<Point> v_side;
    if (params.concave_u)
        u_side = pocket(depth, radius, draw);
    if (params.concave_v)
        v_side = pocket(depth, radius, draw);
    const std::size_t fixed = 2 + u_side.size() + v_side.size();
    if (fixed > n)
        throw Error(ErrorKind::GenerationBudgetExceeded, "too few vertices for the requested pockets");

    std::vector<Point> out{{0, 0}};
    out.insert(out.end(), u_side.begin(), u_side.end());
    std::vector<long> xs;
    long x = 0;
    for (std::size_t k = 0; k < n - fixed; ++k)
    {
        x += draw(1, params.terrain.max_step);
        xs.push_back(x);
    }
    const long length = x + draw(1, params.terrain.max_step);
    for (long at : xs)
    {
        out.push_back({Rational(at), Rational(hump(params.terrain, at, length) + draw(1, height))});
    }
    for (auto it = v_side.rbegin(); it != v_side.rend(); ++it)
        out.push_back({Rational(length) - it->x, it->y});
    out.push_back({Rational(length), Rational(0)});
    return out;
}

} // namespace

Polygon generate_terrain_polygon(std::size_t n, std::uint64_t seed, const TerrainParams& params)
{
    if (n < 3)
        throw Error(ErrorKind::Usage, "a polygon needs at least 3 vertices");
    Draw draw(seed);
    GeneralParams plain;
    plain.terrain = params;
    for (int attempt = 0; attempt < construction_attempts; ++attempt)
    {
        try
        {
            return Polygon::from_normalized(build_start(n, plain, draw));
        }
        catch (const Error& e)
        {
            if (e.kind() != ErrorKind::DegenerateVertex)
                throw;
        }
    }
    throw Error(ErrorKind::GenerationBudgetExceeded, "no non-degenerate terrain found");
}

Polygon generate_weakly_visible_polygon(std::size_t n, std::uint64_t seed, const GeneralParams& params)
{
    if (n < 3)
        throw Error(ErrorKind::Usage, "a polygon needs at least 3 vertices");
    const bool pocketed = params.concave_u || params.concave_v;
    Draw draw(seed);

    std::optional<Polygon> current;
    for (int attempt = 0; attempt < construction_attempts && !current; ++attempt)
    {
        try
        {
            Polygon start = Polygon::from_normalized(build_start(n, params, draw), pocketed);
            if (!pocketed || verify_weak_visibility(start, params.verify_samples).verified())
                current = std::move(start);
        }
        catch (const Error& e)
        {
            if (e.kind() != ErrorKind::DegenerateVertex && e.kind() != ErrorKind::NotSimple)
                throw;
        }
    }
    if (!current)
        throw Error(ErrorKind::GenerationBudgetExceeded, "no valid starting polygon found");

    // Only the terrain chain moves; pocket vertices keep the reflex angles intact.
    std::vector<std::size_t> movable;
    for (std::size_t k = 1; k + 1 < n; ++k)
    {
        const Point& p = current->vertex(k);
        if (p.y > 0 && p.x > 0 && p.x < current->v().x)
            movable.push_back(k);
    }
    const std::size_t target = params.mutations > 0 ? params.mutations : n / 2;
    const std::size_t budget = params.attempt_budget > 0 ? params.attempt_budget : 30 * n;
    if (movable.empty())
        return *current;

    const long height = height_limit(n, params.terrain);
    const long reach = 2 * params.terrain.max_step;
    const long length = current->v().x.get_num().get_si();
    std::size_t accepted = 0;
    for (std::size_t attempt = 0; attempt < budget && accepted < target; ++attempt)
    {
        const std::size_t k = movable[static_cast<std::size_t>(draw(0, static_cast<long>(movable.size()) - 1))];
        std::vector<Point> candidate = current->vertices();
        candidate[k].x += draw(-reach, reach);
        if (candidate[k].x <= 0 || candidate[k].x >= current->v().x)
            continue;
        const long at = candidate[k].x.get_num().get_si();
        candidate[k].y = hump(params.terrain, at, length) + draw(1, height);
        try
        {
            Polygon moved = Polygon::from_normalized(std::move(candidate), pocketed);
            if (moved.concave_at_u() != current->concave_at_u() || moved.concave_at_v() != current->concave_at_v())
                continue;
            if (!verify_weak_visibility(moved, params.verify_samples).verified())
                continue;
            current = std::move(moved);
            ++accepted;
        }
        catch (const Error&)
        {
        }
    }
    if (2 * accepted < target)
        throw Error(ErrorKind::GenerationBudgetExceeded, "only " + std::to_string(accepted) + " of " +
                                                             std::to_string(target) + " moves were accepted");
    return *current;
}

} // namespace wvg
