#include "wvguard/weak_visibility.hpp"

#include "wvguard/visibility.hpp"

namespace wvg
{

WeakVisibilityVerdict verify_weak_visibility(const Polygon& polygon, std::size_t samples_per_edge)
{
    const Segment base = polygon.base_segment();
    const std::size_t n = polygon.size();

    for (std::size_t i = 0; i < n; ++i)
        if (!sees_any(polygon.vertex(i), base, polygon))
            return {WeakVisibilityStatus::VertexFailure, i, std::nullopt};

    for (std::size_t e = 0; e + 1 < n; ++e)
    {
        for (std::size_t s = 1; s <= samples_per_edge; ++s)
        {
            const BoundaryPoint sample{e, make_rational(static_cast<long>(s), static_cast<long>(samples_per_edge + 1))};
            if (!sees_any(sample.position(polygon), base, polygon))
                return {WeakVisibilityStatus::SampledEdgeFailure, std::nullopt, sample};
        }
    }
    return {};
}

} // namespace wvg
