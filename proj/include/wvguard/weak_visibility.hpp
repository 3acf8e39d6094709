#pragma once

#include "wvguard/geometry.hpp"

#include <cstddef>
#include <optional>

namespace wvg
{

inline constexpr std::size_t default_samples_per_edge = 64;

enum class WeakVisibilityStatus
{
    Verified,
    VertexFailure,
    SampledEdgeFailure,
};

struct WeakVisibilityVerdict
{
    WeakVisibilityStatus status = WeakVisibilityStatus::Verified;
    /// Failing vertex index (VertexFailure).
    std::optional<std::size_t> vertex;
    /// Failing sample (SampledEdgeFailure).
    std::optional<BoundaryPoint> sample;

    [[nodiscard]] bool verified() const noexcept { return status == WeakVisibilityStatus::Verified; }
};

/// Vertices are checked exactly; each non-base edge is checked at samples_per_edge
/// evenly spaced interior points. Edge interiors between samples are not certified.
[[nodiscard]] WeakVisibilityVerdict verify_weak_visibility(const Polygon& polygon,
                                                           std::size_t samples_per_edge = default_samples_per_edge);

} // namespace wvg
