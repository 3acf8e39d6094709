#pragma once

#include "wvguard/geometry.hpp"

#include <cstddef>
#include <cstdint>

namespace wvg
{

struct TerrainParams
{
    /// Heights are drawn from [1, max_height]; 0 means 3n.
    long max_height = 0;
    /// Horizontal gaps are drawn from [1, max_step].
    long max_step = 3;
    /// Peak of a parabolic hump added under the random heights; 0 keeps the chain flat.
    long arch = 0;
};

/// x-monotone chain of n - 2 vertices above the base edge. Every chain point sees the
/// base point vertically below it, so the result is weakly visible by construction.
[[nodiscard]] Polygon generate_terrain_polygon(std::size_t n, std::uint64_t seed, const TerrainParams& params = {});

struct GeneralParams
{
    TerrainParams terrain;
    /// Reflex angle at u (resp. v): a pocket below the x-axis seen only from u (v).
    bool concave_u = false;
    bool concave_v = false;
    /// Accepted vertex moves to aim for; 0 means n / 2.
    std::size_t mutations = 0;
    /// Candidate moves tried before giving up; 0 means 30 n.
    std::size_t attempt_budget = 0;
    std::size_t verify_samples = 64;
};

/// Terrain (or pocketed terrain) perturbed by random vertex moves that keep the
/// boundary simple and pass verify_weak_visibility. Throws GenerationBudgetExceeded
/// when no valid starting polygon is found or fewer than half the requested moves
/// are accepted.
[[nodiscard]] Polygon generate_weakly_visible_polygon(std::size_t n, std::uint64_t seed,
                                                      const GeneralParams& params = {});

} // namespace wvg
