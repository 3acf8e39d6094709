#pragma once

#include "wvguard/geometry.hpp"
#include "wvguard/guarding.hpp"
#include "wvguard/harness/generator.hpp"
#include "wvguard/visibility.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace wvg::test
{

[[nodiscard]] Point pt(long x, long y);
[[nodiscard]] std::vector<Point> pts(std::initializer_list<std::pair<long, long>> coords);
[[nodiscard]] Polygon poly(std::initializer_list<std::pair<long, long>> coords, bool relaxed = false);

/// Clockwise square (0,0),(0,2),(2,2),(2,0).
[[nodiscard]] Polygon square();
/// Convex n-gon on a parabola above the base edge.
[[nodiscard]] Polygon convex(std::size_t n);
/// (0,0),(2,4),(3,1),(4,4),(6,0): one notch dipping towards the base.
[[nodiscard]] Polygon notched();

/// Point-in-closed-polygon by crossing number, written without the library predicates.
[[nodiscard]] bool oracle_inside_or_on(const Point& p, const Polygon& polygon);
/// Closed visibility by testing `samples` evenly spaced points of ab (endpoints included)
/// plus every point of ab that hits a polygon vertex.
[[nodiscard]] bool oracle_sees(const Point& a, const Point& b, const Polygon& polygon, int samples = 2000);

struct CorpusEntry
{
    std::string id;
    Polygon polygon;
};

/// Three rotating profiles: flat rough terrain, a mild hump, a tall hump.
[[nodiscard]] GeneralParams corpus_params(std::size_t index, std::size_t n);
/// Weakly-visible polygons with n cycling through [n_min, n_max].
[[nodiscard]] std::vector<CorpusEntry> corpus(std::size_t count, std::size_t n_min, std::size_t n_max,
                                              std::uint64_t seed = 1);
/// Weakly-visible polygons with a reflex angle at u (and also at v when `both`).
[[nodiscard]] std::vector<CorpusEntry> concave_corpus(std::size_t count, std::size_t n_min, std::size_t n_max,
                                                      bool both = false, std::uint64_t seed = 1);

/// Coverage of every vertex by `guards`, through the sampling oracle.
[[nodiscard]] bool oracle_covers_vertices(const std::vector<std::size_t>& guards, const Polygon& polygon);

} // namespace wvg::test
