#pragma once

#include "wvguard/geometry.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace wvg
{

/// Sorted, duplicate-free set of vertex indices.
class GuardSet
{
public:
    GuardSet() = default;
    explicit GuardSet(std::vector<std::size_t> indices);

    static GuardSet all(std::size_t n);

    [[nodiscard]] const std::vector<std::size_t>& indices() const noexcept { return indices_; }
    [[nodiscard]] std::size_t size() const noexcept { return indices_.size(); }
    [[nodiscard]] bool empty() const noexcept { return indices_.empty(); }
    [[nodiscard]] bool contains(std::size_t index) const;

    [[nodiscard]] auto begin() const noexcept { return indices_.begin(); }
    [[nodiscard]] auto end() const noexcept { return indices_.end(); }

    [[nodiscard]] GuardSet without(const GuardSet& other) const;
    [[nodiscard]] GuardSet united(const GuardSet& other) const;
    [[nodiscard]] GuardSet intersected(const GuardSet& other) const;

    friend bool operator==(const GuardSet& a, const GuardSet& b) { return a.indices_ == b.indices_; }
    friend bool operator!=(const GuardSet& a, const GuardSet& b) { return !(a == b); }

private:
    std::vector<std::size_t> indices_;
};

/// What has to be seen: every vertex, or an explicit list of boundary points.
class TargetSet
{
public:
    static TargetSet all_vertices() { return TargetSet(); }
    static TargetSet points(std::vector<BoundaryPoint> points);

    [[nodiscard]] bool is_all_vertices() const noexcept { return all_vertices_; }
    [[nodiscard]] const std::vector<BoundaryPoint>& explicit_points() const noexcept { return points_; }

    /// Canonical, deduplicated targets in boundary order.
    [[nodiscard]] std::vector<BoundaryPoint> resolve(const Polygon& polygon) const;

private:
    TargetSet() = default;

    bool all_vertices_ = true;
    std::vector<BoundaryPoint> points_;
};

/// For every vertex, the set of targets it sees. Targets are kept in boundary order.
class CoverageMatrix
{
public:
    static CoverageMatrix build(const Polygon& polygon, const TargetSet& targets);

    [[nodiscard]] std::size_t candidate_count() const noexcept { return seen_.size(); }
    [[nodiscard]] std::size_t target_count() const noexcept { return targets_.size(); }
    [[nodiscard]] const std::vector<BoundaryPoint>& targets() const noexcept { return targets_; }
    [[nodiscard]] const boost::dynamic_bitset<>& seen_by(std::size_t vertex) const { return seen_[vertex]; }

    /// Union of what the guards see.
    [[nodiscard]] boost::dynamic_bitset<> coverage(const GuardSet& guards) const;
    /// Index of the first unseen target, if any.
    [[nodiscard]] std::optional<std::size_t> first_uncovered(const GuardSet& guards) const;

private:
    std::vector<BoundaryPoint> targets_;
    std::vector<boost::dynamic_bitset<>> seen_;
};

struct CoverResult
{
    bool covered = true;
    std::optional<BoundaryPoint> first_unseen;
};

[[nodiscard]] CoverResult covers(const GuardSet& guards, const TargetSet& targets, const Polygon& polygon);

struct LocalSearchConfig
{
    std::size_t k = 1;
    std::optional<Rational> epsilon;
    Rational alpha = 1;
    std::optional<std::size_t> max_iterations;

    /// k = ceil(alpha / epsilon^2). alpha defaults to 1, a heuristic choice.
    static LocalSearchConfig from_epsilon(const Rational& epsilon, const Rational& alpha = 1);
};

struct Swap
{
    GuardSet removed;
    GuardSet added;
};

struct SearchStep
{
    GuardSet removed;
    GuardSet added;
    std::size_t size_after = 0;
};

struct SearchTrace
{
    std::vector<SearchStep> steps;
    /// Stopped by max_iterations before reaching a local optimum.
    bool truncated = false;
};

struct LocalSearchResult
{
    GuardSet guards;
    SearchTrace trace;
};

/// First improving swap in canonical order: |S| = 1..k, S lexicographic, then
/// |S'| = 0..|S|-1, S' lexicographic over vertices outside current. k is clamped to
/// |current|.
[[nodiscard]] std::optional<Swap> find_improving_swap(const CoverageMatrix& matrix, const GuardSet& current,
                                                      std::size_t k);

[[nodiscard]] std::optional<Swap> swap_exists(const GuardSet& current, const Polygon& polygon,
                                              const TargetSet& targets, std::size_t k);

/// Starts from every vertex and applies first improving swaps until none is left.
/// Throws Unguardable if the full vertex set does not cover the targets.
[[nodiscard]] LocalSearchResult local_search(const CoverageMatrix& matrix, const LocalSearchConfig& config);
[[nodiscard]] LocalSearchResult local_search(const Polygon& polygon, const TargetSet& targets,
                                             const LocalSearchConfig& config);

inline constexpr std::size_t default_oracle_vertex_limit = 24;

/// Minimum-cardinality covering set by plain enumeration in increasing size; the
/// lexicographically smallest optimum wins. nullopt if nothing of size <= size_cap
/// covers. Throws InstanceTooLarge above vertex_limit.
[[nodiscard]] std::optional<GuardSet> brute_force_guards(const CoverageMatrix& matrix, std::size_t size_cap,
                                                         std::size_t vertex_limit = default_oracle_vertex_limit);
[[nodiscard]] std::optional<GuardSet> brute_force_guards(const Polygon& polygon, const TargetSet& targets,
                                                         std::size_t size_cap,
                                                         std::size_t vertex_limit = default_oracle_vertex_limit);

} // namespace wvg
