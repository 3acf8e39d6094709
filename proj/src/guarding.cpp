#include "wvguard/guarding.hpp"

#include "wvguard/error.hpp"
#include "wvguard/visibility.hpp"

#include <algorithm>
#include <functional>
#include <iterator>

namespace wvg
{

GuardSet::GuardSet(std::vector<std::size_t> indices) : indices_(std::move(indices))
{
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

GuardSet GuardSet::all(std::size_t n)
{
    std::vector<std::size_t> indices(n);
    for (std::size_t i = 0; i < n; ++i)
        indices[i] = i;
    return GuardSet(std::move(indices));
}

bool GuardSet::contains(std::size_t index) const
{
    return std::binary_search(indices_.begin(), indices_.end(), index);
}

GuardSet GuardSet::without(const GuardSet& other) const
{
    std::vector<std::size_t> out;
    std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return GuardSet(std::move(out));
}

GuardSet GuardSet::united(const GuardSet& other) const
{
    std::vector<std::size_t> out;
    std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return GuardSet(std::move(out));
}

GuardSet GuardSet::intersected(const GuardSet& other) const
{
    std::vector<std::size_t> out;
    std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return GuardSet(std::move(out));
}

TargetSet TargetSet::points(std::vector<BoundaryPoint> points)
{
    TargetSet set;
    set.all_vertices_ = false;
    set.points_ = std::move(points);
    return set;
}

std::vector<BoundaryPoint> TargetSet::resolve(const Polygon& polygon) const
{
    std::vector<BoundaryPoint> out;
    if (all_vertices_)
    {
        for (std::size_t i = 0; i < polygon.size(); ++i)
            out.push_back(BoundaryPoint::vertex(i));
        return out;
    }
    out.reserve(points_.size());
    for (const BoundaryPoint& p : points_)
        out.push_back(p.canonical(polygon));
    std::sort(out.begin(), out.end(), boundary_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CoverageMatrix CoverageMatrix::build(const Polygon& polygon, const TargetSet& targets)
{
    CoverageMatrix matrix;
    matrix.targets_ = targets.resolve(polygon);
    const std::size_t n = polygon.size();
    const std::size_t m = matrix.targets_.size();
    matrix.seen_.assign(n, boost::dynamic_bitset<>(m));

    if (targets.is_all_vertices())
    {
        const VisibilityGraph graph = visibility_graph(polygon);
        for (std::size_t g = 0; g < n; ++g)
            matrix.seen_[g] = graph.row(g);
        return matrix;
    }

    std::vector<Point> positions;
    positions.reserve(m);
    for (const BoundaryPoint& p : matrix.targets_)
        positions.push_back(p.position(polygon));
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t t = 0; t < m; ++t)
            if (sees_unchecked(polygon.vertex(g), positions[t], polygon))
                matrix.seen_[g].set(t);
    return matrix;
}

boost::dynamic_bitset<> CoverageMatrix::coverage(const GuardSet& guards) const
{
    boost::dynamic_bitset<> seen(targets_.size());
    for (std::size_t g : guards)
        seen |= seen_[g];
    return seen;
}

std::optional<std::size_t> CoverageMatrix::first_uncovered(const GuardSet& guards) const
{
    const boost::dynamic_bitset<> seen = coverage(guards);
    if (seen.all())
        return std::nullopt;
    return (~seen).find_first();
}

CoverResult covers(const GuardSet& guards, const TargetSet& targets, const Polygon& polygon)
{
    const CoverageMatrix matrix = CoverageMatrix::build(polygon, targets);
    const auto missing = matrix.first_uncovered(guards);
    if (!missing)
        return {};
    return {false, matrix.targets()[*missing]};
}

LocalSearchConfig LocalSearchConfig::from_epsilon(const Rational& epsilon, const Rational& alpha)
{
    if (epsilon <= 0 || alpha <= 0)
        throw Error(ErrorKind::Usage, "epsilon and alpha must be positive");
    const Rational ratio = alpha / (epsilon * epsilon);
    mpz_class k;
    mpz_cdiv_q(k.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
    LocalSearchConfig config;
    config.k = std::max<std::size_t>(1, k.get_ui());
    config.epsilon = epsilon;
    config.alpha = alpha;
    return config;
}

namespace
{

// Visits size-`size` combinations of pool in lexicographic order, passing the union of
// their coverage to accept(); stops at the first combination accept() takes.
class CombinationSearch
{
public:
    CombinationSearch(const CoverageMatrix& matrix, const std::vector<std::size_t>& pool)
        : matrix_(matrix), pool_(pool)
    {
    }

    std::optional<std::vector<std::size_t>> first(std::size_t size,
                                                  const std::function<bool(const boost::dynamic_bitset<>&)>& accept)
    {
        chosen_.clear();
        boost::dynamic_bitset<> acc(matrix_.target_count());
        if (descend(0, size, acc, accept))
            return chosen_;
        return std::nullopt;
    }

private:
    bool descend(std::size_t from, std::size_t remaining, const boost::dynamic_bitset<>& acc,
                 const std::function<bool(const boost::dynamic_bitset<>&)>& accept)
    {
        if (remaining == 0)
            return accept(acc);
        for (std::size_t i = from; i + remaining <= pool_.size(); ++i)
        {
            chosen_.push_back(pool_[i]);
            if (descend(i + 1, remaining - 1, acc | matrix_.seen_by(pool_[i]), accept))
                return true;
            chosen_.pop_back();
        }
        return false;
    }

    const CoverageMatrix& matrix_;
    const std::vector<std::size_t>& pool_;
    std::vector<std::size_t> chosen_;
};

} // namespace

std::optional<Swap> find_improving_swap(const CoverageMatrix& matrix, const GuardSet& current, std::size_t k)
{
    const std::size_t n = matrix.candidate_count();
    const std::vector<std::size_t>& inside = current.indices();
    std::vector<std::size_t> outside;
    for (std::size_t i = 0; i < n; ++i)
        if (!current.contains(i))
            outside.push_back(i);

    k = std::min(k, inside.size());
    CombinationSearch additions(matrix, outside);

    for (std::size_t s = 1; s <= k; ++s)
    {
        // S is enumerated by index tuples into `inside` so the coverage of current \ S
        // can be evaluated per candidate.
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i)
            idx[i] = i;
        while (true)
        {
            std::vector<std::size_t> removed;
            removed.reserve(s);
            for (std::size_t i : idx)
                removed.push_back(inside[i]);
            const GuardSet removed_set(removed);
            const boost::dynamic_bitset<> kept = matrix.coverage(current.without(removed_set));
            const boost::dynamic_bitset<> need = ~kept;
            if (need.none())
                return Swap{removed_set, GuardSet()};
            for (std::size_t t = 1; t < s; ++t)
            {
                auto added = additions.first(t, [&need](const boost::dynamic_bitset<>& acc) { return need.is_subset_of(acc); });
                if (added)
                    return Swap{removed_set, GuardSet(*added)};
            }

            // Next combination of indices into inside.
            std::size_t pos = s;
            while (pos > 0 && idx[pos - 1] == inside.size() - s + (pos - 1))
                --pos;
            if (pos == 0)
                break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < s; ++i)
                idx[i] = idx[i - 1] + 1;
        }
    }
    return std::nullopt;
}

std::optional<Swap> swap_exists(const GuardSet& current, const Polygon& polygon, const TargetSet& targets,
                                std::size_t k)
{
    return find_improving_swap(CoverageMatrix::build(polygon, targets), current, k);
}

LocalSearchResult local_search(const CoverageMatrix& matrix, const LocalSearchConfig& config)
{
    if (config.k == 0)
        throw Error(ErrorKind::Usage, "swap size k must be at least 1");
    LocalSearchResult result{GuardSet::all(matrix.candidate_count()), {}};
    if (matrix.first_uncovered(result.guards))
        throw Error(ErrorKind::Unguardable, "the full vertex set does not cover the targets");

    while (true)
    {
        if (config.max_iterations && result.trace.steps.size() >= *config.max_iterations)
        {
            result.trace.truncated = find_improving_swap(matrix, result.guards, config.k).has_value();
            break;
        }
        auto swap = find_improving_swap(matrix, result.guards, config.k);
        if (!swap)
            break;
        result.guards = result.guards.without(swap->removed).united(swap->added);
        result.trace.steps.push_back({std::move(swap->removed), std::move(swap->added), result.guards.size()});
    }
    return result;
}

LocalSearchResult local_search(const Polygon& polygon, const TargetSet& targets, const LocalSearchConfig& config)
{
    return local_search(CoverageMatrix::build(polygon, targets), config);
}

std::optional<GuardSet> brute_force_guards(const CoverageMatrix& matrix, std::size_t size_cap,
                                           std::size_t vertex_limit)
{
    const std::size_t n = matrix.candidate_count();
    if (n > vertex_limit)
        throw Error(ErrorKind::InstanceTooLarge, "brute force is limited to " + std::to_string(vertex_limit) +
                                                     " vertices, instance has " + std::to_string(n));
    const GuardSet everything = GuardSet::all(n);
    CombinationSearch search(matrix, everything.indices());
    const std::size_t cap = std::min(size_cap, n);
    for (std::size_t size = 0; size <= cap; ++size)
    {
        auto found = search.first(size, [](const boost::dynamic_bitset<>& acc) { return acc.all(); });
        if (found)
            return GuardSet(*found);
    }
    return std::nullopt;
}

std::optional<GuardSet> brute_force_guards(const Polygon& polygon, const TargetSet& targets, std::size_t size_cap,
                                           std::size_t vertex_limit)
{
    if (polygon.size() > vertex_limit)
        throw Error(ErrorKind::InstanceTooLarge, "brute force is limited to " + std::to_string(vertex_limit) +
                                                     " vertices, instance has " + std::to_string(polygon.size()));
    return brute_force_guards(CoverageMatrix::build(polygon, targets), size_cap, vertex_limit);
}

} // namespace wvg
