#include "wvguard/diagnostics.hpp"

#include "wvguard/error.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <random>
#include <set>

namespace wvg
{

ColoredSets::ColoredSets(const GuardSet& red, const GuardSet& blue)
    : original_red_(red), original_blue_(blue), red_(red.without(blue)), blue_(blue.without(red)),
      common_(red.intersected(blue)), nodes_(red_.united(blue_))
{
}

Color ColoredSets::color(std::size_t vertex) const
{
    if (red_.contains(vertex))
        return Color::Red;
    if (blue_.contains(vertex))
        return Color::Blue;
    return Color::None;
}

LambdaRhoMaps compute_lambda_rho(const VisibilityGraph& visibility, const ColoredSets& colors)
{
    const std::size_t n = visibility.size();
    for (const GuardSet* set : {&colors.original_red(), &colors.original_blue()})
    {
        boost::dynamic_bitset<> seen(n);
        for (std::size_t g : *set)
            seen |= visibility.row(g);
        if (!seen.all())
            throw Error(ErrorKind::NotCovering, "vertex " + std::to_string((~seen).find_first()) +
                                                    " is not covered by " +
                                                    (set == &colors.original_red() ? "R" : "B"));
    }

    LambdaRhoMaps maps{std::vector<std::optional<std::size_t>>(n), std::vector<std::optional<std::size_t>>(n)};
    const std::vector<std::size_t>& nodes = colors.nodes().indices();
    for (std::size_t w = 0; w < n; ++w)
    {
        for (std::size_t g : nodes)
        {
            if (g >= w)
                break;
            if (visibility.adjacent(g, w))
            {
                maps.lambda[w] = g;
                break;
            }
        }
        for (auto it = nodes.rbegin(); it != nodes.rend() && *it > w; ++it)
        {
            if (visibility.adjacent(*it, w))
            {
                maps.rho[w] = *it;
                break;
            }
        }
    }
    return maps;
}

LambdaRhoMaps compute_lambda_rho(const Polygon& polygon, const ColoredSets& colors)
{
    return compute_lambda_rho(visibility_graph(polygon), colors);
}

namespace
{

ColoredEdge colored_edge(const ColoredSets& colors, std::size_t a, std::size_t b)
{
    return colors.color(a) == Color::Red ? ColoredEdge{a, b} : ColoredEdge{b, a};
}

void sort_unique(std::vector<ColoredEdge>& edges)
{
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

// Innermost chord with from < x < to; chords must be laminar.
std::optional<Chord> innermost_enclosing(const std::vector<Chord>& chords, std::size_t x)
{
    std::optional<Chord> best;
    for (const Chord& c : chords)
    {
        if (!(c.from < x && x < c.to))
            continue;
        if (!best || c.to - c.from < best->to - best->from ||
            (c.to - c.from == best->to - best->from && c.from < best->from))
            best = c;
    }
    return best;
}

// Shared construction of (A1, E1) and (A2, E2). `guard_end` picks the guard endpoint
// of a chord: lambda(w) is the chord's `from`, rho(w) its `to`.
ChordFamily build_family(const ColoredSets& colors, const std::vector<std::optional<std::size_t>>& map,
                         bool guard_before)
{
    ChordFamily family;
    for (std::size_t w = 0; w < map.size(); ++w)
        if (map[w])
            family.segments.push_back(guard_before ? Chord{*map[w], w} : Chord{w, *map[w]});

    if (auto bad = find_interleaving(family.segments))
        throw Error(ErrorKind::LaminarityViolation,
                    "chords (" + std::to_string(bad->first.from) + ", " + std::to_string(bad->first.to) + ") and (" +
                        std::to_string(bad->second.from) + ", " + std::to_string(bad->second.to) + ") interleave");

    for (std::size_t x : colors.nodes())
    {
        if (map[x] && colors.color(*map[x]) != colors.color(x))
            family.edges.push_back(colored_edge(colors, *map[x], x));
        if (auto chord = innermost_enclosing(family.segments, x))
        {
            const std::size_t guard = guard_before ? chord->from : chord->to;
            if (colors.color(guard) != Color::None && colors.color(guard) != colors.color(x))
                family.edges.push_back(colored_edge(colors, guard, x));
        }
    }
    sort_unique(family.edges);
    return family;
}

} // namespace

std::optional<std::pair<Chord, Chord>> find_interleaving(const std::vector<Chord>& chords)
{
    for (const Chord& p : chords)
        for (const Chord& q : chords)
            if (p.from < q.from && q.from < p.to && p.to < q.to)
                return std::make_pair(p, q);
    return std::nullopt;
}

ChordFamily build_a1_e1(const ColoredSets& colors, const LambdaRhoMaps& maps)
{
    return build_family(colors, maps.lambda, true);
}

ChordFamily build_a2_e2(const ColoredSets& colors, const LambdaRhoMaps& maps)
{
    return build_family(colors, maps.rho, false);
}

std::vector<ColoredEdge> build_e3(const ColoredSets& colors, const LambdaRhoMaps& maps)
{
    std::vector<ColoredEdge> edges;
    for (std::size_t x = 0; x < maps.lambda.size(); ++x)
    {
        if (colors.nodes().contains(x) || !maps.lambda[x] || !maps.rho[x])
            continue;
        if (colors.color(*maps.lambda[x]) != colors.color(*maps.rho[x]))
            edges.push_back(colored_edge(colors, *maps.lambda[x], *maps.rho[x]));
    }
    sort_unique(edges);
    return edges;
}

std::vector<ColoredEdge> ExchangeGraph::edges() const
{
    std::vector<ColoredEdge> all = e1;
    all.insert(all.end(), e2.begin(), e2.end());
    all.insert(all.end(), e3.begin(), e3.end());
    sort_unique(all);
    return all;
}

ExchangeGraph build_exchange_graph(const ColoredSets& colors, const LambdaRhoMaps& maps)
{
    ChordFamily first = build_a1_e1(colors, maps);
    ChordFamily second = build_a2_e2(colors, maps);
    return {colors.nodes().indices(),   std::move(first.segments), std::move(second.segments),
            std::move(first.edges),     std::move(second.edges),   build_e3(colors, maps)};
}

NonCrossingVerdict check_non_crossing(const Polygon& polygon, const std::vector<Chord>& chords)
{
    NonCrossingVerdict verdict;
    if (auto bad = find_interleaving(chords))
    {
        verdict.holds = false;
        verdict.laminar = false;
        verdict.offending = bad;
        return verdict;
    }
    for (std::size_t i = 0; i < chords.size(); ++i)
    {
        const Segment si{polygon.vertex(chords[i].from), polygon.vertex(chords[i].to)};
        for (std::size_t j = i + 1; j < chords.size(); ++j)
        {
            const Segment sj{polygon.vertex(chords[j].from), polygon.vertex(chords[j].to)};
            if (segments_cross_transversally(si, sj))
            {
                verdict.holds = false;
                verdict.offending = std::make_pair(chords[i], chords[j]);
                return verdict;
            }
        }
    }
    return verdict;
}

PlanarityVerdict check_planarity(const SimpleGraph& graph)
{
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                             boost::property<boost::vertex_index_t, int>,
                                             boost::property<boost::edge_index_t, int>>;
    BoostGraph g(graph.vertex_count);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [a, b] : graph.edges)
    {
        if (a == b)
            continue;
        if (seen.insert(std::minmax(a, b)).second)
            boost::add_edge(a, b, g);
    }
    auto edge_index = boost::get(boost::edge_index, g);
    int counter = 0;
    for (auto [it, end] = boost::edges(g); it != end; ++it)
        boost::put(edge_index, *it, counter++);

    using EdgeDescriptor = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<EdgeDescriptor> kuratowski;
    PlanarityVerdict verdict;
    verdict.planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = g,
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
    for (const EdgeDescriptor& e : kuratowski)
        verdict.witness.emplace_back(boost::source(e, g), boost::target(e, g));
    std::sort(verdict.witness.begin(), verdict.witness.end());
    return verdict;
}

PlanarityVerdict check_planarity(const ExchangeGraph& graph)
{
    SimpleGraph simple{graph.nodes.size(), {}};
    auto local = [&graph](std::size_t vertex) {
        return static_cast<std::size_t>(std::lower_bound(graph.nodes.begin(), graph.nodes.end(), vertex) -
                                        graph.nodes.begin());
    };
    for (auto [r, b] : graph.edges())
        simple.edges.emplace_back(local(r), local(b));
    PlanarityVerdict verdict = check_planarity(simple);
    for (auto& [a, b] : verdict.witness)
    {
        a = graph.nodes[a];
        b = graph.nodes[b];
    }
    return verdict;
}

LocalityVerdict check_locality(const VisibilityGraph& visibility, const ColoredSets& colors,
                               const std::vector<ColoredEdge>& edges)
{
    LocalityVerdict verdict;
    for (std::size_t w = 0; w < visibility.size(); ++w)
    {
        const bool exempt = std::any_of(colors.common().begin(), colors.common().end(),
                                        [&](std::size_t g) { return visibility.adjacent(g, w); });
        if (exempt)
        {
            ++verdict.exempt;
            continue;
        }
        const bool supported = std::any_of(edges.begin(), edges.end(), [&](const ColoredEdge& e) {
            return visibility.adjacent(e.first, w) && visibility.adjacent(e.second, w);
        });
        if (!supported)
        {
            verdict.holds = false;
            verdict.violated_at = w;
            return verdict;
        }
    }
    return verdict;
}

namespace
{

std::uint64_t choose4(std::uint64_t n)
{
    if (n < 4)
        return 0;
    return n * (n - 1) * (n - 2) * (n - 3) / 24;
}

} // namespace

OrderClaimVerdict check_order_claim(const VisibilityGraph& visibility, std::uint64_t trials, std::uint64_t seed)
{
    const std::size_t n = visibility.size();
    OrderClaimVerdict verdict;
    auto examine = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
        if (!visibility.adjacent(a, c) || !visibility.adjacent(b, d))
            return true;
        ++verdict.premises;
        if (visibility.adjacent(a, d))
            return true;
        verdict.holds = false;
        verdict.counterexample = Quadruple{a, b, c, d};
        return false;
    };

    if (choose4(n) <= trials)
    {
        verdict.exhaustive = true;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                for (std::size_t c = b + 1; c < n; ++c)
                    for (std::size_t d = c + 1; d < n; ++d)
                        if (!examine(a, b, c, d))
                            return verdict;
        return verdict;
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::uint64_t trial = 0; trial < trials; ++trial)
    {
        std::set<std::size_t> chosen;
        while (chosen.size() < 4)
            chosen.insert(pick(rng));
        auto it = chosen.begin();
        const std::size_t a = *it++;
        const std::size_t b = *it++;
        const std::size_t c = *it++;
        const std::size_t d = *it;
        if (!examine(a, b, c, d))
            return verdict;
    }
    return verdict;
}

OrderClaimVerdict check_order_claim(const Polygon& polygon, std::uint64_t trials, std::uint64_t seed)
{
    return check_order_claim(visibility_graph(polygon), trials, seed);
}

bool DiagnosticsReport::all_passed() const
{
    return bipartite && a1.holds && a2.holds && planarity.planar && locality.holds && order_claim.holds;
}

DiagnosticsReport diagnose(const Polygon& polygon, const GuardSet& red, const GuardSet& blue,
                           std::uint64_t order_claim_trials, std::uint64_t seed)
{
    const VisibilityGraph visibility = visibility_graph(polygon);
    const ColoredSets colors(red, blue);

    DiagnosticsReport report;
    report.red = colors.red();
    report.blue = colors.blue();
    report.common = colors.common();
    report.degenerate = colors.degenerate();
    report.maps = compute_lambda_rho(visibility, colors);
    report.graph = build_exchange_graph(colors, report.maps);
    const auto edges = report.graph.edges();
    report.bipartite = std::all_of(edges.begin(), edges.end(), [&](const ColoredEdge& e) {
        return colors.color(e.first) == Color::Red && colors.color(e.second) == Color::Blue;
    });
    report.a1 = check_non_crossing(polygon, report.graph.a1);
    report.a2 = check_non_crossing(polygon, report.graph.a2);
    report.planarity = check_planarity(report.graph);
    report.locality = check_locality(visibility, colors, edges);
    report.order_claim = check_order_claim(visibility, order_claim_trials, seed);
    return report;
}

} // namespace wvg
