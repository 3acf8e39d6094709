#include "wvguard/harness/report.hpp"

#include "wvguard/error.hpp"

#include <algorithm>
#include <chrono>

namespace wvg
{

Json to_json(const GuardSet& guards)
{
    return Json(guards.indices());
}

Json to_json(const BoundaryPoint& point)
{
    return {{"edge", point.edge}, {"t", to_fraction_string(point.t)}};
}

Json to_json(const Point& point)
{
    return Json::array({to_fraction_string(point.x), to_fraction_string(point.y)});
}

Json to_json(const SearchTrace& trace)
{
    Json steps = Json::array();
    for (const SearchStep& s : trace.steps)
        steps.push_back({{"removed", to_json(s.removed)}, {"added", to_json(s.added)}, {"size_after", s.size_after}});
    return {{"steps", std::move(steps)}, {"truncated", trace.truncated}};
}

Json to_json(const WeakVisibilityVerdict& verdict)
{
    Json out;
    switch (verdict.status)
    {
    case WeakVisibilityStatus::Verified:
        out["status"] = "Verified";
        break;
    case WeakVisibilityStatus::VertexFailure:
        out["status"] = "VertexFailure";
        break;
    case WeakVisibilityStatus::SampledEdgeFailure:
        out["status"] = "SampledEdgeFailure";
        break;
    }
    if (verdict.vertex)
        out["vertex"] = *verdict.vertex;
    if (verdict.sample)
        out["sample"] = to_json(*verdict.sample);
    return out;
}

namespace
{

const char* kind_name(WitnessKind kind)
{
    switch (kind)
    {
    case WitnessKind::EdgeEndpoint:
        return "endpoint";
    case WitnessKind::Event:
        return "event";
    case WitnessKind::GapMidpoint:
        return "midpoint";
    }
    return "event";
}

Json edges_json(const std::vector<ColoredEdge>& edges)
{
    Json out = Json::array();
    for (const auto& [r, b] : edges)
        out.push_back({r, b});
    return out;
}

Json chords_json(const std::vector<Chord>& chords)
{
    Json out = Json::array();
    for (const Chord& c : chords)
        out.push_back({c.from, c.to});
    return out;
}

Json non_crossing_json(const NonCrossingVerdict& v)
{
    Json out{{"verdict", v.holds ? "Holds" : "Violated"}, {"laminar", v.laminar}};
    if (v.offending)
        out["offending"] = chords_json({v.offending->first, v.offending->second});
    return out;
}

Json optional_index(const std::optional<std::size_t>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

} // namespace

Json to_json(const WitnessSet& witnesses)
{
    Json points = Json::array();
    for (std::size_t k = 0; k < witnesses.points.size(); ++k)
    {
        Json p = to_json(witnesses.points[k]);
        p["kind"] = kind_name(witnesses.provenance[k].kind);
        p["sources"] = witnesses.provenance[k].sources;
        points.push_back(std::move(p));
    }
    return {{"count", witnesses.points.size()}, {"points", std::move(points)}};
}

Json to_json(const DiagnosticsReport& report)
{
    Json lambda = Json::array();
    Json rho = Json::array();
    for (const auto& v : report.maps.lambda)
        lambda.push_back(optional_index(v));
    for (const auto& v : report.maps.rho)
        rho.push_back(optional_index(v));

    Json planarity{{"verdict", report.planarity.planar ? "Planar" : "NonPlanar"}};
    if (!report.planarity.planar)
    {
        Json witness = Json::array();
        for (const auto& [a, b] : report.planarity.witness)
            witness.push_back({a, b});
        planarity["kuratowski"] = std::move(witness);
    }
    Json locality{{"verdict", report.locality.holds ? "Holds" : "Violated"}, {"exempt", report.locality.exempt}};
    if (report.locality.violated_at)
        locality["violated_at"] = *report.locality.violated_at;
    Json order{{"verdict", report.order_claim.holds ? "Holds" : "Violated"},
               {"exhaustive", report.order_claim.exhaustive},
               {"premises", report.order_claim.premises}};
    if (report.order_claim.counterexample)
    {
        const Quadruple& q = *report.order_claim.counterexample;
        order["counterexample"] = {q.a, q.b, q.c, q.d};
    }

    return {{"red", to_json(report.red)},
            {"blue", to_json(report.blue)},
            {"common", to_json(report.common)},
            {"degenerate", report.degenerate},
            {"lambda", std::move(lambda)},
            {"rho", std::move(rho)},
            {"exchange_graph",
             {{"nodes", report.graph.nodes},
              {"a1", chords_json(report.graph.a1)},
              {"a2", chords_json(report.graph.a2)},
              {"e1", edges_json(report.graph.e1)},
              {"e2", edges_json(report.graph.e2)},
              {"e3", edges_json(report.graph.e3)}}},
            {"checks",
             {{"order_claim", std::move(order)},
              {"a1_non_crossing", non_crossing_json(report.a1)},
              {"a2_non_crossing", non_crossing_json(report.a2)},
              {"bipartite", {{"verdict", report.bipartite ? "Holds" : "Violated"}}},
              {"planarity", std::move(planarity)},
              {"locality", std::move(locality)}}},
            {"all_passed", report.all_passed()}};
}

Json to_json(const GuardPipelineResult& result, std::size_t k)
{
    const PreprocessResult& pre = result.preprocess;
    Json preprocess{{"forced_guards", to_json(pre.forced_guards)},
                    {"removed_after_u", pre.removed_after_u},
                    {"removed_before_v", pre.removed_before_v},
                    {"reduced_size", pre.reduced.size()}};
    if (pre.cut_a)
        preprocess["cut_a"] = to_json(*pre.cut_a);
    if (pre.cut_b)
        preprocess["cut_b"] = to_json(*pre.cut_b);
    Json out{{"k", k},
             {"guards", to_json(result.guards)},
             {"size", result.guards.size()},
             {"preprocess", std::move(preprocess)},
             {"trace", to_json(result.search.trace)}};
    if (result.witnesses)
        out["witness_count"] = result.witnesses->points.size();
    return out;
}

namespace
{

class Stopwatch
{
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}

    double lap()
    {
        const auto now = std::chrono::steady_clock::now();
        const double s = std::chrono::duration<double>(now - start_).count();
        start_ = now;
        return s;
    }

private:
    std::chrono::steady_clock::time_point start_;
};

InstanceRecord run_one(const InstanceInput& input, const ExperimentOptions& options)
{
    InstanceRecord rec;
    rec.id = input.id;
    rec.n = input.polygon.size();
    rec.k = options.k;
    Stopwatch clock;
    try
    {
        const PreprocessResult pre = preprocess_concave_endpoints(input.polygon);
        rec.forced_guards = pre.forced_guards;
        rec.seconds.preprocess = clock.lap();

        LocalSearchConfig config;
        config.k = options.k;
        const CoverageMatrix matrix = CoverageMatrix::build(pre.reduced, TargetSet::all_vertices());
        const LocalSearchResult search = local_search(matrix, config);
        rec.local_size = search.guards.size() + pre.forced_guards.size();
        rec.seconds.local_search = clock.lap();

        std::optional<GuardSet> optimum;
        if (pre.reduced.size() <= options.oracle_vertex_limit)
        {
            optimum = brute_force_guards(matrix, pre.reduced.size(), options.oracle_vertex_limit);
            if (optimum)
            {
                rec.oracle_size = optimum->size() + pre.forced_guards.size();
                rec.ratio = static_cast<double>(rec.local_size) / static_cast<double>(*rec.oracle_size);
            }
        }
        rec.seconds.oracle = clock.lap();

        if (options.witnesses)
        {
            rec.witness_count = generate_witnesses(pre.reduced).points.size();
            rec.seconds.witnesses = clock.lap();
        }

        if (options.diagnostics && optimum)
        {
            const DiagnosticsReport d =
                diagnose(pre.reduced, *optimum, search.guards, options.order_claim_trials, options.seed);
            rec.diagnostics_passed = d.all_passed();
            rec.order_claim = d.order_claim.holds;
            rec.a1_non_crossing = d.a1.holds;
            rec.a2_non_crossing = d.a2.holds;
            rec.planar = d.planarity.planar;
            rec.locality = d.locality.holds;
            rec.seconds.diagnostics = clock.lap();
        }
    }
    catch (const Error& e)
    {
        rec.error = std::string(to_string(e.kind())) + ": " + e.what();
    }
    return rec;
}

Json optional_bool(const std::optional<bool>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

} // namespace

ExperimentReport run_experiment(const std::vector<InstanceInput>& instances, const ExperimentOptions& options)
{
    ExperimentReport report;
    report.records.reserve(instances.size());
    for (const InstanceInput& input : instances)
        report.records.push_back(run_one(input, options));
    std::stable_sort(report.records.begin(), report.records.end(),
                     [](const InstanceRecord& a, const InstanceRecord& b) { return a.id < b.id; });
    return report;
}

Json ExperimentReport::to_json() const
{
    Json rows = Json::array();
    double ratio_sum = 0;
    std::size_t ratio_count = 0;
    for (const InstanceRecord& r : records)
    {
        Json row{{"id", r.id}, {"n", r.n}, {"k", r.k}};
        if (r.error)
        {
            row["error"] = *r.error;
            rows.push_back(std::move(row));
            continue;
        }
        row["local_size"] = r.local_size;
        row["oracle_size"] = optional_index(r.oracle_size);
        row["ratio"] = r.ratio ? Json(*r.ratio) : Json(nullptr);
        row["forced_guards"] = wvg::to_json(r.forced_guards);
        row["witness_count"] = optional_index(r.witness_count);
        row["diagnostics"] = {{"all_passed", optional_bool(r.diagnostics_passed)},
                              {"order_claim", optional_bool(r.order_claim)},
                              {"a1_non_crossing", optional_bool(r.a1_non_crossing)},
                              {"a2_non_crossing", optional_bool(r.a2_non_crossing)},
                              {"planar", optional_bool(r.planar)},
                              {"locality", optional_bool(r.locality)}};
        row["seconds"] = {{"preprocess", r.seconds.preprocess},
                          {"local_search", r.seconds.local_search},
                          {"oracle", r.seconds.oracle},
                          {"witnesses", r.seconds.witnesses},
                          {"diagnostics", r.seconds.diagnostics}};
        if (r.ratio)
        {
            ratio_sum += *r.ratio;
            ++ratio_count;
        }
        rows.push_back(std::move(row));
    }
    Json summary{{"instances", records.size()},
                 {"ratio_count", ratio_count},
                 {"mean_ratio", ratio_count ? Json(ratio_sum / static_cast<double>(ratio_count)) : Json(nullptr)}};
    return {{"summary", std::move(summary)}, {"instances", std::move(rows)}};
}

} // namespace wvg
