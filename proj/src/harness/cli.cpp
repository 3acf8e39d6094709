#include "wvguard/harness/cli.hpp"

#include "wvguard/diagnostics.hpp"
#include "wvguard/error.hpp"
#include "wvguard/extensions.hpp"
#include "wvguard/harness/generator.hpp"
#include "wvguard/harness/instance_io.hpp"
#include "wvguard/harness/report.hpp"
#include "wvguard/harness/svg.hpp"
#include "wvguard/weak_visibility.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

namespace wvg
{

namespace
{

void emit(std::ostream& out, const Json& doc)
{
    out << doc.dump(2) << '\n';
}

void write_artifact(const std::string& path, const std::string& content, std::ostream& out)
{
    if (path.empty() || path == "-")
    {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw Error(ErrorKind::Io, "cannot open " + path + " for writing");
    file << content;
    if (!file)
        throw Error(ErrorKind::Io, "failed writing " + path);
}

Polygon load(const std::string& path)
{
    return to_polygon(read_instance_file(path));
}

Rational parse_rational_option(const std::string& text, const char* name)
{
    try
    {
        return parse_rational(text);
    }
    catch (const std::invalid_argument&)
    {
        throw Error(ErrorKind::Usage, std::string(name) + " is not a rational number: " + text);
    }
}

Json polygon_json(const Polygon& polygon)
{
    Json out = Json::array();
    for (const Point& p : polygon.vertices())
        out.push_back(to_json(p));
    return out;
}

struct Options
{
    std::string file;
    std::size_t samples = default_samples_per_edge;
    std::optional<std::size_t> k;
    std::string epsilon;
    std::string alpha = "1";
    std::string target = "vertices";
    std::optional<std::size_t> cap;
    std::size_t oracle_limit = default_oracle_vertex_limit;
    std::uint64_t trials = default_order_claim_trials;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::string family = "general";
    std::string concave = "none";
    std::string output;
    std::vector<std::string> overlays;
    std::vector<std::string> files;
    bool witnesses = false;
    bool no_diagnostics = false;
};

int cmd_check(const Options& o, std::ostream& out)
{
    const Polygon polygon = load(o.file);
    const WeakVisibilityVerdict verdict = verify_weak_visibility(polygon, o.samples);
    emit(out, {{"n", polygon.size()},
               {"simple", true},
               {"strict", polygon.strict()},
               {"concave_at_u", polygon.concave_at_u()},
               {"concave_at_v", polygon.concave_at_v()},
               {"weak_visibility", to_json(verdict)}});
    if (!verdict.verified())
        throw Error(ErrorKind::NotWeaklyVisible, "polygon is not weakly visible from its base edge");
    return 0;
}

LocalSearchConfig search_config(const Options& o)
{
    if (o.k.has_value() == !o.epsilon.empty())
        throw Error(ErrorKind::Usage, "exactly one of --k and --epsilon is required");
    if (o.k)
    {
        LocalSearchConfig config;
        config.k = *o.k;
        return config;
    }
    const Rational eps = parse_rational_option(o.epsilon, "--epsilon");
    const Rational alpha = parse_rational_option(o.alpha, "--alpha");
    if (eps <= 0 || alpha <= 0)
        throw Error(ErrorKind::Usage, "--epsilon and --alpha must be positive");
    return LocalSearchConfig::from_epsilon(eps, alpha);
}

int cmd_guard(const Options& o, std::ostream& out)
{
    const LocalSearchConfig config = search_config(o);
    const Polygon polygon = load(o.file);
    const GuardPipelineResult result =
        o.target == "boundary" ? guard_boundary(polygon, config) : guard_vertices(polygon, config);
    Json doc = to_json(result, config.k);
    doc["target"] = o.target;
    emit(out, doc);
    return 0;
}

int cmd_optimal(const Options& o, std::ostream& out)
{
    const Polygon polygon = load(o.file);
    const std::size_t cap = o.cap.value_or(polygon.size());
    const auto best = brute_force_guards(polygon, TargetSet::all_vertices(), cap, o.oracle_limit);
    if (!best)
        throw Error(ErrorKind::Unguardable, "no guard set of size at most " + std::to_string(cap) + " exists");
    emit(out, {{"guards", to_json(*best)}, {"size", best->size()}});
    return 0;
}

int cmd_diagnose(const Options& o, std::ostream& out)
{
    if (!o.k)
        throw Error(ErrorKind::Usage, "--k is required");
    const Polygon polygon = load(o.file);
    const PreprocessResult pre = preprocess_concave_endpoints(polygon);
    const CoverageMatrix matrix = CoverageMatrix::build(pre.reduced, TargetSet::all_vertices());
    const auto optimum = brute_force_guards(matrix, pre.reduced.size(), o.oracle_limit);
    if (!optimum)
        throw Error(ErrorKind::Unguardable, "the vertices do not guard the polygon");
    LocalSearchConfig config;
    config.k = *o.k;
    const LocalSearchResult search = local_search(matrix, config);
    const DiagnosticsReport report = diagnose(pre.reduced, *optimum, search.guards, o.trials, o.seed);
    Json doc{{"k", *o.k},
             {"reduced_polygon", polygon_json(pre.reduced)},
             {"index_map", pre.index_map},
             {"diagnostics", to_json(report)}};
    emit(out, doc);
    if (!report.all_passed())
        throw Error(ErrorKind::CheckFailed, "at least one diagnostic check failed");
    return 0;
}

int cmd_witnesses(const Options& o, std::ostream& out)
{
    const Polygon polygon = load(o.file);
    const PreprocessResult pre = preprocess_concave_endpoints(polygon);
    const WitnessSet witnesses = generate_witnesses(pre.reduced);
    Json doc{{"reduced_polygon", polygon_json(pre.reduced)},
             {"index_map", pre.index_map},
             {"bound", witness_bound(pre.reduced)},
             {"witnesses", to_json(witnesses)}};
    emit(out, doc);
    return 0;
}

int cmd_gen(const Options& o, std::ostream& out)
{
    std::map<std::string, std::string> meta{
        {"family", o.family}, {"n", std::to_string(o.n)}, {"seed", std::to_string(o.seed)}};
    std::optional<Polygon> polygon;
    if (o.family == "terrain")
    {
        if (o.concave != "none")
            throw Error(ErrorKind::Usage, "--concave needs --family general");
        polygon = generate_terrain_polygon(o.n, o.seed);
    }
    else
    {
        GeneralParams params;
        params.concave_u = o.concave == "u" || o.concave == "both";
        params.concave_v = o.concave == "v" || o.concave == "both";
        meta["concave"] = o.concave;
        polygon = generate_weakly_visible_polygon(o.n, o.seed, params);
    }
    write_artifact(o.output, serialize_instance(*polygon, meta), out);
    return 0;
}

int cmd_render(const Options& o, std::ostream& out)
{
    const Polygon raw = load(o.file);
    auto wants = [&](const char* name) {
        return std::find(o.overlays.begin(), o.overlays.end(), name) != o.overlays.end();
    };
    if (o.overlays.empty())
    {
        write_artifact(o.output, render_svg(raw), out);
        return 0;
    }

    LocalSearchConfig config;
    config.k = o.k.value_or(2);
    const PreprocessResult pre = preprocess_concave_endpoints(raw);
    const bool reduced_frame = wants("witnesses") || wants("exchange-graph");
    const Polygon& shown = reduced_frame ? pre.reduced : raw;
    const CoverageMatrix matrix = CoverageMatrix::build(pre.reduced, TargetSet::all_vertices());
    const LocalSearchResult search = local_search(matrix, config);

    SvgOverlays overlays;
    if (wants("guards"))
    {
        if (reduced_frame)
        {
            std::vector<std::size_t> forced;
            for (std::size_t g : pre.forced_guards)
                forced.push_back(g == 0 ? 0 : pre.reduced.size() - 1);
            overlays.guards = search.guards.united(GuardSet(forced));
        }
        else
        {
            overlays.guards = pre.to_original(search.guards).united(pre.forced_guards);
        }
    }
    if (wants("witnesses"))
        overlays.witnesses = generate_witnesses(pre.reduced).points;
    if (wants("exchange-graph"))
    {
        const auto optimum = brute_force_guards(matrix, pre.reduced.size(), o.oracle_limit);
        if (!optimum)
            throw Error(ErrorKind::Unguardable, "the vertices do not guard the polygon");
        const ColoredSets colors(*optimum, search.guards);
        const VisibilityGraph vis = visibility_graph(pre.reduced);
        overlays.exchange = build_exchange_graph(colors, compute_lambda_rho(vis, colors));
        overlays.red = colors.red();
        overlays.blue = colors.blue();
    }
    write_artifact(o.output, render_svg(shown, overlays), out);
    return 0;
}

int cmd_experiment(const Options& o, std::ostream& out)
{
    std::vector<InstanceInput> inputs;
    for (const std::string& f : o.files)
        inputs.push_back({f, load(f)});
    ExperimentOptions options;
    options.k = o.k.value_or(2);
    options.oracle_vertex_limit = o.oracle_limit;
    options.witnesses = o.witnesses;
    options.diagnostics = !o.no_diagnostics;
    options.order_claim_trials = o.trials;
    options.seed = o.seed;
    write_artifact(o.output, run_experiment(inputs, options).to_json().dump(2) + "\n", out);
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Vertex guarding for weakly-visible polygons", "wvguard"};
    app.require_subcommand(1, 1);
    Options o;

    auto* check = app.add_subcommand("check", "Validate an instance and verify weak visibility");
    check->add_option("file", o.file, "Instance file")->required();
    check->add_option("--samples", o.samples, "Samples per edge for the visibility check");

    auto* guard = app.add_subcommand("guard", "Local-search guard set");
    guard->add_option("file", o.file, "Instance file")->required();
    guard->add_option("--k", o.k, "Swap size");
    guard->add_option("--epsilon", o.epsilon, "Approximation parameter (k = ceil(alpha / epsilon^2))");
    guard->add_option("--alpha", o.alpha, "Constant in the swap-size formula");
    guard->add_option("--target", o.target, "What must be guarded")
        ->check(CLI::IsMember({"vertices", "boundary"}));

    auto* optimal = app.add_subcommand("optimal", "Brute-force minimum guard set");
    optimal->add_option("file", o.file, "Instance file")->required();
    optimal->add_option("--cap", o.cap, "Largest guard set size to try");
    optimal->add_option("--limit", o.oracle_limit, "Refuse instances with more vertices");

    auto* diag = app.add_subcommand("diagnose", "Build the exchange graph and run every check");
    diag->add_option("file", o.file, "Instance file")->required();
    diag->add_option("--k", o.k, "Swap size")->required();
    diag->add_option("--trials", o.trials, "Quadruple budget for the order check");
    diag->add_option("--seed", o.seed, "Seed for sampled order checks");
    diag->add_option("--limit", o.oracle_limit, "Oracle vertex limit");

    auto* wit = app.add_subcommand("witnesses", "Boundary witness points");
    wit->add_option("file", o.file, "Instance file")->required();

    auto* gen = app.add_subcommand("gen", "Generate an instance");
    gen->add_option("--n", o.n, "Vertex count")->required()->check(CLI::Range(3, 100000));
    gen->add_option("--seed", o.seed, "Random seed")->required();
    gen->add_option("--family", o.family, "Polygon family")->check(CLI::IsMember({"terrain", "general"}));
    gen->add_option("--concave", o.concave, "Reflex base angles")
        ->check(CLI::IsMember({"none", "u", "v", "both"}));
    gen->add_option("-o,--output", o.output, "Output file (stdout if omitted)");

    auto* render = app.add_subcommand("render", "SVG rendering");
    render->add_option("file", o.file, "Instance file")->required();
    render->add_option("--overlay", o.overlays, "Overlay layers")
        ->check(CLI::IsMember({"guards", "witnesses", "exchange-graph"}));
    render->add_option("--k", o.k, "Swap size for guards and the exchange graph (default 2)");
    render->add_option("--limit", o.oracle_limit, "Oracle vertex limit");
    render->add_option("-o,--output", o.output, "Output file (stdout if omitted)");

    auto* exp = app.add_subcommand("experiment", "Compare local search against the oracle over many instances");
    exp->add_option("files", o.files, "Instance files")->required();
    exp->add_option("--k", o.k, "Swap size (default 2)");
    exp->add_option("--limit", o.oracle_limit, "Oracle vertex limit");
    exp->add_option("--trials", o.trials, "Quadruple budget for the order check");
    exp->add_option("--seed", o.seed, "Seed for sampled order checks");
    exp->add_flag("--witnesses", o.witnesses, "Also count witnesses");
    exp->add_flag("--no-diagnostics", o.no_diagnostics, "Skip the diagnostics");
    exp->add_option("-o,--output", o.output, "Report file (stdout if omitted)");

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e, out, err);
    }
    catch (const CLI::CallForAllHelp& e)
    {
        return app.exit(e, out, err);
    }
    catch (const CLI::ParseError& e)
    {
        emit(err, {{"error", "Usage"}, {"message", e.what()}});
        return exit_code_for(ErrorKind::Usage);
    }

    try
    {
        if (*check)
            return cmd_check(o, out);
        if (*guard)
            return cmd_guard(o, out);
        if (*optimal)
            return cmd_optimal(o, out);
        if (*diag)
            return cmd_diagnose(o, out);
        if (*wit)
            return cmd_witnesses(o, out);
        if (*gen)
            return cmd_gen(o, out);
        if (*render)
            return cmd_render(o, out);
        return cmd_experiment(o, out);
    }
    catch (const ParseError& e)
    {
        emit(err, {{"error", std::string(to_string(e.kind()))},
                   {"message", e.what()},
                   {"line", e.line()},
                   {"column", e.column()}});
        return exit_code_for(e.kind());
    }
    catch (const Error& e)
    {
        emit(err, {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}});
        return exit_code_for(e.kind());
    }
    catch (const std::exception& e)
    {
        emit(err, {{"error", "Internal"}, {"message", e.what()}});
        return 4;
    }
}

} // namespace wvg
