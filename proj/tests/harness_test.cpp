#include "support.hpp"

#include "wvguard/error.hpp"
#include "wvguard/harness/cli.hpp"
#include "wvguard/harness/instance_io.hpp"
#include "wvguard/harness/report.hpp"
#include "wvguard/harness/svg.hpp"
#include "wvguard/weak_visibility.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace wvg;
namespace fs = std::filesystem;

namespace
{

struct CliRun
{
    int code = 0;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class Scratch
{
public:
    Scratch()
    {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() / ("wvguard-" + std::string(info->test_suite_name()) + "-" + info->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    ~Scratch() { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& content) const
    {
        const fs::path path = dir_ / name;
        std::ofstream(path, std::ios::binary) << content;
        return path.string();
    }
    std::string instance(const std::string& name, const Polygon& p) const { return write(name, serialize_instance(p)); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
    fs::path dir_;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Json error_of(const CliRun& run)
{
    return Json::parse(run.err);
}

} // namespace

TEST(ParseRational, FractionsIntegersAndDecimals)
{
    EXPECT_EQ(parse_rational("3/4"), make_rational(3, 4));
    EXPECT_EQ(parse_rational("6/8"), make_rational(3, 4));
    EXPECT_EQ(parse_rational("-0.125"), make_rational(-1, 8));
    EXPECT_EQ(parse_rational("+7"), Rational(7));
    EXPECT_EQ(parse_rational(".5"), make_rational(1, 2));
    EXPECT_EQ(parse_rational("0.1"), make_rational(1, 10));
    EXPECT_EQ(parse_rational("123456789012345678901234567890/3"),
              Rational(mpz_class("41152263004115226300411522630")));
    for (const char* bad : {"", "-", "1/0", "abc", "1.2.3", "1/", "/2", "1e3", "5.", "0x10", "1/-2"})
        EXPECT_THROW((void)parse_rational(bad), std::invalid_argument) << bad;
}

TEST(ParseInstance, ReportsLineAndColumn)
{
    auto where = [](const std::string& text) {
        try
        {
            (void)parse_instance(text);
        }
        catch (const ParseError& e)
        {
            return std::pair{e.line(), e.column()};
        }
        return std::pair<std::size_t, std::size_t>{0, 0};
    };
    EXPECT_EQ(where("wvguard-instance 1\nvertices 3\n0 0\n1 x/2\n2 0\n"), (std::pair<std::size_t, std::size_t>{4, 3}));
    EXPECT_EQ(where("wvguard-instance 2\n"), (std::pair<std::size_t, std::size_t>{1, 18}));
    EXPECT_EQ(where("# lead\nhello 1\n"), (std::pair<std::size_t, std::size_t>{2, 1}));
    EXPECT_EQ(where("wvguard-instance 1\nvertices 3\n0 0\n  1 1 1\n"), (std::pair<std::size_t, std::size_t>{4, 7}));
    EXPECT_EQ(where("wvguard-instance 1\nbase 0 z\nvertices 3\n"), (std::pair<std::size_t, std::size_t>{2, 8}));
    EXPECT_EQ(where("wvguard-instance 1\nvertices 4\n0 0\n1 1\n2 0\n").first, 5U);
}

TEST(ParseInstance, CommentsMetadataAndDefaultBase)
{
    const InstanceFile f = parse_instance("wvguard-instance 1\r\n# c\nmeta seed 42\nmeta note two words  \n"
                                          "vertices 3\n0 0 # origin\n1/2 1\n1.0 0\n");
    EXPECT_EQ(f.vertices.size(), 3U);
    EXPECT_EQ(f.base, (std::pair<std::size_t, std::size_t>{2, 0}));
    EXPECT_EQ(f.metadata.at("seed"), "42");
    EXPECT_EQ(f.metadata.at("note"), "two words");
    const Polygon p = to_polygon(f);
    EXPECT_EQ(p.v(), wvg::test::pt(1, 0));
}

TEST(InstanceFile, RoundTripIsExact)
{
    std::vector<Polygon> polygons{wvg::test::notched(),
                                  normalize(wvg::test::pts({{1, 1}, {4, 5}, {0, 6}}), {0, 1})};
    // A rational similarity with a non-integer image.
    polygons.push_back(normalize({{Rational(0), Rational(0)}, {make_rational(1, 3), Rational(0)},
                                  {make_rational(1, 7), make_rational(5, 11)}},
                                 {0, 1}));
    for (const auto& entry : wvg::test::corpus(6, 6, 12, 8))
        polygons.push_back(entry.polygon);
    for (const auto& entry : wvg::test::concave_corpus(3, 9, 12, true, 8))
        polygons.push_back(entry.polygon);
    for (const Polygon& p : polygons)
    {
        const std::string text = serialize_instance(p, {{"k", "v"}});
        const InstanceFile f = parse_instance(text);
        EXPECT_EQ(f.vertices, p.vertices());
        EXPECT_EQ(to_polygon(f), p);
        EXPECT_EQ(serialize_instance(to_polygon(f), f.metadata), text);
    }
}

TEST(Generator, TerrainBasics)
{
    const Polygon tri = generate_terrain_polygon(3, 1);
    EXPECT_EQ(tri.size(), 3U);
    for (std::size_t n : {3U, 4U, 9U, 20U})
        for (std::uint64_t seed = 0; seed < 10; ++seed)
        {
            const Polygon p = generate_terrain_polygon(n, seed);
            EXPECT_EQ(p.size(), n);
            EXPECT_TRUE(p.strict());
            for (std::size_t k = 1; k + 2 < n; ++k)
            {
                EXPECT_LT(p.vertex(k).x, p.vertex(k + 1).x);
            }
            EXPECT_TRUE(verify_weak_visibility(p).verified()) << n << ' ' << seed;
            EXPECT_EQ(p, generate_terrain_polygon(n, seed));
        }
    EXPECT_THROW((void)generate_terrain_polygon(2, 0), Error);
}

TEST(Generator, GeneralFamilyDeterministicAndValid)
{
    for (std::uint64_t seed = 0; seed < 8; ++seed)
    {
        const Polygon p = generate_weakly_visible_polygon(12, seed);
        EXPECT_EQ(p.size(), 12U);
        EXPECT_TRUE(verify_weak_visibility(p).verified());
        EXPECT_EQ(p, generate_weakly_visible_polygon(12, seed));
    }
}

TEST(Generator, ConcaveParameterContract)
{
    for (std::uint64_t seed = 0; seed < 6; ++seed)
    {
        GeneralParams params;
        params.concave_u = true;
        const Polygon p = generate_weakly_visible_polygon(11, seed, params);
        EXPECT_TRUE(p.concave_at_u());
        EXPECT_FALSE(p.concave_at_v());
        EXPECT_TRUE(verify_weak_visibility(p).verified());
        params.concave_v = true;
        const Polygon q = generate_weakly_visible_polygon(13, seed, params);
        EXPECT_TRUE(q.concave_at_u());
        EXPECT_TRUE(q.concave_at_v());
        EXPECT_TRUE(verify_weak_visibility(q).verified());
    }
}

TEST(Generator, SomeInstanceAtTwentyNeedsTwoGuards)
{
    std::size_t largest = 0;
    for (std::uint64_t seed = 0; seed < 100 && largest < 2; ++seed)
    {
        const Polygon p = generate_weakly_visible_polygon(20, seed);
        const auto best = brute_force_guards(p, TargetSet::all_vertices(), 20);
        ASSERT_TRUE(best.has_value());
        largest = std::max(largest, best->size());
    }
    EXPECT_GE(largest, 2U);
}

TEST(Cli, GuardOnSquareWithKTwo)
{
    Scratch dir;
    const std::string file = dir.instance("square.wvg", wvg::test::square());
    const CliRun run = cli({"guard", file, "--k", "2"});
    ASSERT_EQ(run.code, 0) << run.err;
    const Json doc = Json::parse(run.out);
    EXPECT_EQ(doc["guards"].size(), 1U);
    EXPECT_EQ(doc["k"], 2);
}

TEST(Cli, GuardWithEpsilonAndBoundaryTarget)
{
    Scratch dir;
    const std::string file = dir.instance("notched.wvg", wvg::test::notched());
    const CliRun eps = cli({"guard", file, "--epsilon", "1/2", "--target", "boundary"});
    ASSERT_EQ(eps.code, 0) << eps.err;
    EXPECT_EQ(Json::parse(eps.out)["k"], 4);
    EXPECT_EQ(cli({"guard", file}).code, 2);
    EXPECT_EQ(cli({"guard", file, "--k", "1", "--epsilon", "1/2"}).code, 2);
    EXPECT_EQ(cli({"guard", file, "--epsilon", "zero"}).code, 2);
}

TEST(Cli, SelfIntersectingInputIsNotSimple)
{
    Scratch dir;
    const std::string file = dir.write("bow.wvg", "wvguard-instance 1\nvertices 4\n0 0\n2 2\n2 0\n0 2\n");
    for (const char* sub : {"check", "guard"})
    {
        std::vector<std::string> args{sub, file};
        if (std::string(sub) == "guard")
        {
            args.insert(args.end(), {"--k", "1"});
        }
        const CliRun run = cli(args);
        EXPECT_EQ(run.code, 2);
        EXPECT_EQ(error_of(run)["error"], "NotSimple");
    }
}

TEST(Cli, ParseErrorCarriesPosition)
{
    Scratch dir;
    const std::string file = dir.write("bad.wvg", "wvguard-instance 1\nvertices 3\n0 0\n1 1/0\n2 0\n");
    const CliRun run = cli({"check", file});
    EXPECT_EQ(run.code, 2);
    const Json e = error_of(run);
    EXPECT_EQ(e["error"], "Parse");
    EXPECT_EQ(e["line"], 4);
    EXPECT_EQ(e["column"], 3);
    EXPECT_EQ(cli({"check", dir.path("missing.wvg")}).code, 2);
    EXPECT_EQ(cli({"frobnicate"}).code, 2);
    EXPECT_EQ(error_of(cli({"gen", "--n", "2", "--seed", "1"}))["error"], "Usage");
}

TEST(Cli, CheckReportsVerdictAndRejectsHiddenPocket)
{
    Scratch dir;
    const CliRun ok = cli({"check", dir.instance("n.wvg", wvg::test::notched())});
    ASSERT_EQ(ok.code, 0);
    EXPECT_EQ(Json::parse(ok.out)["weak_visibility"]["status"], "Verified");
    const Polygon hidden = wvg::test::poly({{0, 0}, {0, 4}, {6, 4}, {6, 6}, {0, 6}, {0, 8}, {8, 8}, {8, 0}});
    const CliRun bad = cli({"check", dir.instance("h.wvg", hidden)});
    EXPECT_EQ(bad.code, 2);
    EXPECT_EQ(error_of(bad)["error"], "NotWeaklyVisible");
}

TEST(Cli, ExitCodesForInfeasibleAndCheckFailures)
{
    Scratch dir;
    const std::string big = dir.instance("big.wvg", wvg::test::convex(26));
    const CliRun too_large = cli({"optimal", big});
    EXPECT_EQ(too_large.code, 3);
    EXPECT_EQ(error_of(too_large)["error"], "InstanceTooLarge");
    EXPECT_EQ(cli({"optimal", big, "--limit", "30"}).code, 0);
    const std::string notched = dir.instance("n.wvg", wvg::test::notched());
    const CliRun capped = cli({"optimal", notched, "--cap", "0"});
    EXPECT_EQ(capped.code, 3);
    EXPECT_EQ(error_of(capped)["error"], "Unguardable");
    EXPECT_EQ(exit_code_for(ErrorKind::LaminarityViolation), 4);
    EXPECT_EQ(exit_code_for(ErrorKind::CheckFailed), 4);
}

TEST(Cli, GenWritesReadableInstance)
{
    Scratch dir;
    const std::string file = dir.path("g.wvg");
    ASSERT_EQ(cli({"gen", "--n", "11", "--seed", "5", "--concave", "u", "-o", file}).code, 0);
    const InstanceFile f = read_instance_file(file);
    EXPECT_EQ(f.metadata.at("seed"), "5");
    EXPECT_EQ(f.metadata.at("concave"), "u");
    GeneralParams params;
    params.concave_u = true;
    EXPECT_EQ(to_polygon(f), generate_weakly_visible_polygon(11, 5, params));
    const CliRun stdout_run = cli({"gen", "--n", "11", "--seed", "5", "--concave", "u"});
    EXPECT_EQ(stdout_run.out, slurp(file));
    EXPECT_EQ(cli({"gen", "--n", "8", "--seed", "1", "--family", "terrain", "--concave", "u"}).code, 2);
}

TEST(Cli, DiagnoseOnGeneratedFilesHolds)
{
    Scratch dir;
    for (std::uint64_t seed = 1; seed <= 6; ++seed)
    {
        const std::string file = dir.path("d" + std::to_string(seed) + ".wvg");
        const std::string concave = seed % 2 ? "none" : "u";
        ASSERT_EQ(cli({"gen", "--n", "12", "--seed", std::to_string(seed), "--concave", concave, "-o", file}).code, 0);
        const CliRun run = cli({"diagnose", file, "--k", "1"});
        ASSERT_EQ(run.code, 0) << run.err;
        const Json d = Json::parse(run.out)["diagnostics"];
        EXPECT_TRUE(d["all_passed"].get<bool>());
        for (const auto& [name, check] : d["checks"].items())
        {
            const std::string verdict = check["verdict"];
            EXPECT_TRUE(verdict == "Holds" || verdict == "Planar") << name << ' ' << verdict;
        }
    }
}

TEST(Cli, WitnessesAndExperiment)
{
    Scratch dir;
    const std::string a = dir.instance("a.wvg", wvg::test::notched());
    const std::string b = dir.instance("b.wvg", wvg::test::corpus(1, 10, 10, 3)[0].polygon);
    const CliRun w = cli({"witnesses", a});
    ASSERT_EQ(w.code, 0);
    const Json wj = Json::parse(w.out);
    EXPECT_LE(wj["witnesses"]["points"].size(), wj["bound"].get<std::size_t>());
    const CliRun e = cli({"experiment", b, a, "--witnesses"});
    ASSERT_EQ(e.code, 0) << e.err;
    const Json ej = Json::parse(e.out);
    ASSERT_EQ(ej["instances"].size(), 2U);
    EXPECT_EQ(ej["instances"][0]["id"], a);
}

TEST(Cli, RepeatedRunsAreByteIdentical)
{
    Scratch dir;
    const std::string file = dir.instance("p.wvg", wvg::test::corpus(1, 12, 12, 21)[0].polygon);
    const std::vector<std::vector<std::string>> commands{
        {"guard", file, "--k", "2"},
        {"guard", file, "--k", "1", "--target", "boundary"},
        {"diagnose", file, "--k", "2"},
        {"render", file},
        {"render", file, "--overlay", "guards", "--overlay", "exchange-graph", "--overlay", "witnesses"},
    };
    for (const auto& args : commands)
    {
        const CliRun first = cli(args);
        const CliRun second = cli(args);
        EXPECT_EQ(first.code, 0) << first.err;
        EXPECT_EQ(first.out, second.out) << args[0];
        EXPECT_FALSE(first.out.empty());
    }
    ASSERT_EQ(cli({"render", file, "-o", dir.path("one.svg")}).code, 0);
    ASSERT_EQ(cli({"render", file, "-o", dir.path("two.svg")}).code, 0);
    EXPECT_EQ(slurp(dir.path("one.svg")), slurp(dir.path("two.svg")));
}

TEST(Svg, OutlineOnlyAndDeterministic)
{
    const Polygon p = wvg::test::notched();
    const std::string svg = render_svg(p);
    EXPECT_EQ(svg, render_svg(p));
    EXPECT_NE(svg.find("id=\"outline\""), std::string::npos);
    EXPECT_NE(svg.find("id=\"base-edge\""), std::string::npos);
    EXPECT_EQ(svg.find("id=\"guards\""), std::string::npos);
    EXPECT_EQ(svg.find("circle-embedding"), std::string::npos);
}

TEST(Svg, GuardsOnConvexResultMarkOneVertex)
{
    Scratch dir;
    const std::string file = dir.instance("c.wvg", wvg::test::convex(9));
    const CliRun run = cli({"render", file, "--overlay", "guards"});
    ASSERT_EQ(run.code, 0);
    const std::size_t open = run.out.find("<g id=\"guards\">");
    ASSERT_NE(open, std::string::npos);
    const std::string group = run.out.substr(open, run.out.find("</g>", open) - open);
    std::size_t marks = 0;
    for (std::size_t at = group.find("<circle"); at != std::string::npos; at = group.find("<circle", at + 1))
        ++marks;
    EXPECT_EQ(marks, 1U);
}

TEST(Svg, ExchangeGraphMatchesGolden)
{
    const std::string instance = std::string(WVG_GOLDEN_DIR) + "/exchange_n10.wvg";
    const std::string golden = std::string(WVG_GOLDEN_DIR) + "/exchange_n10.svg";
    const CliRun run = cli({"render", instance, "--overlay", "exchange-graph", "--overlay", "guards", "--k", "1"});
    ASSERT_EQ(run.code, 0) << run.err;
    if (std::getenv("WVG_UPDATE_GOLDEN"))
    {
        std::ofstream(golden, std::ios::binary) << run.out;
    }
    EXPECT_EQ(run.out, slurp(golden));
    // A1 chords inside the circle, A2 arcs outside.
    EXPECT_NE(run.out.find("<g id=\"a1\">"), std::string::npos);
    EXPECT_NE(run.out.find("<g id=\"a2\">"), std::string::npos);
    EXPECT_NE(run.out.find(" A "), std::string::npos);
}

TEST(Experiment, RatiosAtLeastOneAndSortedById)
{
    std::vector<InstanceInput> inputs;
    for (const auto& entry : wvg::test::corpus(8, 8, 12, 17))
        inputs.push_back({entry.id, entry.polygon});
    for (const auto& entry : wvg::test::concave_corpus(2, 10, 12, false, 17))
        inputs.push_back({"c-" + entry.id, entry.polygon});
    inputs.push_back({"big", wvg::test::convex(26)});
    std::reverse(inputs.begin(), inputs.end());
    ExperimentOptions options;
    options.witnesses = true;
    const ExperimentReport report = run_experiment(inputs, options);
    ASSERT_EQ(report.records.size(), inputs.size());
    for (std::size_t i = 1; i < report.records.size(); ++i)
        EXPECT_LT(report.records[i - 1].id, report.records[i].id);
    for (const InstanceRecord& r : report.records)
    {
        EXPECT_FALSE(r.error.has_value()) << r.id << ' ' << r.error.value_or("");
        if (r.id == "big")
        {
            EXPECT_FALSE(r.oracle_size.has_value());
            EXPECT_FALSE(r.ratio.has_value());
            continue;
        }
        ASSERT_TRUE(r.ratio.has_value()) << r.id;
        EXPECT_GE(*r.ratio, 1.0);
        EXPECT_GE(r.local_size, *r.oracle_size);
        EXPECT_TRUE(r.diagnostics_passed.value_or(false)) << r.id;
        EXPECT_TRUE(r.witness_count.has_value());
        if (r.id.rfind("c-", 0) == 0)
        {
            EXPECT_TRUE(r.forced_guards.contains(0)) << r.id;
        }
    }
    const Json doc = report.to_json();
    EXPECT_EQ(doc["instances"].size(), inputs.size());
    EXPECT_TRUE(doc["summary"].contains("mean_ratio"));
}
