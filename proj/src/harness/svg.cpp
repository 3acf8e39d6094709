#include "wvguard/harness/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace wvg
{

namespace
{

constexpr double panel = 480.0;
constexpr double margin = 24.0;

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000")
        s = "0.000";
    return s;
}

struct Frame
{
    double min_x = 0;
    double max_y = 0;
    double scale = 1;

    [[nodiscard]] std::pair<double, double> map(const Point& p) const
    {
        return {margin + (to_double(p.x) - min_x) * scale, margin + (max_y - to_double(p.y)) * scale};
    }
};

Frame fit(const Polygon& polygon)
{
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool first = true;
    for (const Point& p : polygon.vertices())
    {
        const double x = to_double(p.x);
        const double y = to_double(p.y);
        if (first)
        {
            min_x = max_x = x;
            min_y = max_y = y;
            first = false;
        }
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
    return {min_x, max_y, panel / span};
}

void line(std::ostream& out, std::pair<double, double> a, std::pair<double, double> b, const char* style)
{
    out << "<line x1=\"" << num(a.first) << "\" y1=\"" << num(a.second) << "\" x2=\"" << num(b.first)
        << "\" y2=\"" << num(b.second) << "\" " << style << "/>\n";
}

void dot(std::ostream& out, std::pair<double, double> c, double r, const char* style)
{
    out << "<circle cx=\"" << num(c.first) << "\" cy=\"" << num(c.second) << "\" r=\"" << num(r) << "\" " << style
        << "/>\n";
}

const char* node_fill(const SvgOverlays& overlays, std::size_t v)
{
    if (overlays.red && overlays.red->contains(v))
        return "fill=\"#d62728\"";
    if (overlays.blue && overlays.blue->contains(v))
        return "fill=\"#1f77b4\"";
    return "fill=\"#555555\"";
}

// Nodes sit on a circle in boundary order; the gap at the top separates v from u.
void circle_panel(std::ostream& out, const ExchangeGraph& graph, const SvgOverlays& overlays, double offset_x)
{
    const double cx = offset_x + margin + panel / 2;
    const double cy = margin + panel / 2;
    const double radius = panel * 0.32;
    const std::size_t count = graph.nodes.size();

    out << "<g id=\"circle-embedding\">\n";
    dot(out, {cx, cy}, radius, "fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\"");
    std::vector<std::pair<double, double>> at(count);
    std::vector<double> angle(count);
    auto slot = [&](std::size_t v) {
        return static_cast<std::size_t>(std::lower_bound(graph.nodes.begin(), graph.nodes.end(), v) -
                                        graph.nodes.begin());
    };
    for (std::size_t k = 0; k < count; ++k)
    {
        angle[k] = std::numbers::pi / 2 - 2 * std::numbers::pi * (static_cast<double>(k) + 0.5) /
                                              static_cast<double>(count);
        at[k] = {cx + radius * std::cos(angle[k]), cy - radius * std::sin(angle[k])};
    }

    for (const ColoredEdge& e : graph.e1)
        line(out, at[slot(e.first)], at[slot(e.second)], "stroke=\"#2ca02c\" stroke-width=\"1.5\"");
    // A2 edges leave the circle radially and run clockwise on a wider circle, so
    // nested intervals stay inside the ones enclosing them.
    for (const ColoredEdge& e : graph.e2)
    {
        const std::size_t a = std::min(slot(e.first), slot(e.second));
        const std::size_t b = std::max(slot(e.first), slot(e.second));
        const double span = angle[a] - angle[b];
        const double outer = radius * (1.08 + 0.4 * span / (2 * std::numbers::pi));
        auto on = [&](double r, std::size_t k) {
            return std::pair{cx + r * std::cos(angle[k]), cy - r * std::sin(angle[k])};
        };
        const auto start = on(outer, a);
        const auto end = on(outer, b);
        out << "<path d=\"M " << num(at[a].first) << ' ' << num(at[a].second) << " L " << num(start.first) << ' '
            << num(start.second) << " A " << num(outer) << ' ' << num(outer) << " 0 "
            << (span > std::numbers::pi ? 1 : 0) << " 1 " << num(end.first) << ' ' << num(end.second) << " L "
            << num(at[b].first) << ' ' << num(at[b].second)
            << "\" fill=\"none\" stroke=\"#9467bd\" stroke-width=\"1.5\"/>\n";
    }
    for (const ColoredEdge& e : graph.e3)
        line(out, at[slot(e.first)], at[slot(e.second)],
             "stroke=\"#7f7f7f\" stroke-width=\"1\" stroke-dasharray=\"2 3\"");
    for (std::size_t k = 0; k < count; ++k)
    {
        dot(out, at[k], 5, node_fill(overlays, graph.nodes[k]));
        out << "<text x=\"" << num(cx + (radius + 14) * std::cos(angle[k])) << "\" y=\""
            << num(cy - (radius + 14) * std::sin(angle[k]) + 4) << "\" font-size=\"11\" text-anchor=\"middle\">"
            << graph.nodes[k] << "</text>\n";
    }
    out << "</g>\n";
}

} // namespace

std::string render_svg(const Polygon& polygon, const SvgOverlays& overlays)
{
    const Frame frame = fit(polygon);
    const std::size_t n = polygon.size();
    const double width = (overlays.exchange ? 2 : 1) * (panel + 2 * margin);
    const double height = panel + 2 * margin;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
        << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    out << "<polygon id=\"outline\" points=\"";
    for (std::size_t k = 0; k < n; ++k)
    {
        const auto [x, y] = frame.map(polygon.vertex(k));
        out << (k ? " " : "") << num(x) << ',' << num(y);
    }
    out << "\" fill=\"#f4f1e8\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    line(out, frame.map(polygon.v()), frame.map(polygon.u()),
         "id=\"base-edge\" stroke=\"#ff7f0e\" stroke-width=\"3\"");

    if (overlays.exchange)
    {
        out << "<g id=\"a1\">\n";
        for (const Chord& c : overlays.exchange->a1)
            line(out, frame.map(polygon.vertex(c.from)), frame.map(polygon.vertex(c.to)),
                 "stroke=\"#2ca02c\" stroke-width=\"1\"");
        out << "</g>\n<g id=\"a2\">\n";
        for (const Chord& c : overlays.exchange->a2)
            line(out, frame.map(polygon.vertex(c.from)), frame.map(polygon.vertex(c.to)),
                 "stroke=\"#9467bd\" stroke-width=\"1\" stroke-dasharray=\"4 2\"");
        out << "</g>\n";
    }

    if (overlays.witnesses)
    {
        out << "<g id=\"witnesses\">\n";
        for (const BoundaryPoint& w : *overlays.witnesses)
            dot(out, frame.map(w.position(polygon)), 2, "fill=\"#17becf\"");
        out << "</g>\n";
    }

    for (std::size_t k = 0; k < n; ++k)
        dot(out, frame.map(polygon.vertex(k)), 2.5, "fill=\"black\"");

    if (overlays.exchange)
    {
        out << "<g id=\"nodes\">\n";
        for (std::size_t v : overlays.exchange->nodes)
            dot(out, frame.map(polygon.vertex(v)), 5, node_fill(overlays, v));
        out << "</g>\n";
    }
    if (overlays.guards)
    {
        out << "<g id=\"guards\">\n";
        for (std::size_t g : *overlays.guards)
            dot(out, frame.map(polygon.vertex(g)), 6, "fill=\"#ffbf00\" stroke=\"black\" stroke-width=\"1\"");
        out << "</g>\n";
    }

    if (overlays.exchange)
        circle_panel(out, *overlays.exchange, overlays, panel + 2 * margin);

    out << "</svg>\n";
    return out.str();
}

} // namespace wvg
