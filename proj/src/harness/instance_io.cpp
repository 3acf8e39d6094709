#include "wvguard/harness/instance_io.hpp"

#include "wvguard/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wvg
{

namespace
{

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

struct Token
{
    std::string_view text;
    std::size_t column; // 1-based
};

std::vector<Token> split(std::string_view line)
{
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size())
    {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i >= line.size())
            break;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        tokens.push_back({line.substr(start, i - start), start + 1});
    }
    return tokens;
}

std::size_t parse_index(const Token& token, std::size_t line)
{
    if (!all_digits(token.text) || token.text.size() > 9)
        throw ParseError(line, token.column, "expected a non-negative integer, got '" + std::string(token.text) + "'");
    return std::stoul(std::string(token.text));
}

} // namespace

Rational parse_rational(std::string_view token)
{
    std::string_view body = token;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+'))
    {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    Rational value;
    if (const auto slash = body.find('/'); slash != std::string_view::npos)
    {
        const std::string_view num = body.substr(0, slash);
        const std::string_view den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed fraction");
        const mpz_class d(std::string(den), 10);
        if (d == 0)
            throw std::invalid_argument("zero denominator");
        value = Rational(mpz_class(std::string(num), 10), d);
        value.canonicalize();
    }
    else
    {
        const auto dot = body.find('.');
        const std::string_view whole = body.substr(0, dot);
        const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac)) || (dot != std::string_view::npos && frac.empty()))
            throw std::invalid_argument("malformed number");
        mpz_class scale = 1;
        for (std::size_t k = 0; k < frac.size(); ++k)
            scale *= 10;
        const std::string digits = std::string(whole.empty() ? "0" : whole) + std::string(frac);
        value = Rational(mpz_class(digits, 10), scale);
        value.canonicalize();
    }
    return negative ? Rational(-value) : value;
}

InstanceFile parse_instance(std::string_view text)
{
    InstanceFile file;
    bool have_header = false;
    bool have_base = false;
    std::size_t expected = 0;
    bool in_vertices = false;
    std::size_t line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size())
    {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        const std::vector<Token> tokens = split(line);
        if (tokens.empty())
        {
            if (end == text.size())
            {
                // Nothing follows the final newline.
                if (line.empty() && line_no > 1)
                    --line_no;
                break;
            }
            continue;
        }

        if (!have_header)
        {
            if (tokens[0].text != "wvguard-instance" || tokens.size() != 2)
                throw ParseError(line_no, tokens[0].column, "expected header 'wvguard-instance <version>'");
            if (tokens[1].text != std::to_string(instance_format_version))
                throw ParseError(line_no, tokens[1].column, "unsupported format version '" +
                                                                std::string(tokens[1].text) + "'");
            have_header = true;
        }
        else if (in_vertices)
        {
            if (tokens.size() != 2)
                throw ParseError(line_no, tokens.size() > 2 ? tokens[2].column : tokens[0].column,
                                 "expected exactly two coordinates");
            Point p;
            for (int axis = 0; axis < 2; ++axis)
            {
                try
                {
                    (axis == 0 ? p.x : p.y) = parse_rational(tokens[axis].text);
                }
                catch (const std::invalid_argument& e)
                {
                    throw ParseError(line_no, tokens[axis].column,
                                     std::string(e.what()) + ": '" + std::string(tokens[axis].text) + "'");
                }
            }
            file.vertices.push_back(std::move(p));
            in_vertices = file.vertices.size() < expected;
        }
        else if (tokens[0].text == "meta")
        {
            if (tokens.size() < 3)
                throw ParseError(line_no, tokens[0].column, "expected 'meta <key> <value>'");
            std::string_view value = line.substr(tokens[2].column - 1);
            while (!value.empty() && std::isspace(static_cast<unsigned char>(value.back())))
                value.remove_suffix(1);
            file.metadata[std::string(tokens[1].text)] = std::string(value);
        }
        else if (tokens[0].text == "base")
        {
            if (tokens.size() != 3)
                throw ParseError(line_no, tokens[0].column, "expected 'base <i> <j>'");
            file.base = {parse_index(tokens[1], line_no), parse_index(tokens[2], line_no)};
            have_base = true;
        }
        else if (tokens[0].text == "vertices")
        {
            if (tokens.size() != 2)
                throw ParseError(line_no, tokens[0].column, "expected 'vertices <count>'");
            if (!file.vertices.empty())
                throw ParseError(line_no, tokens[0].column, "duplicate vertex block");
            expected = parse_index(tokens[1], line_no);
            if (expected < 3)
                throw ParseError(line_no, tokens[1].column, "a polygon needs at least 3 vertices");
            in_vertices = true;
        }
        else
        {
            throw ParseError(line_no, tokens[0].column, "unknown directive '" + std::string(tokens[0].text) + "'");
        }
        if (end == text.size())
            break;
    }
    if (!have_header)
        throw ParseError(line_no, 1, "missing header");
    if (expected == 0)
        throw ParseError(line_no, 1, "missing vertex block");
    if (file.vertices.size() != expected)
        throw ParseError(line_no, 1, "expected " + std::to_string(expected) + " vertices, found " +
                                         std::to_string(file.vertices.size()));
    if (!have_base)
        file.base = {expected - 1, 0};
    return file;
}

InstanceFile read_instance_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::Io, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

Polygon to_polygon(const InstanceFile& file)
{
    return normalize(file.vertices, file.base, NormalizeOptions{true});
}

std::string serialize_instance(const Polygon& polygon, const std::map<std::string, std::string>& metadata)
{
    std::ostringstream out;
    out << "wvguard-instance " << instance_format_version << '\n';
    for (const auto& [key, value] : metadata)
        out << "meta " << key << ' ' << value << '\n';
    out << "base " << polygon.size() - 1 << " 0\n";
    out << "vertices " << polygon.size() << '\n';
    for (const Point& p : polygon.vertices())
        out << to_fraction_string(p.x) << ' ' << to_fraction_string(p.y) << '\n';
    return out.str();
}

void write_instance_file(const std::filesystem::path& path, const Polygon& polygon,
                         const std::map<std::string, std::string>& metadata)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::Io, "cannot write " + path.string());
    out << serialize_instance(polygon, metadata);
}

} // namespace wvg
