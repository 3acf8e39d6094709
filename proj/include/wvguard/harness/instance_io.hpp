#pragma once

#include "wvguard/geometry.hpp"

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wvg
{

inline constexpr int instance_format_version = 1;

/// Text instance format:
///
///     wvguard-instance 1
///     # comment
///     meta <key> <value>
///     base <i> <j>            (optional; defaults to the closing edge n-1, 0)
///     vertices <n>
///     <x> <y>                 (n lines, each "p/q" or a finite decimal)
struct InstanceFile
{
    int version = instance_format_version;
    std::vector<Point> vertices;
    std::pair<std::size_t, std::size_t> base{0, 0};
    std::map<std::string, std::string> metadata;
};

/// Exact rational from "p/q", an integer, or a finite decimal. Throws
/// std::invalid_argument on malformed input.
[[nodiscard]] Rational parse_rational(std::string_view token);

/// Throws ParseError with the offending line and column.
[[nodiscard]] InstanceFile parse_instance(std::string_view text);
[[nodiscard]] InstanceFile read_instance_file(const std::filesystem::path& path);

/// Normalizes the parsed vertex list. Concave base angles are accepted so the
/// preprocessing can see them; callers needing a strict polygon check strict().
[[nodiscard]] Polygon to_polygon(const InstanceFile& file);

[[nodiscard]] std::string serialize_instance(const Polygon& polygon,
                                             const std::map<std::string, std::string>& metadata = {});
void write_instance_file(const std::filesystem::path& path, const Polygon& polygon,
                         const std::map<std::string, std::string>& metadata = {});

} // namespace wvg
