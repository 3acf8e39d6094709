#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wvg
{

/// Failure categories. The CLI prints the category name and maps it to an exit code.
enum class ErrorKind
{
    Usage,
    Io,
    Parse,
    NotSimple,
    DegenerateVertex,
    BaseEdgeNotAnEdge,
    ConcaveBaseAngle,
    EqualPoints,
    PointOutsidePolygon,
    Unguardable,
    InstanceTooLarge,
    NotWeaklyVisible,
    DegenerateCut,
    NotCovering,
    LaminarityViolation,
    /// A diagnostics check reported a violation.
    CheckFailed,
    GenerationBudgetExceeded,
};

[[nodiscard]] std::string_view to_string(ErrorKind kind) noexcept;

/// 0 ok, 2 parse/validation, 3 unguardable/infeasible, 4 internal check failure.
[[nodiscard]] int exit_code_for(ErrorKind kind) noexcept;

class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind)
    {
    }

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error
{
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error(ErrorKind::Parse,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line), column_(column)
    {
    }

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace wvg
