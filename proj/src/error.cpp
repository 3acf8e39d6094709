#include "wvguard/error.hpp"

namespace wvg
{

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind)
    {
    case ErrorKind::Usage: return "Usage";
    case ErrorKind::Io: return "Io";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::DegenerateVertex: return "DegenerateVertex";
    case ErrorKind::BaseEdgeNotAnEdge: return "BaseEdgeNotAnEdge";
    case ErrorKind::ConcaveBaseAngle: return "ConcaveBaseAngle";
    case ErrorKind::EqualPoints: return "EqualPoints";
    case ErrorKind::PointOutsidePolygon: return "PointOutsidePolygon";
    case ErrorKind::Unguardable: return "Unguardable";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::NotWeaklyVisible: return "NotWeaklyVisible";
    case ErrorKind::DegenerateCut: return "DegenerateCut";
    case ErrorKind::NotCovering: return "NotCovering";
    case ErrorKind::LaminarityViolation: return "LaminarityViolation";
    case ErrorKind::CheckFailed: return "CheckFailed";
    case ErrorKind::GenerationBudgetExceeded: return "GenerationBudgetExceeded";
    }
    return "Unknown";
}

int exit_code_for(ErrorKind kind) noexcept
{
    switch (kind)
    {
    case ErrorKind::Unguardable:
    case ErrorKind::InstanceTooLarge:
        return 3;
    case ErrorKind::LaminarityViolation:
    case ErrorKind::CheckFailed:
    case ErrorKind::NotCovering:
        return 4;
    default:
        return 2;
    }
}

} // namespace wvg
