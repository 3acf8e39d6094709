#pragma once

#include "wvguard/diagnostics.hpp"
#include "wvguard/extensions.hpp"
#include "wvguard/geometry.hpp"
#include "wvguard/guarding.hpp"
#include "wvguard/weak_visibility.hpp"

#include "json.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wvg
{

using Json = nlohmann::ordered_json;

[[nodiscard]] Json to_json(const GuardSet& guards);
[[nodiscard]] Json to_json(const BoundaryPoint& point);
[[nodiscard]] Json to_json(const Point& point);
[[nodiscard]] Json to_json(const SearchTrace& trace);
[[nodiscard]] Json to_json(const WeakVisibilityVerdict& verdict);
[[nodiscard]] Json to_json(const WitnessSet& witnesses);
[[nodiscard]] Json to_json(const DiagnosticsReport& report);
[[nodiscard]] Json to_json(const GuardPipelineResult& result, std::size_t k);

struct InstanceInput
{
    std::string id;
    Polygon polygon;
};

struct ExperimentOptions
{
    std::size_t k = 2;
    std::size_t oracle_vertex_limit = default_oracle_vertex_limit;
    bool witnesses = false;
    bool diagnostics = true;
    std::uint64_t order_claim_trials = default_order_claim_trials;
    std::uint64_t seed = 0;
};

struct StageTimes
{
    double preprocess = 0;
    double local_search = 0;
    double oracle = 0;
    double witnesses = 0;
    double diagnostics = 0;
};

struct InstanceRecord
{
    std::string id;
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::string> error;
    std::size_t local_size = 0;
    std::optional<std::size_t> oracle_size;
    /// local_size / oracle_size; absent when the oracle was skipped.
    std::optional<double> ratio;
    GuardSet forced_guards;
    std::optional<std::size_t> witness_count;
    std::optional<bool> diagnostics_passed;
    std::optional<bool> order_claim;
    std::optional<bool> a1_non_crossing;
    std::optional<bool> a2_non_crossing;
    std::optional<bool> planar;
    std::optional<bool> locality;
    StageTimes seconds;
};

struct ExperimentReport
{
    std::vector<InstanceRecord> records;

    [[nodiscard]] Json to_json() const;
};

/// Runs preprocessing, local search, the oracle (skipped above the vertex limit),
/// optional witnesses and the diagnostics on each instance. Records are sorted by id.
[[nodiscard]] ExperimentReport run_experiment(const std::vector<InstanceInput>& instances,
                                              const ExperimentOptions& options);

} // namespace wvg
