#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "wrp/graph.hpp"
#include "wrp/partition.hpp"
#include "wrp/tolerances.hpp"

namespace wrp {

using Json = nlohmann::ordered_json;

struct AnalysisOptions {
    Tolerances tol;
    int chi_cap = 64;
    bool enumerate_optimal = false;
    bool force_chromatic = false;
    bool include_timestamp = true;
};

/// Full pipeline for one graph: spectrum and Perron vector, weighted
/// partition analysis (the trivial one-class partition when none is given),
/// the structural characterizations, and the chromatic audit. Throws on
/// validation/domain errors; the chromatic section is marked skipped when n
/// exceeds the cap and force_chromatic is off.
Json analyze_graph(const Graph& g, const std::optional<VertexPartition>& partition,
                   const AnalysisOptions& opt);

/// Chromatic audit only.
Json hoffman_report(const Graph& g, const AnalysisOptions& opt);

std::string current_timestamp_utc();

} // namespace wrp
