#pragma once

#include "nils/experiment.hpp"
#include "nils/search.hpp"

#include <json.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace nils {

using Json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ReportFormat { csv, json };

/// Header of the per-run CSV, in column order.
std::vector<std::string> csv_columns(bool include_runtime);

/// One row per run. Runtime is the only non-deterministic column; leave it
/// out to get byte-reproducible files.
void write_runs_csv(std::ostream& out, const std::vector<RunRecord>& runs, bool include_runtime);

Json to_json(const RunReport& report);
Json to_json(const AggregateReport& aggregate);
Json to_json(const ExperimentConfig& config);

/// Configuration, instance, aggregate and per-run counters with trajectories.
Json to_json(const ExperimentResult& result, bool include_runtime = false);

AggregateReport aggregate_from_json(const Json& j);

/// Writes the experiment as CSV or JSON to `path` ("-" for stdout). Throws
/// IoError when the destination cannot be written.
void emit_reports(const ExperimentResult& result, ReportFormat format, const std::string& path,
                  bool include_runtime = true);

} // namespace nils
