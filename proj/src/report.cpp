#include "nils/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace nils {

namespace {

Json trace_json(const std::vector<TracePoint>& points)
{
    Json arr = Json::array();
    for (const auto& p : points)
        arr.push_back({p.evals, p.best});
    return arr;
}

} // namespace

std::vector<std::string> csv_columns(bool include_runtime)
{
    std::vector<std::string> cols{"instance",      "N",               "M",
                                  "mns",           "seed",            "final_best",
                                  "portals_found", "nwp_invocations", "lost_evals"};
    if (include_runtime)
        cols.emplace_back("runtime_ms");
    return cols;
}

void write_runs_csv(std::ostream& out, const std::vector<RunRecord>& runs, bool include_runtime)
{
    const auto cols = csv_columns(include_runtime);
    for (std::size_t i = 0; i < cols.size(); ++i)
        out << (i ? "," : "") << cols[i];
    out << '\n';
    for (const auto& run : runs) {
        const RunReport& r = run.report;
        out << run.instance << ',' << run.n_jobs << ',' << run.n_machines << ',' << r.mns << ','
            << r.seed << ',' << r.final_best << ',' << r.portals_found << ','
            << r.nwp_invocations << ',' << r.lost_evals;
        if (include_runtime) {
            std::ostringstream ms;
            ms.precision(3);
            ms << std::fixed << run.runtime_ms;
            out << ',' << ms.str();
        }
        out << '\n';
    }
}

Json to_json(const RunReport& r)
{
    Json j;
    j["seed"] = r.seed;
    j["mns"] = r.mns;
    j["kick_strength"] = r.kick_strength;
    j["budget"] = r.budget;
    j["evals_used"] = r.evals_used;
    j["initial_fitness"] = r.initial_fitness;
    j["final_best"] = r.final_best;
    j["best_permutation"] = r.best_permutation;
    j["nwp_invocations"] = r.nwp_invocations;
    j["portals_found"] = r.portals_found;
    j["kicks"] = r.kicks;
    j["budget_exhausted_walks"] = r.budget_exhausted_walks;
    j["lost_evals"] = r.lost_evals;
    j["neutral_steps_total"] = r.neutral_steps_total;
    j["fihc_calls"] = r.fihc_calls;
    j["improvements"] = trace_json(r.improvements);
    return j;
}

Json to_json(const AggregateReport& aggregate)
{
    Json per = Json::array();
    for (const auto& a : aggregate.per_mns) {
        Json j;
        j["mns"] = a.mns;
        j["runs"] = a.runs;
        j["q1"] = a.q1;
        j["median"] = a.median;
        j["q3"] = a.q3;
        j["min"] = a.min;
        j["max"] = a.max;
        j["portal_pct_mean"] = a.portal_pct_mean;
        j["portal_pct_sd"] = a.portal_pct_sd;
        j["lost_evals_mean"] = a.lost_evals_mean;
        j["lost_evals_sd"] = a.lost_evals_sd;
        per.push_back(std::move(j));
    }
    Json pairs = Json::array();
    for (const auto& t : aggregate.pairwise) {
        Json j;
        j["mns_a"] = t.mns_a;
        j["mns_b"] = t.mns_b;
        j["u"] = t.u;
        j["p_value"] = t.p_value;
        j["exact"] = t.exact;
        pairs.push_back(std::move(j));
    }
    Json out;
    out["per_mns"] = std::move(per);
    out["mann_whitney"] = std::move(pairs);
    return out;
}

AggregateReport aggregate_from_json(const Json& j)
{
    AggregateReport out;
    for (const auto& a : j.at("per_mns")) {
        MnsAggregate m;
        m.mns = a.at("mns").get<std::int64_t>();
        m.runs = a.at("runs").get<std::size_t>();
        m.q1 = a.at("q1").get<double>();
        m.median = a.at("median").get<double>();
        m.q3 = a.at("q3").get<double>();
        m.min = a.at("min").get<double>();
        m.max = a.at("max").get<double>();
        m.portal_pct_mean = a.at("portal_pct_mean").get<double>();
        m.portal_pct_sd = a.at("portal_pct_sd").get<double>();
        m.lost_evals_mean = a.at("lost_evals_mean").get<double>();
        m.lost_evals_sd = a.at("lost_evals_sd").get<double>();
        out.per_mns.push_back(m);
    }
    for (const auto& t : j.at("mann_whitney")) {
        PairwiseTest p;
        p.mns_a = t.at("mns_a").get<std::int64_t>();
        p.mns_b = t.at("mns_b").get<std::int64_t>();
        p.u = t.at("u").get<double>();
        p.p_value = t.at("p_value").get<double>();
        p.exact = t.at("exact").get<bool>();
        out.pairwise.push_back(p);
    }
    return out;
}

Json to_json(const ExperimentConfig& config)
{
    Json j;
    j["instance_source"] = config.source.describe();
    j["mns_values"] = config.mns_values;
    j["runs"] = config.runs;
    j["budget"] = config.budget;
    j["base_seed"] = config.base_seed;
    j["kick_strength"] = config.kick_strength;
    j["checkpoints"] = config.checkpoints;
    return j;
}

Json to_json(const ExperimentResult& result, bool include_runtime)
{
    Json j;
    j["config"] = to_json(result.config);
    j["instance"] = {{"name", result.instance_name},
                     {"n_jobs", result.n_jobs},
                     {"n_machines", result.n_machines}};
    j["complete"] = result.complete;
    j["aggregate"] = to_json(result.aggregate);
    Json runs = Json::array();
    for (const auto& run : result.runs) {
        Json r = to_json(run.report);
        r["run_index"] = run.run_index;
        r["trajectory"] = trace_json(run.trajectory);
        if (include_runtime)
            r["runtime_ms"] = run.runtime_ms;
        runs.push_back(std::move(r));
    }
    j["runs"] = std::move(runs);
    return j;
}

void emit_reports(const ExperimentResult& result, ReportFormat format, const std::string& path,
                  bool include_runtime)
{
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (path != "-") {
        file.open(path);
        if (!file)
            throw IoError("cannot open '" + path + "' for writing");
        out = &file;
    }
    if (format == ReportFormat::csv)
        write_runs_csv(*out, result.runs, include_runtime);
    else
        *out << to_json(result, include_runtime).dump(2) << '\n';
    out->flush();
    if (!*out)
        throw IoError("failed writing report to '" + path + "'");
}

} // namespace nils
