#include "nils/experiment.hpp"

#include "nils/report.hpp"
#include "nils/stats.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

using namespace nils;

namespace {

ExperimentConfig small_config()
{
    ExperimentConfig c;
    c.source.jobs = 8;
    c.source.machines = 4;
    c.source.time_seed = 4711;
    c.mns_values = {0, 10};
    c.runs = 2;
    c.budget = 5000;
    c.base_seed = 3;
    c.checkpoints = default_checkpoints(c.budget);
    c.threads = 1;
    return c;
}

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep))
        out.push_back(cell);
    return out;
}

} // namespace

TEST_CASE("run seeds are a pure function of (base, mns, run)")
{
    CHECK(derive_run_seed(1, 10, 3) == derive_run_seed(1, 10, 3));
    CHECK(derive_run_seed(1, 10, 3) != derive_run_seed(1, 10, 4));
    CHECK(derive_run_seed(1, 10, 3) != derive_run_seed(1, 11, 3));
    CHECK(derive_run_seed(1, 10, 3) != derive_run_seed(2, 10, 3));
}

TEST_CASE("default checkpoints are log-spaced and end at the budget")
{
    CHECK(default_checkpoints(1) == std::vector<std::int64_t>{1});
    CHECK(default_checkpoints(100) == std::vector<std::int64_t>{1, 2, 5, 10, 20, 50, 100});
    CHECK(default_checkpoints(300) == std::vector<std::int64_t>{1, 2, 5, 10, 20, 50, 100, 200, 300});
    const auto big = default_checkpoints(20'000'000);
    CHECK(big.back() == 20'000'000);
    CHECK(std::is_sorted(big.begin(), big.end()));
}

TEST_CASE("experiment config validation")
{
    ExperimentConfig c = small_config();
    CHECK_NOTHROW(check_experiment_config(c));
    c.runs = 0;
    CHECK_THROWS_AS(check_experiment_config(c), std::invalid_argument);
    c = small_config();
    c.mns_values.clear();
    CHECK_THROWS_AS(check_experiment_config(c), std::invalid_argument);
    c = small_config();
    c.checkpoints = {10, 5};
    CHECK_THROWS_AS(check_experiment_config(c), std::invalid_argument);
    c = small_config();
    c.checkpoints = {c.budget + 1};
    CHECK_THROWS_AS(check_experiment_config(c), std::invalid_argument);
    c = small_config();
    c.mns_values = {5, 5};
    CHECK_THROWS_AS(check_experiment_config(c), std::invalid_argument);
}

TEST_CASE("single run with budget 1 aggregates to the initial fitness")
{
    ExperimentConfig c = small_config();
    c.runs = 1;
    c.budget = 1;
    c.mns_values = {7};
    c.checkpoints = {1};
    const Instance inst = c.source.load();
    const ExperimentResult r = run_experiment(inst, c);
    REQUIRE(r.runs.size() == 1);
    CHECK(r.complete);
    CHECK(r.aggregate.per_mns.size() == 1);
    CHECK(r.aggregate.per_mns[0].median == static_cast<double>(r.runs[0].report.initial_fitness));
    CHECK(r.runs[0].report.seed == derive_run_seed(c.base_seed, 7, 0));
}

TEST_CASE("reports are byte-identical across repeated experiments")
{
    const ExperimentConfig c = small_config();
    const Instance inst = c.source.load();
    const ExperimentResult a = run_experiment(inst, c);
    const ExperimentResult b = run_experiment(inst, c);
    CHECK(to_json(a).dump(2) == to_json(b).dump(2));
    std::ostringstream ca;
    std::ostringstream cb;
    write_runs_csv(ca, a.runs, false);
    write_runs_csv(cb, b.runs, false);
    CHECK(ca.str() == cb.str());

    ExperimentConfig threaded = c;
    threaded.threads = 3;
    CHECK(to_json(run_experiment(inst, threaded)).dump() == to_json(a).dump());
}

TEST_CASE("CSV has a header and one row per run")
{
    std::ostringstream empty;
    write_runs_csv(empty, {}, true);
    CHECK(empty.str()
          == "instance,N,M,mns,seed,final_best,portals_found,nwp_invocations,lost_evals,runtime_ms\n");

    const ExperimentConfig c = small_config();
    const ExperimentResult r = run_experiment(c.source.load(), c);
    std::ostringstream out;
    write_runs_csv(out, r.runs, true);
    std::istringstream in(out.str());
    std::vector<std::string> lines;
    for (std::string l; std::getline(in, l);)
        lines.push_back(l);
    CHECK(lines.size() == 1 + 4);
    CHECK(split(lines[1], ',').size() == 10);
}

TEST_CASE("medians recomputed from CSV match the aggregate")
{
    ExperimentConfig c = small_config();
    c.runs = 6;
    const ExperimentResult r = run_experiment(c.source.load(), c);
    std::ostringstream out;
    write_runs_csv(out, r.runs, false);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    std::map<std::int64_t, std::vector<double>> finals;
    while (std::getline(in, line)) {
        const auto cells = split(line, ',');
        finals[std::stoll(cells[3])].push_back(std::stod(cells[5]));
    }
    for (const auto& agg : r.aggregate.per_mns) {
        const Quartiles q = median_and_quartiles(finals.at(agg.mns));
        CHECK(q.median == agg.median);
        CHECK(q.q1 == agg.q1);
        CHECK(q.q3 == agg.q3);
    }
    REQUIRE(r.aggregate.pairwise.size() == 1);
    CHECK(r.aggregate.pairwise[0].mns_a == 0);
    CHECK(r.aggregate.pairwise[0].mns_b == 10);
    CHECK(r.aggregate.pairwise[0].exact);
}

TEST_CASE("JSON aggregate survives a round trip")
{
    ExperimentConfig c = small_config();
    c.runs = 9;
    const ExperimentResult r = run_experiment(c.source.load(), c);
    const Json parsed = Json::parse(to_json(r).dump(2));
    CHECK(aggregate_from_json(parsed.at("aggregate")) == r.aggregate);
    CHECK(parsed.at("runs").size() == r.runs.size());
    CHECK(parsed.at("complete").get<bool>());
}

TEST_CASE("flat instances never report portals")
{
    ExperimentConfig c = small_config();
    c.mns_values = {0, 3, 20};
    const Instance flat = nils::test::flat_instance(8, 3);
    const ExperimentResult r = run_experiment(flat, c);
    for (const auto& run : r.runs) {
        CHECK(run.report.portals_found == 0);
        CHECK(portal_percentage(run.report) == 0.0);
    }
    for (const auto& agg : r.aggregate.per_mns)
        CHECK(agg.portal_pct_mean == 0.0);
}

TEST_CASE("a raised stop flag yields an incomplete result")
{
    const ExperimentConfig c = small_config();
    std::atomic<bool> stop{true};
    const ExperimentResult r = run_experiment(c.source.load(), c, &stop);
    CHECK_FALSE(r.complete);
    CHECK(r.runs.empty());
    CHECK(to_json(r).at("complete") == false);
}

TEST_CASE("unwritable destinations raise IoError")
{
    const ExperimentConfig c = small_config();
    const ExperimentResult r = run_experiment(c.source.load(), c);
    CHECK_THROWS_AS(emit_reports(r, ReportFormat::csv, "/nonexistent-dir/out.csv"), IoError);

    const auto path = std::filesystem::temp_directory_path() / "nils_report_test.json";
    emit_reports(r, ReportFormat::json, path.string(), false);
    std::ifstream in(path);
    const Json j = Json::parse(in);
    CHECK(j.at("config").at("mns_values") == Json({0, 10}));
    std::filesystem::remove(path);
}
