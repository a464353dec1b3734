// nils: command-line front end for the NILS flowshop solver.
//
//   nils solve     --jobs 20 --machines 5 --time-seed 873654221 --mns 100
//   nils bench     --instance tai20_5.txt --index 0 --mns 0,10,20 --runs 30
//   nils landscape --instance tai20_5.txt --samples 50 --walk-steps 100
//   nils generate  --jobs 20 --machines 5 --time-seed 873654221

#include "nils/experiment.hpp"
#include "nils/instance.hpp"
#include "nils/landscape.hpp"
#include "nils/report.hpp"
#include "nils/search.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInstance = 2;
constexpr int kExitIo = 3;

std::atomic<bool> g_stop{false};

extern "C" void on_interrupt(int)
{
    g_stop.store(true);
}

struct InstanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InstanceOptions {
    std::string file;
    std::size_t index = 0;
    int jobs = 0;
    int machines = 0;
    std::int64_t time_seed = 0;

    void attach(CLI::App* app)
    {
        auto* f = app->add_option("--instance", file, "Taillard-format instance file");
        app->add_option("--index", index, "0-based instance index within the file")->needs(f);
        auto* j = app->add_option("--jobs", jobs, "Number of jobs (generated instance)");
        auto* m = app->add_option("--machines", machines, "Number of machines (generated instance)");
        auto* s = app->add_option("--time-seed", time_seed, "Taillard time seed (generated instance)");
        f->excludes(j)->excludes(m)->excludes(s);
        j->needs(m)->needs(s);
    }

    nils::InstanceSource source() const
    {
        nils::InstanceSource src;
        if (!file.empty())
            src.file = file;
        else if (jobs == 0)
            throw CLI::ValidationError("instance", "give --instance FILE or --jobs/--machines/--time-seed");
        src.index = index;
        src.jobs = jobs;
        src.machines = machines;
        src.time_seed = time_seed;
        return src;
    }
};

nils::Instance load(const nils::InstanceSource& src)
{
    try {
        return src.load();
    } catch (const std::exception& e) {
        throw InstanceError(e.what());
    }
}

std::ostream& open_output(const std::string& path, std::ofstream& file)
{
    if (path == "-")
        return std::cout;
    file.open(path);
    if (!file)
        throw nils::IoError("cannot open '" + path + "' for writing");
    return file;
}

void finish_output(std::ostream& out, const std::string& path)
{
    out.flush();
    if (!out)
        throw nils::IoError("failed writing '" + path + "'");
}

nils::ReportFormat parse_format(const std::string& s)
{
    return s == "json" ? nils::ReportFormat::json : nils::ReportFormat::csv;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Neutrality-based iterated local search for permutation flowshop scheduling"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "Single NILS run");
    InstanceOptions solve_inst;
    solve_inst.attach(solve);
    std::vector<std::int64_t> solve_mns{0};
    std::int64_t solve_budget = 20'000'000;
    std::uint64_t solve_seed = 0;
    int solve_kick = 3;
    std::string solve_format = "json";
    std::string solve_out = "-";
    std::vector<std::int64_t> solve_checkpoints;
    solve->add_option("--mns", solve_mns, "Maximal number of neutral steps")->delimiter(',')->expected(1);
    solve->add_option("--budget", solve_budget, "Evaluation budget");
    solve->add_option("--seed", solve_seed, "Run seed");
    solve->add_option("--kick", solve_kick, "Exchange moves per kick");
    solve->add_option("--format", solve_format)->check(CLI::IsMember({"csv", "json"}));
    solve->add_option("--out", solve_out, "Output path, '-' for stdout");
    solve->add_option("--checkpoints", solve_checkpoints, "Evaluation counts to sample")->delimiter(',');

    // bench
    auto* bench = app.add_subcommand("bench", "MNS sweep with repeated runs");
    InstanceOptions bench_inst;
    bench_inst.attach(bench);
    nils::ExperimentConfig exp;
    std::string bench_format = "csv";
    std::string bench_out = "-";
    bool no_runtime = false;
    bench->add_option("--mns", exp.mns_values, "MNS values")->delimiter(',');
    bench->add_option("--runs", exp.runs, "Runs per MNS value");
    bench->add_option("--budget", exp.budget, "Evaluation budget per run");
    bench->add_option("--seed", exp.base_seed, "Base seed for run seed derivation");
    bench->add_option("--kick", exp.kick_strength, "Exchange moves per kick");
    bench->add_option("--checkpoints", exp.checkpoints, "Evaluation counts to sample")->delimiter(',');
    bench->add_option("--threads", exp.threads, "Worker threads (0 = all cores)");
    bench->add_option("--format", bench_format)->check(CLI::IsMember({"csv", "json"}));
    bench->add_option("--out", bench_out, "Output path, '-' for stdout");
    bench->add_flag("--no-runtime", no_runtime, "Omit wall-clock runtimes for reproducible output");

    // landscape
    auto* land = app.add_subcommand("landscape", "Neutral degree and neutral-walk probes");
    InstanceOptions land_inst;
    land_inst.attach(land);
    int samples = 30;
    std::int64_t walk_steps = 100;
    std::uint64_t land_seed = 0;
    std::int64_t land_budget = 1'000'000;
    std::string land_format = "csv";
    std::string land_out = "-";
    land->add_option("--samples", samples, "Random starting solutions");
    land->add_option("--walk-steps", walk_steps, "Neutral walk length per probe");
    land->add_option("--seed", land_seed, "Probe seed");
    land->add_option("--budget", land_budget, "Hill-climbing budget per local optimum");
    land->add_option("--format", land_format)->check(CLI::IsMember({"csv", "json"}));
    land->add_option("--out", land_out, "Output path, '-' for stdout");

    // generate
    auto* gen = app.add_subcommand("generate", "Emit Taillard instances");
    int gen_jobs = 0;
    int gen_machines = 0;
    std::vector<std::int64_t> gen_seeds;
    std::string gen_out = "-";
    gen->add_option("--jobs", gen_jobs)->required();
    gen->add_option("--machines", gen_machines)->required();
    gen->add_option("--time-seed", gen_seeds, "One or more time seeds")->delimiter(',')->required();
    gen->add_option("--out", gen_out, "Output path, '-' for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve) {
            const nils::Instance instance = load(solve_inst.source());
            nils::NilsConfig nc;
            nc.mns = solve_mns.front();
            nc.budget = solve_budget;
            nc.seed = solve_seed;
            nc.kick_strength = solve_kick;
            nils::check_config(nc);
            std::vector<std::int64_t> cps =
                solve_checkpoints.empty() ? nils::default_checkpoints(solve_budget) : solve_checkpoints;

            nils::RunRecord rec;
            rec.report = nils::run_nils(instance, nc);
            rec.instance = instance.name();
            rec.n_jobs = instance.n_jobs();
            rec.n_machines = instance.n_machines();
            rec.trajectory = nils::sample_trajectory(rec.report.improvements, cps);

            std::ofstream file;
            std::ostream& out = open_output(solve_out, file);
            if (parse_format(solve_format) == nils::ReportFormat::csv) {
                nils::write_runs_csv(out, {rec}, false);
            } else {
                nils::Json j;
                j["instance"] = {{"name", instance.name()},
                                 {"n_jobs", instance.n_jobs()},
                                 {"n_machines", instance.n_machines()}};
                j["run"] = nils::to_json(rec.report);
                nils::Json traj = nils::Json::array();
                for (const auto& p : rec.trajectory)
                    traj.push_back({p.evals, p.best});
                j["trajectory"] = std::move(traj);
                out << j.dump(2) << '\n';
            }
            finish_output(out, solve_out);
        } else if (*bench) {
            exp.source = bench_inst.source();
            if (exp.checkpoints.empty())
                exp.checkpoints = nils::default_checkpoints(exp.budget);
            nils::check_experiment_config(exp);
            const nils::Instance instance = load(exp.source);
            std::signal(SIGINT, on_interrupt);
            const nils::ExperimentResult result = nils::run_experiment(instance, exp, &g_stop);
            if (!result.complete)
                std::cerr << "warning: interrupted, report holds " << result.runs.size()
                          << " finished runs and is flagged incomplete\n";
            nils::emit_reports(result, parse_format(bench_format), bench_out, !no_runtime);
            for (const auto& a : result.aggregate.per_mns)
                std::cerr << "mns=" << a.mns << " runs=" << a.runs << " median=" << a.median
                          << " q1=" << a.q1 << " q3=" << a.q3 << " min=" << a.min << '\n';
        } else if (*land) {
            const nils::Instance instance = load(land_inst.source());
            if (instance.n_jobs() < 2)
                throw std::invalid_argument("landscape probes need at least 2 jobs");
            nils::Rng rng(land_seed);
            nils::Json rows = nils::Json::array();
            for (int s = 0; s < samples; ++s) {
                nils::Rng sample_rng = rng.split();
                nils::SearchState state(instance, land_budget, sample_rng.split());
                const nils::Permutation start = state.current();
                const bool local_opt = nils::fihc(state);
                for (int kind = 0; kind < 2; ++kind) {
                    const nils::Permutation& perm = kind == 0 ? start : state.current();
                    const nils::NeutralityProbe p = nils::probe(instance, perm, walk_steps, sample_rng);
                    nils::Json row;
                    row["sample"] = s;
                    row["kind"] = kind == 0 ? "random" : (local_opt ? "local_optimum" : "hill_climb_cut");
                    row["fitness"] = p.fitness;
                    row["neutral_degree"] = p.neutral_degree;
                    row["neighborhood_size"] = p.neighborhood_size;
                    row["is_local_optimum"] = p.is_local_optimum;
                    row["portal_step"] = p.has_portal_within ? nils::Json(*p.has_portal_within) : nils::Json();
                    row["evaluations"] = p.evaluations;
                    rows.push_back(std::move(row));
                }
            }
            std::ofstream file;
            std::ostream& out = open_output(land_out, file);
            if (parse_format(land_format) == nils::ReportFormat::json) {
                out << nils::Json{{"instance", instance.name()}, {"probes", rows}}.dump(2) << '\n';
            } else {
                out << "sample,kind,fitness,neutral_degree,neighborhood_size,is_local_optimum,"
                       "portal_step,evaluations\n";
                for (const auto& r : rows) {
                    out << r["sample"].get<int>() << ',' << r["kind"].get<std::string>() << ','
                        << r["fitness"].get<std::int64_t>() << ','
                        << r["neutral_degree"].get<std::int64_t>() << ','
                        << r["neighborhood_size"].get<std::int64_t>() << ','
                        << (r["is_local_optimum"].get<bool>() ? 1 : 0) << ',';
                    if (!r["portal_step"].is_null())
                        out << r["portal_step"].get<std::int64_t>();
                    out << ',' << r["evaluations"].get<std::int64_t>() << '\n';
                }
            }
            finish_output(out, land_out);
        } else if (*gen) {
            std::vector<nils::Instance> instances;
            for (auto seed : gen_seeds)
                instances.push_back(load(nils::InstanceSource{std::nullopt, 0, gen_jobs, gen_machines, seed}));
            std::ofstream file;
            std::ostream& out = open_output(gen_out, file);
            nils::write_instances(out, instances);
            finish_output(out, gen_out);
        }
    } catch (const InstanceError& e) {
        std::cerr << "instance error: " << e.what() << '\n';
        return kExitInstance;
    } catch (const nils::IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kExitIo;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}
