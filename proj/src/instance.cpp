#include "nils/instance.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string_view>

namespace nils {

namespace {

std::string join_violations(const std::vector<Violation>& violations)
{
    std::string out = "invalid instance:";
    for (const auto& v : violations)
        out += " " + v.message + ";";
    return out;
}

bool parse_int(std::string_view token, std::int64_t& value)
{
    if (!token.empty() && token.front() == '+')
        token.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i > start)
            tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

bool starts_numeric(std::string_view token)
{
    if (token.empty())
        return false;
    const char c = token.front();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+';
}

struct Line {
    int number;
    std::vector<std::string_view> tokens;
};

} // namespace

std::vector<Violation> validate(const InstanceData& data)
{
    std::vector<Violation> out;
    if (data.n_jobs < 1)
        out.push_back({ViolationKind::non_positive_jobs, "n_jobs must be >= 1"});
    if (data.n_machines < 1)
        out.push_back({ViolationKind::non_positive_machines, "n_machines must be >= 1"});

    if (static_cast<std::int64_t>(data.proc_times.size()) != data.n_jobs) {
        out.push_back({ViolationKind::dimension,
                       "expected " + std::to_string(data.n_jobs) + " job rows, got "
                           + std::to_string(data.proc_times.size())});
    }
    bool negative = false;
    bool overflow = false;
    for (std::size_t i = 0; i < data.proc_times.size(); ++i) {
        const auto& row = data.proc_times[i];
        if (static_cast<std::int64_t>(row.size()) != data.n_machines) {
            out.push_back({ViolationKind::dimension,
                           "job " + std::to_string(i) + " has " + std::to_string(row.size())
                               + " machine entries, expected "
                               + std::to_string(data.n_machines)});
        }
        for (auto p : row) {
            negative = negative || p < 0;
            overflow = overflow || p > std::numeric_limits<ProcTime>::max();
        }
    }
    if (negative)
        out.push_back({ViolationKind::negative_time, "processing times must be >= 0"});
    if (overflow)
        out.push_back({ViolationKind::time_overflow, "processing time exceeds 32-bit range"});
    if ((data.best_known && *data.best_known < 1) || (data.lower_bound && *data.lower_bound < 1))
        out.push_back({ViolationKind::non_positive_bound, "bounds must be positive when present"});
    return out;
}

Instance::Instance(const InstanceData& data)
    : name_(data.name),
      n_jobs_(data.n_jobs),
      n_machines_(data.n_machines),
      time_seed_(data.time_seed),
      best_known_(data.best_known),
      lower_bound_(data.lower_bound)
{
    if (auto violations = validate(data); !violations.empty())
        throw std::invalid_argument(join_violations(violations));
    times_.reserve(static_cast<std::size_t>(n_jobs_) * n_machines_);
    for (const auto& row : data.proc_times)
        for (auto p : row)
            times_.push_back(static_cast<ProcTime>(p));
}

InstanceData Instance::data() const
{
    InstanceData d;
    d.name = name_;
    d.n_jobs = n_jobs_;
    d.n_machines = n_machines_;
    d.time_seed = time_seed_;
    d.best_known = best_known_;
    d.lower_bound = lower_bound_;
    d.proc_times.resize(n_jobs_);
    for (int i = 0; i < n_jobs_; ++i) {
        auto times = job_times(i);
        d.proc_times[i].assign(times.begin(), times.end());
    }
    return d;
}

std::vector<Violation> validate(const Instance& instance)
{
    return validate(instance.data());
}

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      kind_(kind),
      line_(line)
{
}

std::vector<Instance> parse_instances(std::istream& in)
{
    std::vector<std::string> raw;
    for (std::string s; std::getline(in, s);)
        raw.push_back(std::move(s));

    std::vector<Line> lines;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto tokens = split_ws(raw[i]);
        if (!tokens.empty())
            lines.push_back({static_cast<int>(i) + 1, std::move(tokens)});
    }

    std::vector<Instance> instances;
    std::size_t pos = 0;
    while (pos < lines.size()) {
        // Descriptor lines ("number of jobs, ...") precede the header.
        while (pos < lines.size() && !starts_numeric(lines[pos].tokens.front()))
            ++pos;
        if (pos == lines.size())
            break;

        const Line& header = lines[pos++];
        std::vector<std::int64_t> fields;
        for (auto tok : header.tokens) {
            std::int64_t v = 0;
            if (!parse_int(tok, v))
                throw ParseError(ParseErrorKind::header, header.number,
                                 "malformed header token '" + std::string(tok) + "'");
            fields.push_back(v);
        }
        if (fields.size() < 2 || fields.size() > 5)
            throw ParseError(ParseErrorKind::header, header.number,
                             "header needs 2 to 5 integers (jobs machines [seed [upper [lower]]])");
        if (fields[0] < 1 || fields[1] < 1 || fields[0] > std::numeric_limits<int>::max()
            || fields[1] > std::numeric_limits<int>::max())
            throw ParseError(ParseErrorKind::header, header.number,
                             "job and machine counts must be positive");

        InstanceData data;
        data.n_jobs = static_cast<int>(fields[0]);
        data.n_machines = static_cast<int>(fields[1]);
        auto optional_field = [&](std::size_t i) -> std::optional<std::int64_t> {
            if (i < fields.size() && fields[i] > 0)
                return fields[i];
            return std::nullopt;
        };
        data.time_seed = optional_field(2);
        data.best_known = optional_field(3);
        data.lower_bound = optional_field(4);

        if (pos == lines.size() || starts_numeric(lines[pos].tokens.front()))
            throw ParseError(ParseErrorKind::marker,
                             pos == lines.size() ? header.number : lines[pos].number,
                             "expected marker line (e.g. 'processing times :') after header");
        ++pos;

        data.proc_times.assign(data.n_jobs, std::vector<std::int64_t>(data.n_machines));
        for (int machine = 0; machine < data.n_machines; ++machine) {
            if (pos == lines.size() || !starts_numeric(lines[pos].tokens.front()))
                throw ParseError(ParseErrorKind::dimension,
                                 pos == lines.size() ? header.number : lines[pos].number,
                                 "expected " + std::to_string(data.n_machines)
                                     + " machine rows, found " + std::to_string(machine));
            const Line& row = lines[pos++];
            if (static_cast<std::int64_t>(row.tokens.size()) != data.n_jobs)
                throw ParseError(ParseErrorKind::dimension, row.number,
                                 "expected " + std::to_string(data.n_jobs) + " values, found "
                                     + std::to_string(row.tokens.size()));
            for (int job = 0; job < data.n_jobs; ++job) {
                std::int64_t v = 0;
                if (!parse_int(row.tokens[job], v))
                    throw ParseError(ParseErrorKind::token, row.number,
                                     "non-integer token '" + std::string(row.tokens[job]) + "'");
                data.proc_times[job][machine] = v;
            }
        }

        std::ostringstream name;
        name << "instance_" << instances.size() << "_" << data.n_jobs << "x" << data.n_machines;
        data.name = name.str();
        try {
            instances.emplace_back(data);
        } catch (const std::invalid_argument& e) {
            throw ParseError(ParseErrorKind::invalid, header.number, e.what());
        }
    }
    return instances;
}

Instance parse_instance(std::istream& in, std::size_t index)
{
    auto all = parse_instances(in);
    if (index >= all.size())
        throw ParseError(ParseErrorKind::index, 0,
                         "instance index " + std::to_string(index) + " out of range (stream holds "
                             + std::to_string(all.size()) + ")");
    return std::move(all[index]);
}

Instance load_instance(const std::string& path, std::size_t index)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open instance file '" + path + "'");
    auto all = parse_instances(in);
    if (index >= all.size())
        throw ParseError(ParseErrorKind::index, 0,
                         "instance index " + std::to_string(index) + " out of range ('" + path
                             + "' holds " + std::to_string(all.size()) + ")");
    InstanceData d = all[index].data();
    auto slash = path.find_last_of('/');
    auto base = slash == std::string::npos ? path : path.substr(slash + 1);
    if (auto dot = base.rfind('.'); dot != std::string::npos && dot > 0)
        base = base.substr(0, dot);
    d.name = base + "#" + std::to_string(index);
    return Instance(d);
}

void write_instances(std::ostream& out, std::span<const Instance> instances)
{
    for (const auto& inst : instances) {
        out << "number of jobs, number of machines, initial seed, upper bound and lower bound :\n";
        out << std::setw(12) << inst.n_jobs() << std::setw(12) << inst.n_machines()
            << std::setw(12) << inst.time_seed().value_or(0);
        if (inst.best_known() || inst.lower_bound()) {
            out << std::setw(12) << inst.best_known().value_or(0);
            if (inst.lower_bound())
                out << std::setw(12) << *inst.lower_bound();
        }
        out << "\nprocessing times :\n";
        for (int j = 0; j < inst.n_machines(); ++j) {
            for (int i = 0; i < inst.n_jobs(); ++i)
                out << std::setw(3) << inst.time(i, j);
            out << '\n';
        }
    }
}

std::int64_t taillard_unif(std::int64_t& seed, std::int64_t low, std::int64_t high)
{
    constexpr std::int64_t m = 2147483647;
    constexpr std::int64_t a = 16807;
    constexpr std::int64_t b = 127773;
    constexpr std::int64_t c = 2836;
    const std::int64_t k = seed / b;
    seed = a * (seed % b) - k * c;
    if (seed < 0)
        seed += m;
    const double value_0_1 = static_cast<double>(seed) / static_cast<double>(m);
    return low + static_cast<std::int64_t>(value_0_1 * static_cast<double>(high - low + 1));
}

Instance generate_taillard(int n_jobs, int n_machines, std::int64_t time_seed)
{
    if (time_seed < 1 || time_seed > 2147483646)
        throw std::invalid_argument("time seed must lie in [1, 2^31 - 2], got "
                                    + std::to_string(time_seed));
    if (n_jobs < 1 || n_machines < 1)
        throw std::invalid_argument("job and machine counts must be positive");

    InstanceData data;
    data.n_jobs = n_jobs;
    data.n_machines = n_machines;
    data.time_seed = time_seed;
    data.name = "taillard_" + std::to_string(n_jobs) + "x" + std::to_string(n_machines) + "_"
                + std::to_string(time_seed);
    data.proc_times.assign(n_jobs, std::vector<std::int64_t>(n_machines));
    std::int64_t seed = time_seed;
    for (int j = 0; j < n_machines; ++j)
        for (int i = 0; i < n_jobs; ++i)
            data.proc_times[i][j] = taillard_unif(seed, 1, 99);
    return Instance(data);
}

} // namespace nils
