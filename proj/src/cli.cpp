// SPDX-License-Identifier: Apache-2.0
//
// uavcov: coverage and backhaul analysis for urban UAV networks
// Copyright (C) 2026 The uavcov Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <uavcov/cli.hpp>

#include <uavcov/analytic.hpp>
#include <uavcov/config.hpp>
#include <uavcov/montecarlo.hpp>
#include <uavcov/parallel.hpp>
#include <uavcov/records.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

namespace uavcov::cli
{

namespace
{

class UsageError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct Options
{
    std::string config;
    std::string engine = "both";
    std::size_t trials = 20000;
    std::uint64_t seed = 1;
    int jobs = 0;
    std::string format = "csv";
    std::string out;
    bool timing = false;
    std::string association = "averaged";

    std::vector<std::string> axes;
    std::string measure = "coverage";
    bool resume = false;
    std::string grid = "10:300:10";
    std::string heights = "40:300:20";
    bool refine = false;
    double step = 5;
    double gamma_init = 0;
};

bool wants(const Options& o, const char* engine) { return o.engine == "both" || o.engine == engine; }

mc::Association association(const Options& o)
{
    return o.association == "instantaneous" ? mc::Association::Instantaneous : mc::Association::Averaged;
}

std::uint64_t point_seed(std::uint64_t master, std::size_t index)
{
    return mc::splitmix64(master ^ mc::splitmix64(static_cast<std::uint64_t>(index)));
}

Config load_config(const Options& o, const EnvLookup& env)
{
    Config c = o.config.empty() ? Config() : Config::load(o.config);
    c.apply_env(env);
    return c;
}

class Timer
{
  public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

using Records = std::vector<ResultRecord>;

ResultRecord analytic_record(const std::vector<double>& point, const char* metric, double value, double wall)
{
    return {point, "analytic", metric, value, std::nullopt, std::nullopt, wall};
}

ResultRecord mc_record(const std::vector<double>& point, const char* metric, const mc::Estimate& e, double wall)
{
    return {point, "mc", metric, e.p, e.se, e.n, wall};
}

void coverage_records(const Options& o, const Params& params, const std::vector<double>& point, std::uint64_t seed,
                      Records& out)
{
    if (wants(o, "analytic"))
    {
        Timer t;
        const auto r = analytic::coverage_probability(params);
        const double wall = t.seconds();
        out.push_back(analytic_record(point, "p_cov", r.p_cov, wall));
        out.push_back(analytic_record(point, "p_assoc", r.p_assoc, wall));
        out.push_back(analytic_record(point, "p_los_serving", r.p_los_serving, wall));
    }
    if (wants(o, "mc"))
    {
        Timer t;
        const auto e = mc::estimate_coverage(params, o.trials, seed, Exec::Parallel, association(o));
        const double wall = t.seconds();
        out.push_back(mc_record(point, "p_cov", e.p_cov, wall));
        out.push_back(mc_record(point, "p_assoc", e.p_assoc, wall));
        if (e.p_los_serving.n > 0)
            out.push_back(mc_record(point, "p_los_serving", e.p_los_serving, wall));
    }
}

void backhaul_records(const Options& o, const Params& params, double gamma, const std::vector<double>& point,
                      std::uint64_t seed, Records& out)
{
    if (!(gamma > params.bs.gamma_b))
        throw ValidationError({{"gamma_m", gamma, "backhaul height must exceed gamma_b_m"}});
    Timer t;
    const auto e = mc::estimate_backhaul(params, gamma, o.trials, seed, Exec::Parallel);
    out.push_back(mc_record(point, "p_backhaul", e, t.seconds()));
}

void scenario_records(const Options& o, const Params& params, const std::vector<double>& point, std::uint64_t seed,
                      Records& out)
{
    Timer t;
    const auto grid = parse_values(o.grid);
    analytic::OptimumHeight opt{o.gamma_init, 0};
    Params at = params;
    if (o.gamma_init > 0)
    {
        at.uav.gamma = o.gamma_init;
        opt.p_cov = analytic::coverage_probability(at).p_cov;
    }
    else
    {
        opt = analytic::optimum_height(params, grid, o.refine);
    }
    out.push_back(analytic_record(point, "gamma_init_m", opt.gamma, t.seconds()));
    out.push_back(analytic_record(point, "p_cov", opt.p_cov, t.seconds()));

    Timer tm;
    mc::ScenarioOptions so;
    so.gamma_init = opt.gamma;
    so.step = o.step;
    so.association = association(o);
    const auto e = mc::estimate_scenario(params, so, o.trials, seed, Exec::Parallel);
    const double wall = tm.seconds();
    out.push_back(mc_record(point, "joint_coverage", e.joint_coverage, wall));
    out.push_back({point, "mc", "mean_height_m", e.mean_height, e.mean_height_se, e.uavs, wall});
    out.push_back({point, "mc", "height_excess_m", e.mean_height - opt.gamma, e.mean_height_se, e.uavs, wall});
    out.push_back({point, "mc", "outage_fraction", e.outage_fraction, std::nullopt, e.uavs, wall});
}

// Output sink: stdout or a file, append mode for resumed sweeps.
struct Sink
{
    std::ostream* stream = nullptr;
    std::unique_ptr<std::ofstream> file;
};

Sink open_sink(const Options& o, std::ostream& out, bool append)
{
    Sink s;
    if (o.out.empty())
    {
        s.stream = &out;
        return s;
    }
    s.file = std::make_unique<std::ofstream>(o.out, append ? std::ios::app : std::ios::trunc);
    if (!*s.file)
        throw UsageError("cannot open output file '" + o.out + "'");
    s.stream = s.file.get();
    return s;
}

Format format_of(const Options& o) { return o.format == "json" ? Format::Json : Format::Csv; }

RunMeta meta_for(const char* command, const Options& o, const Config& c)
{
    RunMeta m{command, o.seed, c.hash(), {}};
    m.extra.push_back({"trials", std::to_string(o.trials)});
    m.extra.push_back({"engine", o.engine});
    m.extra.push_back({"association", o.association});
    return m;
}

void emit(const Options& o, std::ostream& out, const char* command, const Config& c,
          const std::vector<std::string>& columns, const Records& records)
{
    auto sink = open_sink(o, out, false);
    RecordWriter w(*sink.stream, format_of(o), columns, o.timing);
    w.write_header(meta_for(command, o, c));
    for (const auto& r : records)
        w.write(r);
}

int cmd_coverage(const Options& o, std::ostream& out, const EnvLookup& env)
{
    const auto c = load_config(o, env);
    const auto params = validate(c);
    Records records;
    coverage_records(o, params, {}, o.seed, records);
    emit(o, out, "coverage", c, {}, records);
    return kSuccess;
}

int cmd_opt_height(const Options& o, std::ostream& out, const EnvLookup& env)
{
    const auto c = load_config(o, env);
    const auto params = validate(c);
    const auto grid = parse_values(o.grid);
    Timer t;
    const auto opt = analytic::optimum_height(params, grid, o.refine);
    const double wall = t.seconds();
    emit(o, out, "opt-height", c, {},
         {analytic_record({}, "gamma_opt_m", opt.gamma, wall), analytic_record({}, "p_cov_opt", opt.p_cov, wall)});
    return kSuccess;
}

int cmd_backhaul(const Options& o, std::ostream& out, const EnvLookup& env)
{
    const auto c = load_config(o, env);
    const auto params = validate(c);
    const auto heights = parse_values(o.heights);
    Records records;
    for (std::size_t i = 0; i < heights.size(); ++i)
        backhaul_records(o, params, heights[i], {heights[i]}, point_seed(o.seed, i), records);
    emit(o, out, "backhaul", c, {"gamma_m"}, records);
    return kSuccess;
}

int cmd_scenario(const Options& o, std::ostream& out, const EnvLookup& env)
{
    const auto c = load_config(o, env);
    const auto params = validate(c);
    Records records;
    scenario_records(o, params, {}, o.seed, records);
    emit(o, out, "scenario", c, {}, records);
    return kSuccess;
}

int cmd_validate(const Options& o, std::ostream& out, const EnvLookup& env)
{
    const auto c = load_config(o, env);
    validate(c);
    out << "# config_hash: " << c.hash() << '\n' << c.serialize();
    return kSuccess;
}

std::string sweep_spec(const Options& o, const Config& c)
{
    std::ostringstream os;
    os << c.serialize() << o.measure << '|' << o.engine << '|' << o.trials << '|' << o.seed << '|' << o.association
       << '|' << o.format << '|' << o.timing << '|' << o.grid << '|' << o.refine << '|' << format_number(o.step) << '|'
       << format_number(o.gamma_init);
    for (const auto& a : o.axes)
        os << '|' << a;
    std::ostringstream hex;
    hex << std::hex << fnv1a(os.str());
    return hex.str();
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err, const EnvLookup& env)
{
    if (o.axes.empty())
        throw UsageError("sweep needs at least one --axis key=v1,v2,...");
    if (o.resume && o.out.empty())
        throw UsageError("--resume needs --out");
    if (o.measure != "coverage" && o.engine == "analytic")
        throw UsageError("measure '" + o.measure + "' needs the mc engine");

    const auto base = load_config(o, env);
    std::vector<Axis> axes;
    std::vector<std::string> columns;
    for (const auto& text : o.axes)
    {
        axes.push_back(parse_axis(text));
        if (std::find(columns.begin(), columns.end(), axes.back().key) != columns.end())
            throw UsageError("axis '" + axes.back().key + "' given twice");
        columns.push_back(axes.back().key);
    }
    std::size_t total = 1;
    for (const auto& a : axes)
        total *= a.values.size();

    const std::string spec = sweep_spec(o, base);
    const std::string manifest_path = o.out.empty() ? std::string() : o.out + ".manifest";
    std::set<std::size_t> done;
    bool resuming = false;
    if (o.resume && std::filesystem::exists(manifest_path))
    {
        std::ifstream in(manifest_path);
        std::string line;
        std::getline(in, line);
        if (line != "spec " + spec)
            throw UsageError("manifest '" + manifest_path + "' belongs to a different sweep");
        while (std::getline(in, line))
            if (!line.empty())
                done.insert(std::stoull(line));
        resuming = true;
    }

    auto sink = open_sink(o, out, resuming);
    std::ofstream manifest;
    if (!manifest_path.empty())
    {
        manifest.open(manifest_path, resuming ? std::ios::app : std::ios::trunc);
        if (!manifest)
            throw UsageError("cannot write manifest '" + manifest_path + "'");
        if (!resuming)
            manifest << "spec " << spec << '\n' << std::flush;
    }

    RecordWriter writer(*sink.stream, format_of(o), columns, o.timing);
    if (!resuming)
    {
        auto meta = meta_for("sweep", o, base);
        meta.extra.push_back({"measure", o.measure});
        meta.extra.push_back({"points", std::to_string(total)});
        writer.write_header(meta);
    }

    std::vector<std::string> failures;
    std::vector<std::size_t> idx(axes.size(), 0);
    for (std::size_t k = 0; k < total; ++k)
    {
        // last axis varies fastest
        std::size_t rem = k;
        for (std::size_t a = axes.size(); a-- > 0;)
        {
            idx[a] = rem % axes[a].values.size();
            rem /= axes[a].values.size();
        }
        if (done.count(k))
            continue;
        std::vector<double> point;
        Config c = base;
        for (std::size_t a = 0; a < axes.size(); ++a)
        {
            point.push_back(axes[a].values[idx[a]]);
            c.set(axes[a].key, point.back());
        }
        Records records;
        try
        {
            const auto params = validate(c);
            const auto seed = point_seed(o.seed, k);
            if (o.measure == "coverage")
                coverage_records(o, params, point, seed, records);
            else if (o.measure == "backhaul")
                backhaul_records(o, params, params.uav.gamma, point, seed, records);
            else
                scenario_records(o, params, point, seed, records);
        }
        catch (const std::exception& e)
        {
            std::ostringstream os;
            os << "point " << k;
            for (std::size_t a = 0; a < axes.size(); ++a)
                os << ' ' << axes[a].key << '=' << format_number(point[a]);
            os << ": " << e.what();
            failures.push_back(os.str());
            err << "uavcov: sweep " << os.str() << '\n';
            continue;
        }
        for (const auto& r : records)
            writer.write(r);
        if (manifest.is_open())
            manifest << k << '\n' << std::flush;
        err << "uavcov: sweep point " << (k + 1) << '/' << total << " done\n";
    }

    if (!failures.empty())
    {
        err << "uavcov: sweep finished with " << failures.size() << " failed point(s) of " << total << ":\n";
        for (const auto& f : failures)
            err << "  " << f << '\n';
        return kPartialFailure;
    }
    return kSuccess;
}

void add_common(CLI::App* app, Options& o, bool engine)
{
    app->add_option("--config", o.config, "Config file (key = value lines)");
    if (engine)
        app->add_option("--engine", o.engine, "analytic, mc or both")
            ->check(CLI::IsMember({"analytic", "mc", "both"}));
    app->add_option("--trials", o.trials, "Monte Carlo trials per point")->check(CLI::PositiveNumber);
    app->add_option("--seed", o.seed, "Master seed");
    app->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    app->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app->add_option("--out", o.out, "Output file (default stdout)");
    app->add_flag("--timing", o.timing, "Add a wall_s column");
    app->add_option("--association", o.association, "Serving rule: averaged or instantaneous")
        ->check(CLI::IsMember({"averaged", "instantaneous"}));
}

} // namespace

std::vector<double> parse_values(std::string_view text)
{
    std::vector<double> out;
    if (text.find(':') != std::string_view::npos)
    {
        std::vector<double> parts;
        std::size_t start = 0;
        while (true)
        {
            const auto colon = text.find(':', start);
            parts.push_back(parse_number(text.substr(start, colon - start)));
            if (colon == std::string_view::npos)
                break;
            start = colon + 1;
        }
        if (parts.size() != 3 || !(parts[2] > 0) || parts[1] < parts[0])
            throw ConfigError("range must be start:stop:step with step > 0 and stop >= start: '" + std::string(text) +
                              "'");
        const double count = std::floor((parts[1] - parts[0]) / parts[2] + 1e-9);
        if (count > 1e6)
            throw ConfigError("range has too many points: '" + std::string(text) + "'");
        for (int i = 0; i <= static_cast<int>(count); ++i)
            out.push_back(parts[0] + i * parts[2]);
        return out;
    }
    std::size_t start = 0;
    while (true)
    {
        const auto comma = text.find(',', start);
        out.push_back(parse_number(text.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

Axis parse_axis(std::string_view text)
{
    const auto eq = text.find('=');
    if (eq == std::string_view::npos)
        throw ConfigError("axis must be key=v1,v2,...: '" + std::string(text) + "'");
    Axis a{std::string(text.substr(0, eq)), {}};
    if (!Config().has_key(a.key))
        throw ConfigError("unknown config key '" + a.key + "' in axis");
    a.values = parse_values(text.substr(eq + 1));
    return a;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env)
{
    Options o;
    CLI::App app{"Coverage and backhaul analysis for urban UAV networks", "uavcov"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    auto* coverage = app.add_subcommand("coverage", "Coverage, association and serving-LOS probability");
    add_common(coverage, o, true);

    auto* sweep = app.add_subcommand("sweep", "Cartesian sweep over config keys");
    add_common(sweep, o, true);
    sweep->add_option("--axis", o.axes, "key=v1,v2,... or key=start:stop:step (repeatable)");
    sweep->add_option("--measure", o.measure, "coverage, backhaul or scenario")
        ->check(CLI::IsMember({"coverage", "backhaul", "scenario"}));
    sweep->add_flag("--resume", o.resume, "Skip points listed in <out>.manifest");
    sweep->add_option("--grid", o.grid, "Height grid for the scenario start height");
    sweep->add_option("--step", o.step, "Scenario climb step (m)")->check(CLI::PositiveNumber);

    auto* opt = app.add_subcommand("opt-height", "Height maximising analytic coverage");
    add_common(opt, o, false);
    opt->add_option("--grid", o.grid, "Heights, v1,v2,... or start:stop:step (m)");
    opt->add_flag("--refine", o.refine, "Golden-section refinement around the grid optimum");

    auto* backhaul = app.add_subcommand("backhaul", "Backhaul probability versus UAV height");
    add_common(backhaul, o, false);
    backhaul->add_option("--heights", o.heights, "Heights, v1,v2,... or start:stop:step (m)");

    auto* scenario = app.add_subcommand("scenario", "Climb-until-backhaul height scenario");
    add_common(scenario, o, false);
    scenario->add_option("--grid", o.grid, "Height grid for the analytic start height");
    scenario->add_flag("--refine", o.refine, "Refine the start height");
    scenario->add_option("--step", o.step, "Climb step (m)")->check(CLI::PositiveNumber);
    scenario->add_option("--gamma-init", o.gamma_init, "Start height (m); default is the analytic optimum");

    auto* validate_cmd = app.add_subcommand("validate", "Check a config and print it normalised");
    validate_cmd->add_option("--config", o.config, "Config file");

    std::vector<const char*> argv{"uavcov"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    set_jobs(o.jobs);
    try
    {
        if (*coverage)
            return cmd_coverage(o, out, env);
        if (*sweep)
            return cmd_sweep(o, out, err, env);
        if (*opt)
            return cmd_opt_height(o, out, env);
        if (*backhaul)
            return cmd_backhaul(o, out, env);
        if (*scenario)
            return cmd_scenario(o, out, env);
        return cmd_validate(o, out, env);
    }
    catch (const ValidationError& e)
    {
        err << "uavcov: invalid parameters:\n";
        for (const auto& v : e.violations())
            err << "  " << v.field << " = " << format_number(v.value) << ": " << v.constraint << '\n';
        return kUsageError;
    }
    catch (const ConfigError& e)
    {
        err << "uavcov: " << e.what() << '\n';
        return kUsageError;
    }
    catch (const UsageError& e)
    {
        err << "uavcov: " << e.what() << '\n';
        return kUsageError;
    }
    catch (const std::exception& e)
    {
        err << "uavcov: error: " << e.what() << '\n';
        return kPartialFailure;
    }
}

} // namespace uavcov::cli
