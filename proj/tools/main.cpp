// trendhedge command-line driver: synthetic data generation, trend
// extraction, tracking-control hedging backtests and jump analysis, with
// plot-ready CSV/SVG output.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "trendhedge/errors.hpp"
#include "trendhedge/hedge.hpp"
#include "trendhedge/jump.hpp"
#include "trendhedge/rates.hpp"
#include "trendhedge/series.hpp"
#include "trendhedge/svg.hpp"
#include "trendhedge/table.hpp"
#include "trendhedge/trend.hpp"

namespace fs = std::filesystem;
using namespace trendhedge;

namespace {

struct GenerateArgs {
    SynthSpec spec;
    std::vector<std::string> jump_specs;
    double dt = kTradingDayDt;
    std::string label = "synthetic";
    std::string out;
};

struct PipelineArgs {
    std::string underlying;
    std::string option;
    std::string rates_path;
    double rate = 0.0;
    double dt = kTradingDayDt;
    TrendConfig trend;
    double carry_q = 0.0;
    bool use_carry = false;
    std::string out_dir;
    bool svg = false;

    // jumps subcommand only
    JumpConfig jump;
    PolicyConfig policy;
    std::string policy_name = "rate-limit";
};

std::vector<std::pair<std::size_t, double>> parse_jump_specs(
    const std::vector<std::string>& specs) {
    std::vector<std::pair<std::size_t, double>> jumps;
    for (const auto& text : specs) {
        const auto colon = text.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("--jump expects INDEX:SIZE, got '" +
                                        text + "'");
        try {
            const std::size_t idx = std::stoull(text.substr(0, colon));
            const double size = std::stod(text.substr(colon + 1));
            jumps.emplace_back(idx, size);
        } catch (const std::exception&) {
            throw std::invalid_argument("--jump expects INDEX:SIZE, got '" +
                                        text + "'");
        }
    }
    return jumps;
}

Table trend_table(const TrendEstimate& est, const PriceSeries& raw) {
    Table t;
    t.header = {"index", "raw", "trend", "deriv", "residual"};
    t.rows.reserve(est.size());
    for (std::size_t k = 0; k < est.size(); ++k)
        t.rows.push_back({std::to_string(k), format_double(raw.values[k]),
                          format_double(est.trend[k]),
                          format_double(est.deriv[k]),
                          format_double(est.residual[k])});
    return t;
}

void emit_table_svg(const Table& t, const fs::path& csv_path,
                    const std::string& title) {
    std::vector<LineSeries> lines;
    for (std::size_t c = 1; c < t.header.size(); ++c) {
        LineSeries s;
        s.name = t.header[c];
        s.y.reserve(t.rows.size());
        bool numeric = true;
        for (const auto& row : t.rows) {
            double v = 0.0;
            try {
                v = std::stod(row[c]);
            } catch (const std::exception&) {
                numeric = false;
                break;
            }
            s.y.push_back(v);
        }
        if (numeric) lines.push_back(std::move(s));
    }
    fs::path svg_path = csv_path;
    svg_path.replace_extension(".svg");
    write_line_svg(svg_path, title, lines);
}

void write_outputs(const Table& t, const fs::path& csv_path,
                   const std::string& title, bool svg) {
    write_table(t, csv_path);
    if (svg) emit_table_svg(t, csv_path, title);
}

struct LoadedPipeline {
    PriceSeries underlying;
    PriceSeries option;
    RatePath rates;
    TrendEstimate s_trend;
    TrendEstimate v_trend;
    HedgeInit init;
    HedgePath path;
};

LoadedPipeline run_pipeline(const PipelineArgs& args) {
    LoadedPipeline p;
    p.underlying = load_csv(args.underlying, args.dt);
    p.option = load_csv(args.option, args.dt);
    if (p.underlying.size() != p.option.size())
        throw Error("length mismatch: underlying has " +
                    std::to_string(p.underlying.size()) +
                    " samples, option has " +
                    std::to_string(p.option.size()));

    if (!args.rates_path.empty()) {
        p.rates = load_rate_csv(args.rates_path, args.dt);
        if (p.rates.size() != p.underlying.size())
            throw Error("length mismatch: rate path has " +
                        std::to_string(p.rates.size()) +
                        " samples, series have " +
                        std::to_string(p.underlying.size()));
    } else {
        p.rates = constant_rate(args.rate, p.underlying.size(),
                                p.underlying.dt_years);
    }

    p.s_trend = estimate_trend(p.underlying, args.trend);
    p.v_trend = estimate_trend(p.option, args.trend);
    p.init = init_hedge(p.v_trend, p.s_trend, p.rates.rates[0]);
    p.path = args.use_carry
                 ? delta_path_carry(p.v_trend, p.s_trend, p.rates, p.init,
                                    CarryParams{args.carry_q})
                 : delta_path(p.v_trend, p.s_trend, p.rates, p.init);
    return p;
}

int run_generate(const GenerateArgs& args) {
    SynthSpec spec = args.spec;
    spec.jumps = parse_jump_specs(args.jump_specs);
    const PriceSeries series = generate(spec, args.dt, args.label);
    write_csv(series, args.out);
    std::cout << args.out << '\n';
    return 0;
}

int run_trend(const PipelineArgs& args) {
    const PriceSeries series = load_csv(args.underlying, args.dt);
    const TrendEstimate est = estimate_trend(series, args.trend);
    fs::create_directories(args.out_dir);
    write_outputs(trend_table(est, series), fs::path(args.out_dir) / "trend.csv",
                  "trend decomposition", args.svg);
    return 0;
}

int run_hedge(const PipelineArgs& args) {
    const LoadedPipeline p = run_pipeline(args);
    const ReplicationReport rep =
        replication_report(p.option, p.underlying, p.path);

    fs::create_directories(args.out_dir);
    const fs::path dir(args.out_dir);
    write_outputs(trend_table(p.s_trend, p.underlying),
                  dir / "trend_underlying.csv", "underlying trend", args.svg);
    write_outputs(trend_table(p.v_trend, p.option), dir / "trend_option.csv",
                  "option trend", args.svg);

    Table delta;
    delta.header = {"index", "delta", "target", "raw_error"};
    for (std::size_t k = 0; k < p.path.size(); ++k)
        delta.rows.push_back({std::to_string(k),
                              format_double(p.path.delta[k]),
                              format_double(p.path.target[k]),
                              format_double(rep.error[k])});
    write_outputs(delta, dir / "delta.csv", "delta tracking", args.svg);

    std::ofstream report(dir / "report.txt", std::ios::binary);
    if (!report) throw IoError("cannot write " + (dir / "report.txt").string());
    report << "samples=" << p.path.size() << '\n'
           << "delta0=" << format_double(p.init.delta0) << '\n'
           << "pi0=" << format_double(p.init.pi0) << '\n'
           << "max_abs_error=" << format_double(rep.max_abs_error) << '\n'
           << "rms_error=" << format_double(rep.rms_error) << '\n'
           << "terminal_error=" << format_double(rep.terminal_error) << '\n';
    return 0;
}

int run_jumps(const PipelineArgs& args) {
    const LoadedPipeline p = run_pipeline(args);
    const JumpForecast forecast =
        forecast_jumps(p.underlying, p.s_trend, args.jump);
    const HedgePath shaped = shape_delta(p.path, forecast, args.policy);

    fs::create_directories(args.out_dir);
    const fs::path dir(args.out_dir);

    Table jumps;
    jumps.header = {"index", "direction", "score"};
    for (const auto& event : forecast.events)
        jumps.rows.push_back(
            {std::to_string(event.index),
             event.direction == JumpDirection::upward ? "up" : "down",
             format_double(event.score)});
    write_table(jumps, dir / "jumps.csv");

    Table side;
    side.header = {"index", "delta", "delta_shaped"};
    for (std::size_t k = 0; k < p.path.size(); ++k)
        side.rows.push_back({std::to_string(k),
                             format_double(p.path.delta[k]),
                             format_double(shaped.delta[k])});
    write_outputs(side, dir / "delta_shaped.csv", "delta shaping", args.svg);
    return 0;
}

void add_trend_options(CLI::App* cmd, PipelineArgs& args) {
    cmd->add_option("--window", args.trend.window, "Trend fit window")
        ->check(CLI::Range(2, 10000));
    cmd->add_option("--degree", args.trend.degree,
                    "Trend polynomial degree (0, 1 or 2)")
        ->check(CLI::Range(0, 2));
    cmd->add_option("--min-points", args.trend.min_points,
                    "Smallest fit near the series start")
        ->check(CLI::Range(1, 10000));
    cmd->add_option("--dt", args.dt,
                    "Sampling interval in years when the CSV has none")
        ->check(CLI::PositiveNumber);
}

void add_pipeline_options(CLI::App* cmd, PipelineArgs& args) {
    cmd->add_option("--underlying", args.underlying, "Underlying series CSV")
        ->required();
    cmd->add_option("--option", args.option, "Option series CSV")->required();
    auto* rate = cmd->add_option("--rate", args.rate,
                                 "Constant annualized risk-free rate");
    cmd->add_option("--rates", args.rates_path, "Rate path CSV")
        ->excludes(rate);
    add_trend_options(cmd, args);
    cmd->add_option("--out", args.out_dir, "Output directory")->required();
    cmd->add_flag("--svg", args.svg, "Also emit SVG line plots");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"model-free delta hedging on time-series trends"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* cmd_gen =
        app.add_subcommand("generate", "Write a synthetic price series CSV");
    cmd_gen->set_config("--config", "", "Config file (key=value lines)");
    cmd_gen->add_option("--n", gen.spec.n, "Sample count")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
    cmd_gen->add_option("--s0", gen.spec.s0, "Initial price")
        ->check(CLI::PositiveNumber);
    cmd_gen->add_option("--drift", gen.spec.drift, "Annualized drift");
    cmd_gen->add_option("--vol", gen.spec.vol, "Annualized volatility")
        ->check(CLI::NonNegativeNumber);
    cmd_gen->add_option("--seed", gen.spec.seed, "PRNG seed");
    cmd_gen->add_option("--jump", gen.jump_specs,
                        "Multiplicative jump INDEX:SIZE (repeatable)");
    cmd_gen->add_option("--dt", gen.dt, "Sampling interval in years")
        ->check(CLI::PositiveNumber);
    cmd_gen->add_option("--label", gen.label, "Series label");
    cmd_gen->add_option("--out", gen.out, "Output CSV path")->required();

    PipelineArgs trend_args;
    auto* cmd_trend = app.add_subcommand(
        "trend", "Decompose a series into trend and fluctuations");
    cmd_trend->set_config("--config", "", "Config file (key=value lines)");
    cmd_trend
        ->add_option("--underlying", trend_args.underlying, "Input series CSV")
        ->required();
    add_trend_options(cmd_trend, trend_args);
    cmd_trend->add_option("--out", trend_args.out_dir, "Output directory")
        ->required();
    cmd_trend->add_flag("--svg", trend_args.svg, "Also emit SVG line plots");

    PipelineArgs hedge_args;
    auto* cmd_hedge = app.add_subcommand(
        "hedge", "Run the tracking-control hedging backtest");
    cmd_hedge->set_config("--config", "", "Config file (key=value lines)");
    add_pipeline_options(cmd_hedge, hedge_args);
    auto* carry = cmd_hedge->add_option(
        "--carry", hedge_args.carry_q,
        "Cost-of-carry rate q (switches to the carry variant)");

    PipelineArgs jumps_args;
    auto* cmd_jumps = app.add_subcommand(
        "jumps", "Forecast abrupt changes and shape the hedge path");
    cmd_jumps->set_config("--config", "", "Config file (key=value lines)");
    add_pipeline_options(cmd_jumps, jumps_args);
    auto* carry_j = cmd_jumps->add_option(
        "--carry", jumps_args.carry_q,
        "Cost-of-carry rate q (switches to the carry variant)");
    cmd_jumps->add_option("--z", jumps_args.jump.z_threshold,
                          "Jump trigger threshold")
        ->check(CLI::PositiveNumber);
    cmd_jumps->add_option("--stat-window", jumps_args.jump.stat_window,
                          "Rolling residual-scale window")
        ->check(CLI::Range(4, 100000));
    cmd_jumps->add_option("--direction-window",
                          jumps_args.jump.direction_window,
                          "Samples voting on jump direction")
        ->check(CLI::Range(1, 100000));
    cmd_jumps->add_option("--refractory", jumps_args.jump.refractory,
                          "Samples between events")
        ->check(CLI::Range(0, 100000));
    cmd_jumps->add_option("--policy", jumps_args.policy_name,
                          "Shaping policy: freeze or rate-limit")
        ->check(CLI::IsMember({"freeze", "rate-limit"}));
    cmd_jumps->add_option("--max-step", jumps_args.policy.max_step,
                          "Per-sample delta change cap (rate-limit)")
        ->check(CLI::PositiveNumber);
    cmd_jumps->add_option("--freeze-horizon", jumps_args.policy.freeze_horizon,
                          "Samples held after each event (freeze)")
        ->check(CLI::Range(0, 100000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_gen->parsed()) return run_generate(gen);
        if (cmd_trend->parsed()) return run_trend(trend_args);
        if (cmd_hedge->parsed()) {
            hedge_args.use_carry = carry->count() > 0;
            return run_hedge(hedge_args);
        }
        if (cmd_jumps->parsed()) {
            jumps_args.use_carry = carry_j->count() > 0;
            jumps_args.policy.policy = jumps_args.policy_name == "freeze"
                                           ? ShapingPolicy::freeze
                                           : ShapingPolicy::rate_limit;
            return run_jumps(jumps_args);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
