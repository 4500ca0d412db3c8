// Copyright (C) 2026 linkplan contributors
// SPDX-License-Identifier: Apache-2.0
//
// linkplan: mmWave link-budget and throughput planning CLI.
//
//   linkplan budget  (--config F | --fixture N) [--se-mode M] [--format table|csv] [--output F]
//   linkplan sweep   (--config F | --fixture N) --axis A --values v1,v2,...
//   linkplan validate (--config F | --fixture N) [--kind layout|freqplan|all]
//   linkplan fixtures
//   linkplan export-models [--output F]
//
// Exit codes: 0 success, 1 validation failure, 2 usage or configuration error.

#include <charconv>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linkplan/config.hpp"
#include "linkplan/errors.hpp"
#include "linkplan/fixtures.hpp"
#include "linkplan/report.hpp"
#include "linkplan/scenario.hpp"

namespace {

using namespace linkplan;

struct CommonOpts {
    std::string config_path;
    std::string fixture_name;
    std::string se_mode;
    std::string format;
    std::string output;
};

void add_source_opts(CLI::App* cmd, CommonOpts& o) {
    auto* cfg = cmd->add_option("--config", o.config_path, "JSON run configuration");
    auto* fix = cmd->add_option("--fixture", o.fixture_name, "built-in fixture name");
    cfg->excludes(fix);
    fix->excludes(cfg);
}

void add_output_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--se-mode", o.se_mode,
                    "override SE mapping: shannon, backoff:<dB>, or table");
    cmd->add_option("--format", o.format, "output format: table or csv")
        ->check(CLI::IsMember({"table", "csv"}));
    cmd->add_option("--output", o.output, "write output to this file instead of stdout");
}

config::RunConfig load(const CommonOpts& o) {
    if (!o.config_path.empty()) {
        return config::parse_file(o.config_path);
    }
    if (!o.fixture_name.empty()) {
        return fixtures::get(o.fixture_name);
    }
    throw ConfigError("either --config or --fixture is required");
}

void apply_overrides(const CommonOpts& o, config::RunConfig& run) {
    if (!o.se_mode.empty()) {
        if (o.se_mode == "shannon") {
            run.scenario.se_mapping.mode = rate::SeMode::shannon;
        } else if (o.se_mode == "table") {
            run.scenario.se_mapping.mode = rate::SeMode::table_injected;
        } else if (o.se_mode.rfind("backoff:", 0) == 0) {
            const std::string arg = o.se_mode.substr(8);
            double backoff = 0.0;
            auto [ptr, ec] =
                std::from_chars(arg.data(), arg.data() + arg.size(), backoff);
            if (ec != std::errc{} || ptr != arg.data() + arg.size() || backoff < 0.0) {
                throw ConfigError("--se-mode backoff:<dB> needs a number >= 0, got '" + arg + "'");
            }
            run.scenario.se_mapping.mode = rate::SeMode::shannon_with_backoff;
            run.scenario.se_mapping.backoff_db = backoff;
        } else {
            throw ConfigError("unknown --se-mode '" + o.se_mode +
                              "' (expected shannon, backoff:<dB>, table)");
        }
    }
    if (o.format == "table") {
        run.output.format = config::OutputFormat::table;
    } else if (o.format == "csv") {
        run.output.format = config::OutputFormat::csv;
    }
    if (!o.output.empty()) {
        run.output.path = o.output;
    }
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError(path + ": cannot open for writing");
    }
    out << text;
}

int run_budget(const CommonOpts& o) {
    config::RunConfig run = load(o);
    apply_overrides(o, run);
    scenario::LinkBudgetResult result = scenario::evaluate(run.scenario);
    std::string text = run.output.format == config::OutputFormat::csv
                           ? report::budget_csv(result)
                           : report::budget_table(result, run.output.rounding);
    emit(text, run.output.path);
    return 0;
}

int run_sweep(const CommonOpts& o, const std::string& axis_token,
              const std::vector<double>& values) {
    config::RunConfig run = load(o);
    apply_overrides(o, run);
    scenario::SweepAxis axis = scenario::sweep_axis_from_token(axis_token);

    std::vector<double> native = values;
    std::string axis_label = axis_token;
    if (axis == scenario::SweepAxis::bandwidth) {
        for (double& v : native) {
            v *= 1e6;  // --values gives MHz; the sweep works in Hz
        }
        axis_label = "bandwidth_mhz";
    } else if (axis == scenario::SweepAxis::distance) {
        axis_label = "distance_m";
    }

    std::span<const double> injected;
    if (run.scenario.se_mapping.mode == rate::SeMode::table_injected &&
        !run.injected_se_values.empty()) {
        injected = run.injected_se_values;
    }
    std::vector<scenario::SweepPoint> points = scenario::sweep(run.scenario, axis, native, injected);
    if (axis == scenario::SweepAxis::bandwidth) {
        for (size_t i = 0; i < points.size(); ++i) {
            points[i].axis_value = values[i];
        }
    }

    std::string text = run.output.format == config::OutputFormat::csv
                           ? report::sweep_csv(points, axis_label)
                           : report::sweep_table(points, axis_label, run.output.rounding);
    emit(text, run.output.path);
    return 0;
}

int run_validate(const CommonOpts& o, const std::string& kind) {
    config::RunConfig run = load(o);
    bool ok = true;
    std::string text;
    if (kind == "layout" || kind == "all") {
        ValidationReport report = geometry::validate_layout(run.scenario.ue_layout);
        text += "== layout ==\n" + report::validation_text(report);
        ok = ok && report.passed();
    }
    if (kind == "freqplan" || kind == "all") {
        ValidationReport report =
            geometry::validate_frequency_plan(run.frequency_plan, run.max_harmonic);
        text += "== frequency plan ==\n" + report::validation_text(report);
        ok = ok && report.passed();
    }
    emit(text, o.output);
    return ok ? 0 : 1;
}

int run_fixtures() {
    for (const auto& info : fixtures::list()) {
        std::cout << info.name << "  " << info.description << '\n';
    }
    return 0;
}

int run_export_models(const CommonOpts& o) {
    emit(channel::models_csv(), o.output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mmWave link-budget and throughput planner"};
    app.require_subcommand(1);

    CommonOpts budget_opts;
    CLI::App* budget = app.add_subcommand("budget", "evaluate one link budget");
    add_source_opts(budget, budget_opts);
    add_output_opts(budget, budget_opts);

    CommonOpts sweep_opts;
    std::string axis_token;
    std::vector<double> values;
    CLI::App* sweep = app.add_subcommand("sweep", "evaluate a budget across one axis");
    add_source_opts(sweep, sweep_opts);
    add_output_opts(sweep, sweep_opts);
    sweep->add_option("--axis", axis_token, "distance, n_ant, n_array, or bandwidth")
        ->required();
    sweep->add_option("--values", values, "comma-separated axis values (bandwidth in MHz)")
        ->required()
        ->delimiter(',');

    CommonOpts validate_opts;
    std::string kind = "all";
    CLI::App* validate = app.add_subcommand("validate", "check layout and frequency plan");
    add_source_opts(validate, validate_opts);
    validate->add_option("--kind", kind, "layout, freqplan, or all")
        ->check(CLI::IsMember({"layout", "freqplan", "all"}));
    validate->add_option("--output", validate_opts.output,
                         "write the report to this file instead of stdout");

    CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "list built-in fixtures");

    CommonOpts export_opts;
    CLI::App* export_models = app.add_subcommand("export-models", "CSV of built-in path-loss models");
    export_models->add_option("--output", export_opts.output,
                              "write the CSV to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (budget->parsed()) {
            return run_budget(budget_opts);
        }
        if (sweep->parsed()) {
            return run_sweep(sweep_opts, axis_token, values);
        }
        if (validate->parsed()) {
            return run_validate(validate_opts, kind);
        }
        if (fixtures_cmd->parsed()) {
            return run_fixtures();
        }
        if (export_models->parsed()) {
            return run_export_models(export_opts);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
