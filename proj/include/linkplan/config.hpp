// Copyright (C) 2026 linkplan contributors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkplan/report.hpp"
#include "linkplan/scenario.hpp"

namespace linkplan::config {

enum class OutputFormat { table, csv };

struct OutputOptions {
    OutputFormat format = OutputFormat::table;
    std::string path;  // empty -> stdout
    report::Rounding rounding = report::Rounding::display;
};

// Parsed run configuration: scenario inputs plus output options and the
// optional validation sections.
struct RunConfig {
    scenario::ScenarioConfig scenario;
    std::vector<double> injected_se_values;  // per-point SE for sweeps (table mode)
    geometry::FrequencyPlan frequency_plan = geometry::reference_frequency_plan();
    int max_harmonic = 10;
    OutputOptions output;
};

// Strict, versioned JSON schema ("schema_version": 1). Unknown keys are
// errors naming the offending key and its path; parse errors carry the line
// number. Both throw ConfigError.
RunConfig parse_file(const std::string& path);
RunConfig parse_string(const std::string& json_text, const std::string& source_name);

}  // namespace linkplan::config
