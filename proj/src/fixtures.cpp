// Copyright (C) 2026 linkplan contributors
// SPDX-License-Identifier: Apache-2.0
//
#include "linkplan/fixtures.hpp"

#include <sstream>

#include "linkplan/errors.hpp"

namespace linkplan::fixtures {

namespace {

using channel::DeploymentScenario;
using scenario::LinkDirection;

struct BudgetRow {
    const char* name;
    const char* description;
    DeploymentScenario scenario;
    double distance_m;
    LinkDirection direction;
    double injected_se;                     // this column's SE
    std::initializer_list<double> family;   // SE list for the family distance sweep
};

// The sixteen 28 GHz / 200 MHz reference budget columns. Injected SE values
// reproduce the reference throughputs exactly (throughput = SE * 160 Mbps per
// layer at 20% overhead).
const BudgetRow kBudgetRows[] = {
    {"dl_umi_open_100m", "downlink, street-open NLOS, 100 m",
     DeploymentScenario::umi_street_open_nlos, 100.0, LinkDirection::downlink, 8.0, {8.0, 8.0}},
    {"dl_umi_open_200m", "downlink, street-open NLOS, 200 m",
     DeploymentScenario::umi_street_open_nlos, 200.0, LinkDirection::downlink, 8.0, {8.0, 8.0}},
    {"dl_umi_canyon_100m", "downlink, street-canyon NLOS, 100 m",
     DeploymentScenario::umi_street_canyon_nlos, 100.0, LinkDirection::downlink, 8.0, {8.0, 8.0}},
    {"dl_umi_canyon_200m", "downlink, street-canyon NLOS, 200 m",
     DeploymentScenario::umi_street_canyon_nlos, 200.0, LinkDirection::downlink, 8.0, {8.0, 8.0}},
    {"dl_uma_200m", "downlink, urban-macro NLOS, 200 m", DeploymentScenario::uma_nlos, 200.0,
     LinkDirection::downlink, 8.0, {8.0, 7.1125, 4.35, 1.6875}},
    {"dl_uma_500m", "downlink, urban-macro NLOS, 500 m", DeploymentScenario::uma_nlos, 500.0,
     LinkDirection::downlink, 7.1125, {8.0, 7.1125, 4.35, 1.6875}},
    {"dl_uma_1000m", "downlink, urban-macro NLOS, 1000 m", DeploymentScenario::uma_nlos, 1000.0,
     LinkDirection::downlink, 4.35, {8.0, 7.1125, 4.35, 1.6875}},
    {"dl_uma_2000m", "downlink, urban-macro NLOS, 2000 m", DeploymentScenario::uma_nlos, 2000.0,
     LinkDirection::downlink, 1.6875, {8.0, 7.1125, 4.35, 1.6875}},
    {"ul_umi_open_100m", "uplink, street-open NLOS, 100 m",
     DeploymentScenario::umi_street_open_nlos, 100.0, LinkDirection::uplink, 6.18125,
     {6.18125, 3.5625}},
    {"ul_umi_open_200m", "uplink, street-open NLOS, 200 m",
     DeploymentScenario::umi_street_open_nlos, 200.0, LinkDirection::uplink, 3.5625,
     {6.18125, 3.5625}},
    {"ul_umi_canyon_100m", "uplink, street-canyon NLOS, 100 m",
     DeploymentScenario::umi_street_canyon_nlos, 100.0, LinkDirection::uplink, 4.0125,
     {4.0125, 1.55}},
    {"ul_umi_canyon_200m", "uplink, street-canyon NLOS, 200 m",
     DeploymentScenario::umi_street_canyon_nlos, 200.0, LinkDirection::uplink, 1.55,
     {4.0125, 1.55}},
    {"ul_uma_200m", "uplink, urban-macro NLOS, 200 m", DeploymentScenario::uma_nlos, 200.0,
     LinkDirection::uplink, 2.90, {2.90, 0.575, 0.085625, 0.010625}},
    {"ul_uma_500m", "uplink, urban-macro NLOS, 500 m", DeploymentScenario::uma_nlos, 500.0,
     LinkDirection::uplink, 0.575, {2.90, 0.575, 0.085625, 0.010625}},
    {"ul_uma_1000m", "uplink, urban-macro NLOS, 1000 m", DeploymentScenario::uma_nlos, 1000.0,
     LinkDirection::uplink, 0.085625, {2.90, 0.575, 0.085625, 0.010625}},
    {"ul_uma_2000m", "uplink, urban-macro NLOS, 2000 m", DeploymentScenario::uma_nlos, 2000.0,
     LinkDirection::uplink, 0.010625, {2.90, 0.575, 0.085625, 0.010625}},
};

config::RunConfig budget_fixture(const BudgetRow& row) {
    config::RunConfig run;
    scenario::ScenarioConfig& cfg = run.scenario;
    cfg.scenario = row.scenario;
    cfg.distance = Distance::m(row.distance_m);
    cfg.direction = row.direction;
    cfg.se_mapping.mode = rate::SeMode::table_injected;
    cfg.se_mapping.injected_se = row.injected_se;
    run.injected_se_values.assign(row.family.begin(), row.family.end());
    return run;
}

}  // namespace

std::vector<FixtureInfo> list() {
    std::vector<FixtureInfo> out;
    for (const auto& row : kBudgetRows) {
        out.push_back({row.name, row.description});
    }
    out.push_back({"layout_8module", "eight-module handset layout (placement validation)"});
    out.push_back({"freqplan_28ghz", "28 GHz receiver frequency plan (interference validation)"});
    return out;
}

config::RunConfig get(const std::string& name) {
    for (const auto& row : kBudgetRows) {
        if (name == row.name) {
            return budget_fixture(row);
        }
    }
    if (name == "layout_8module" || name == "freqplan_28ghz") {
        return config::RunConfig{};  // defaults carry the reference layout and plan
    }
    std::ostringstream msg;
    msg << "unknown fixture '" << name << "'; available:";
    for (const auto& info : list()) {
        msg << ' ' << info.name;
    }
    throw ConfigError(msg.str());
}

}  // namespace linkplan::fixtures
