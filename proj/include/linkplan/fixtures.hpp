// Copyright (C) 2026 linkplan contributors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <string>
#include <vector>

#include "linkplan/config.hpp"

namespace linkplan::fixtures {

struct FixtureInfo {
    std::string name;
    std::string description;
};

// Built-in run configurations: the eight downlink and eight uplink 28 GHz
// reference budget columns (with table-mode SE injections reproducing the
// reference throughputs exactly), the eight-module handset layout, and the
// 28 GHz receiver frequency plan.
std::vector<FixtureInfo> list();

// Throws ConfigError for unknown names, listing the available fixtures.
config::RunConfig get(const std::string& name);

}  // namespace linkplan::fixtures
