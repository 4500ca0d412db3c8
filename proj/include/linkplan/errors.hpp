// Copyright (C) 2026 linkplan contributors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <stdexcept>
#include <string>

namespace linkplan {

// Malformed or contradictory run configuration: bad JSON, schema violations,
// unknown keys, missing built-in models or fixtures. Domain preconditions on
// already-parsed values throw std::invalid_argument instead.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace linkplan
