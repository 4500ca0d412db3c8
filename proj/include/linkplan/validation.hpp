// Copyright (C) 2026 linkplan contributors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <string>
#include <vector>

namespace linkplan {

struct Violation {
    std::string code;     // stable machine-readable tag, e.g. "isolation"
    std::string message;  // human-readable detail
};

struct ValidationReport {
    std::vector<Violation> violations;
    std::vector<std::string> notes;  // informational, never affect pass/fail

    bool passed() const { return violations.empty(); }
};

}  // namespace linkplan
