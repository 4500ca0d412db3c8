// Copyright (C) 2026 linkplan contributors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <string>
#include <vector>

#include "linkplan/scenario.hpp"
#include "linkplan/validation.hpp"

namespace linkplan::report {

// Shortest decimal representation that round-trips the double exactly,
// locale-independent. Used for every numeric CSV cell.
std::string format_full(double v);

// Display rounding: dB/dBm to 1 decimal, SE to 2 decimals, throughput to
// integer Mbps.
std::string format_db(double v);
std::string format_se(double v);
std::string format_mbps(double bps);

enum class Rounding { display, full };

// Human-readable two-column table of one budget result.
std::string budget_table(const scenario::LinkBudgetResult& r, Rounding rounding = Rounding::display);

// Machine-readable CSV: header row + one data row, full precision,
// byte-stable for identical results.
std::string budget_csv(const scenario::LinkBudgetResult& r);

// One CSV row per sweep point; leading column named after the axis.
std::string sweep_csv(const std::vector<scenario::SweepPoint>& points,
                      const std::string& axis_label);

std::string sweep_table(const std::vector<scenario::SweepPoint>& points,
                        const std::string& axis_label, Rounding rounding = Rounding::display);

// Validation report: one line per violation, then notes, then PASS/FAIL.
std::string validation_text(const ValidationReport& report);

}  // namespace linkplan::report
