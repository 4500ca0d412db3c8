// Copyright (C) 2026 linkplan contributors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <utility>
#include <vector>

#include "linkplan/quantities.hpp"
#include "linkplan/validation.hpp"

namespace linkplan::geometry {

// Microstrip substrate parameters for the effective-dielectric-constant
// approximation.
struct SubstrateSpec {
    double epsilon_r;        // relative dielectric constant, >= 1
    double trace_width_mm;   // conductor width W
    double substrate_height_mm;  // substrate thickness H
};

// Two-branch quasi-static approximation; branch chosen by W/H, continuous at
// W/H = 1. Result lies in [1, epsilon_r].
double effective_dielectric_constant(const SubstrateSpec& s);

double free_space_wavelength_m(Frequency f);
// lambda_e = c0 / (f * sqrt(epsilon_eff)); epsilon_eff must be >= 1.
double effective_wavelength_m(Frequency f, double epsilon_eff);

// Grating-lobe bound on element spacing: d / lambda0 <= 1 / (1 + cos(theta)),
// theta in degrees within [0, 90].
double max_spacing_ratio(double theta_max_deg);

// Module stack-up layer thicknesses, mm.
struct StackUp {
    double antenna_mm;
    double bump_mm;
    double die_mm;
    double pcb_mm;
    double connector_mm;
};

double stackup_thickness_mm(const StackUp& s);

// Placement of one beamforming module inside the housing, all mm.
struct ModulePlacement {
    int id;
    double center_x_mm;
    double center_y_mm;
    double width_mm;
    double height_mm;
};

struct HousingRect {
    double origin_x_mm = 0.0;
    double origin_y_mm = 0.0;
    double width_mm = 0.0;
    double height_mm = 0.0;
};

struct UeLayout {
    HousingRect housing;
    std::vector<ModulePlacement> modules;
    Frequency carrier = Frequency::ghz(28.0);
    double min_isolation_mm = 16.0;  // inter-module edge-to-edge clearance
};

struct LayoutRules {
    int min_module_count = 5;
    bool require_zone_coverage = true;
};

// Edge-to-edge clearance between two module rectangles (0 when they touch or
// overlap).
double edge_clearance_mm(const ModulePlacement& a, const ModulePlacement& b);

// Checks isolation clearances, housing containment, module count, overlap,
// and corner/center zone coverage (four quarter-width x quarter-height corner
// rectangles plus a central one; a zone is covered when a module center lies
// inside it). Malformed layouts (non-positive sizes, duplicate ids,
// non-positive isolation threshold) throw std::invalid_argument naming the
// first offending placement.
ValidationReport validate_layout(const UeLayout& layout, const LayoutRules& rules = {});

// Receiver frequency plan, all values GHz.
struct FrequencyPlan {
    double rf_low_ghz = 0.0;
    double rf_high_ghz = 0.0;
    double if_center_ghz = 0.0;
    double if_bandwidth_ghz = 0.2;  // IF channel width
    double control_ghz = 0.0;
    double ref_clock_ghz = 0.0;
    std::vector<std::pair<double, double>> protected_bands_ghz;
};

// Flags control-clock harmonics (k <= max_harmonic) falling inside the IF
// channel and IF-channel overlap with protected bands; notes the image
// frequency offset (2 x IF). Malformed plans throw std::invalid_argument.
ValidationReport validate_frequency_plan(const FrequencyPlan& plan, int max_harmonic = 10);

// Built-in eight-module handset layout (80 x 160 mm housing, 25 x 18 mm
// modules, >= 16 mm clearances at a 16 mm threshold).
UeLayout reference_layout();

// Built-in 28 GHz receiver plan: RF 27.5-28.35 GHz, IF 4.4 GHz / 200 MHz
// channel, 600 MHz control, 100 MHz reference.
FrequencyPlan reference_frequency_plan();

}  // namespace linkplan::geometry
