// Copyright (C) 2026 linkplan contributors
// SPDX-License-Identifier: Apache-2.0
//
#include "linkplan/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace linkplan::geometry {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) {
        throw std::invalid_argument(msg);
    }
}

struct Rect {
    double x0, y0, x1, y1;

    bool contains_point(double x, double y) const {
        return x >= x0 && x <= x1 && y >= y0 && y <= y1;
    }
    bool contains_rect(const Rect& r) const {
        return r.x0 >= x0 && r.x1 <= x1 && r.y0 >= y0 && r.y1 <= y1;
    }
    bool overlaps_interior(const Rect& r) const {
        return r.x0 < x1 && r.x1 > x0 && r.y0 < y1 && r.y1 > y0;
    }
};

Rect module_rect(const ModulePlacement& m) {
    return Rect{m.center_x_mm - m.width_mm / 2.0, m.center_y_mm - m.height_mm / 2.0,
                m.center_x_mm + m.width_mm / 2.0, m.center_y_mm + m.height_mm / 2.0};
}

Rect housing_rect(const HousingRect& h) {
    return Rect{h.origin_x_mm, h.origin_y_mm, h.origin_x_mm + h.width_mm,
                h.origin_y_mm + h.height_mm};
}

std::string fmt(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

}  // namespace

double effective_dielectric_constant(const SubstrateSpec& s) {
    require(s.epsilon_r >= 1.0, "effective_dielectric_constant: epsilon_r must be >= 1");
    require(s.trace_width_mm > 0.0, "effective_dielectric_constant: W must be > 0");
    require(s.substrate_height_mm > 0.0, "effective_dielectric_constant: H must be > 0");

    const double ratio = s.trace_width_mm / s.substrate_height_mm;  // W/H
    const double mean = (s.epsilon_r + 1.0) / 2.0;
    const double half_diff = (s.epsilon_r - 1.0) / 2.0;
    const double root = std::sqrt(1.0 + 12.0 / ratio);
    if (ratio < 1.0) {
        // narrow-trace branch carries an extra (1 - W/H)^2 correction that
        // vanishes at the branch point
        const double corr = 0.04 * (1.0 - ratio) * (1.0 - ratio);
        return mean + half_diff * (1.0 / root + corr);
    }
    return mean + half_diff / root;
}

double free_space_wavelength_m(Frequency f) { return kSpeedOfLightMps / f.hertz(); }

double effective_wavelength_m(Frequency f, double epsilon_eff) {
    require(epsilon_eff >= 1.0, "effective_wavelength: epsilon_eff must be >= 1");
    return kSpeedOfLightMps / (f.hertz() * std::sqrt(epsilon_eff));
}

double max_spacing_ratio(double theta_max_deg) {
    require(theta_max_deg >= 0.0 && theta_max_deg <= 90.0,
            "max_spacing_ratio: steering angle must be within [0, 90] degrees");
    const double theta = theta_max_deg * std::numbers::pi / 180.0;
    return 1.0 / (1.0 + std::cos(theta));
}

double stackup_thickness_mm(const StackUp& s) {
    const double layers[] = {s.antenna_mm, s.bump_mm, s.die_mm, s.pcb_mm, s.connector_mm};
    double total = 0.0;
    for (double t : layers) {
        require(t >= 0.0, "stackup_thickness: layer thicknesses must be >= 0");
        total += t;
    }
    return total;
}

double edge_clearance_mm(const ModulePlacement& a, const ModulePlacement& b) {
    const double dx =
        std::max(0.0, std::abs(a.center_x_mm - b.center_x_mm) - (a.width_mm + b.width_mm) / 2.0);
    const double dy =
        std::max(0.0, std::abs(a.center_y_mm - b.center_y_mm) - (a.height_mm + b.height_mm) / 2.0);
    return std::hypot(dx, dy);
}

ValidationReport validate_layout(const UeLayout& layout, const LayoutRules& rules) {
    require(layout.housing.width_mm > 0.0 && layout.housing.height_mm > 0.0,
            "validate_layout: housing dimensions must be > 0");
    require(layout.min_isolation_mm > 0.0, "validate_layout: min_isolation must be > 0");

    std::set<int> seen;
    for (const auto& m : layout.modules) {
        if (!(m.width_mm > 0.0) || !(m.height_mm > 0.0) || !std::isfinite(m.center_x_mm) ||
            !std::isfinite(m.center_y_mm)) {
            throw std::invalid_argument("validate_layout: malformed placement for module id " +
                                        std::to_string(m.id));
        }
        if (!seen.insert(m.id).second) {
            throw std::invalid_argument("validate_layout: duplicate module id " +
                                        std::to_string(m.id));
        }
    }

    ValidationReport report;
    const Rect housing = housing_rect(layout.housing);

    if (static_cast<int>(layout.modules.size()) < rules.min_module_count) {
        report.violations.push_back(
            {"module-count", "layout has " + std::to_string(layout.modules.size()) +
                                 " modules; at least " + std::to_string(rules.min_module_count) +
                                 " required"});
    }

    for (const auto& m : layout.modules) {
        if (!housing.contains_rect(module_rect(m))) {
            report.violations.push_back(
                {"outside-housing",
                 "module " + std::to_string(m.id) + " extends outside the housing"});
        }
    }

    for (size_t i = 0; i < layout.modules.size(); ++i) {
        for (size_t j = i + 1; j < layout.modules.size(); ++j) {
            const auto& a = layout.modules[i];
            const auto& b = layout.modules[j];
            if (module_rect(a).overlaps_interior(module_rect(b))) {
                report.violations.push_back({"overlap", "modules " + std::to_string(a.id) +
                                                            " and " + std::to_string(b.id) +
                                                            " overlap"});
                continue;
            }
            const double clearance = edge_clearance_mm(a, b);
            if (clearance < layout.min_isolation_mm) {
                report.violations.push_back(
                    {"isolation", "modules " + std::to_string(a.id) + " and " +
                                      std::to_string(b.id) + " have " + fmt(clearance) +
                                      " mm clearance; " + fmt(layout.min_isolation_mm) +
                                      " mm required"});
            }
        }
    }

    if (rules.require_zone_coverage) {
        const double zw = layout.housing.width_mm / 4.0;
        const double zh = layout.housing.height_mm / 4.0;
        const Rect h = housing;
        const struct {
            const char* name;
            Rect zone;
        } zones[] = {
            {"bottom-left corner", {h.x0, h.y0, h.x0 + zw, h.y0 + zh}},
            {"bottom-right corner", {h.x1 - zw, h.y0, h.x1, h.y0 + zh}},
            {"top-left corner", {h.x0, h.y1 - zh, h.x0 + zw, h.y1}},
            {"top-right corner", {h.x1 - zw, h.y1 - zh, h.x1, h.y1}},
            {"center",
             {(h.x0 + h.x1 - zw) / 2.0, (h.y0 + h.y1 - zh) / 2.0, (h.x0 + h.x1 + zw) / 2.0,
              (h.y0 + h.y1 + zh) / 2.0}},
        };
        for (const auto& z : zones) {
            const bool covered =
                std::any_of(layout.modules.begin(), layout.modules.end(), [&](const auto& m) {
                    return z.zone.contains_point(m.center_x_mm, m.center_y_mm);
                });
            if (!covered) {
                report.violations.push_back(
                    {"zone-coverage", std::string("no module center covers the ") + z.name +
                                          " zone"});
            }
        }
    }

    return report;
}

ValidationReport validate_frequency_plan(const FrequencyPlan& plan, int max_harmonic) {
    require(plan.rf_low_ghz > 0.0 && plan.rf_high_ghz > 0.0 && plan.if_center_ghz > 0.0 &&
                plan.control_ghz > 0.0 && plan.ref_clock_ghz > 0.0,
            "validate_frequency_plan: all frequencies must be > 0");
    require(plan.rf_low_ghz < plan.rf_high_ghz,
            "validate_frequency_plan: RF band low must be below high");
    require(plan.if_bandwidth_ghz > 0.0, "validate_frequency_plan: IF bandwidth must be > 0");
    require(max_harmonic >= 1, "validate_frequency_plan: max_harmonic must be >= 1");
    for (const auto& [lo, hi] : plan.protected_bands_ghz) {
        require(lo > 0.0 && lo < hi, "validate_frequency_plan: malformed protected band");
    }

    ValidationReport report;
    const double if_lo = plan.if_center_ghz - plan.if_bandwidth_ghz / 2.0;
    const double if_hi = plan.if_center_ghz + plan.if_bandwidth_ghz / 2.0;

    // Low-side injection puts the image 2 x IF away from the wanted RF signal.
    report.notes.push_back("image frequency offset: " + fmt(2.0 * plan.if_center_ghz) +
                           " GHz (2 x IF) from the RF carrier");

    for (int k = 1; k <= max_harmonic; ++k) {
        const double harmonic = k * plan.control_ghz;
        if (harmonic >= if_lo && harmonic <= if_hi) {
            report.violations.push_back(
                {"harmonic-collision", "harmonic " + std::to_string(k) + " of the control clock (" +
                                           fmt(harmonic) + " GHz) falls inside the IF channel " +
                                           fmt(if_lo) + "-" + fmt(if_hi) + " GHz"});
        }
    }

    for (const auto& [lo, hi] : plan.protected_bands_ghz) {
        if (if_lo <= hi && if_hi >= lo) {
            report.violations.push_back(
                {"protected-band", "IF channel " + fmt(if_lo) + "-" + fmt(if_hi) +
                                       " GHz overlaps protected band " + fmt(lo) + "-" + fmt(hi) +
                                       " GHz"});
        }
    }

    return report;
}

UeLayout reference_layout() {
    UeLayout layout;
    layout.housing = HousingRect{0.0, 0.0, 80.0, 160.0};
    layout.carrier = Frequency::ghz(28.0);
    layout.min_isolation_mm = 16.0;
    // Eight 25 x 18 mm modules: top corners (1, 2), upper middle (3, 4),
    // central column (5, 6), bottom corners (7, 8). Clearances >= 16.5 mm.
    layout.modules = {
        {1, 15.5, 150.0, 25.0, 18.0}, {2, 64.5, 150.0, 25.0, 18.0},
        {3, 15.5, 115.5, 25.0, 18.0}, {4, 64.5, 115.5, 25.0, 18.0},
        {5, 40.0, 81.0, 25.0, 18.0},  {6, 40.0, 46.5, 25.0, 18.0},
        {7, 15.5, 12.0, 25.0, 18.0},  {8, 64.5, 12.0, 25.0, 18.0},
    };
    return layout;
}

FrequencyPlan reference_frequency_plan() {
    FrequencyPlan plan;
    plan.rf_low_ghz = 27.5;
    plan.rf_high_ghz = 28.35;
    plan.if_center_ghz = 4.4;
    plan.if_bandwidth_ghz = 0.2;
    plan.control_ghz = 0.6;
    plan.ref_clock_ghz = 0.1;
    plan.protected_bands_ghz = {{2.4, 2.5}, {5.15, 5.925}};
    return plan;
}

}  // namespace linkplan::geometry
