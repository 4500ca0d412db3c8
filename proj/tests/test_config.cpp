// Copyright (C) 2026 linkplan contributors
// SPDX-License-Identifier: Apache-2.0
//
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "linkplan/config.hpp"
#include "linkplan/errors.hpp"

using namespace linkplan;
using namespace linkplan::config;

namespace {

RunConfig parse(const std::string& text) { return parse_string(text, "test.json"); }

std::string error_of(const std::string& text) {
    try {
        parse(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("minimal config yields the documented defaults") {
    RunConfig run = parse(R"({"schema_version": 1})");
    const auto& s = run.scenario;
    CHECK(s.scenario == channel::DeploymentScenario::uma_nlos);
    CHECK(s.frequency.gigahertz() == doctest::Approx(28.0));
    CHECK(s.distance.meters() == 100.0);
    CHECK(s.bandwidth.megahertz() == doctest::Approx(200.0));
    CHECK(s.direction == scenario::LinkDirection::downlink);
    CHECK(s.n_ant == 8);
    CHECK(s.n_bf == 8);
    CHECK(s.n_array == 64);
    CHECK(s.holding == scenario::HoldingPosition::on_surface);
    CHECK(s.overhead == 0.2);
    CHECK(s.se_mapping.mode == rate::SeMode::shannon);
    CHECK(s.se_mapping.se_cap_bits == 8.0);
    CHECK(s.receiver.front_end_loss_db == 4.0);
    CHECK(s.receiver.noise_figure_db == 7.0);
    CHECK(s.regulatory.ue_eirp_limit_dbm == 43.0);
    CHECK(s.regulatory.bs_psd_dbm == 75.0);
    CHECK_FALSE(s.pa_power_dbm.has_value());
    CHECK_FALSE(s.model_override.has_value());
    CHECK(run.output.format == OutputFormat::table);
    CHECK(run.output.rounding == report::Rounding::display);
    CHECK(run.max_harmonic == 10);
    CHECK(run.frequency_plan.if_center_ghz == 4.4);
}

TEST_CASE("schema version is mandatory and pinned") {
    CHECK(error_of(R"({})").find("schema_version") != std::string::npos);
    CHECK(error_of(R"({"schema_version": 2})").find("unsupported version 2") !=
          std::string::npos);
    CHECK(error_of(R"({"schema_version": "1"})").find("expected an integer") !=
          std::string::npos);
}

TEST_CASE("unknown keys are rejected with their path") {
    std::string err = error_of(R"({"schema_version": 1, "fequency_ghz": 28})");
    CHECK(err.find("unknown key \"fequency_ghz\"") != std::string::npos);
    CHECK(err.find("$") != std::string::npos);

    err = error_of(R"({"schema_version": 1, "se": {"mode": "shannon", "backof": 3}})");
    CHECK(err.find("$.se") != std::string::npos);
    CHECK(err.find("unknown key \"backof\"") != std::string::npos);
}

TEST_CASE("token errors carry the key path") {
    std::string err = error_of(R"({"schema_version": 1, "scenario": "suburban"})");
    CHECK(err.find("$.scenario") != std::string::npos);
    CHECK(err.find("suburban") != std::string::npos);
    CHECK(err.find("uma-nlos") != std::string::npos);  // lists the valid tokens

    err = error_of(R"({"schema_version": 1, "direction": "sidelink"})");
    CHECK(err.find("$.direction") != std::string::npos);

    err = error_of(R"({"schema_version": 1, "holding": "upside-down"})");
    CHECK(err.find("$.holding") != std::string::npos);
}

TEST_CASE("parse errors carry the source name and line number") {
    std::string err = error_of("{\n  \"schema_version\": 1,\n  \"n_ant\": oops\n}\n");
    CHECK(err.find("test.json:3:") != std::string::npos);
    CHECK(err.find("parse error") != std::string::npos);
}

TEST_CASE("range checks") {
    CHECK(error_of(R"({"schema_version": 1, "distance_m": 0.5})").find("$.distance_m") !=
          std::string::npos);
    CHECK(error_of(R"({"schema_version": 1, "overhead": 1.0})").find("$.overhead") !=
          std::string::npos);
    CHECK(error_of(R"({"schema_version": 1, "frequency_ghz": -28})").find("$.frequency_ghz") !=
          std::string::npos);
    CHECK(error_of(R"({"schema_version": 1, "n_ant": 0})").find("n_ant") != std::string::npos);
    CHECK(error_of(R"({"schema_version": 1, "n_ant": 8.5})").find("expected an integer") !=
          std::string::npos);
    CHECK(error_of(R"({"schema_version": 1, "body_blockage_db": -1})")
              .find("$.body_blockage_db") != std::string::npos);
    CHECK(error_of(R"({"schema_version": 1, "se": {"injected_values": [4.0, -1.0]}})")
              .find("$.se.injected_values[1]") != std::string::npos);
    CHECK(error_of(R"({"schema_version": 1, "weather": {"rain_rate_mm_per_h": -5}})")
              .find("$.weather") != std::string::npos);
}

TEST_CASE("penetration materials") {
    SUBCASE("unknown material is a config error with the path") {
        std::string err =
            error_of(R"({"schema_version": 1, "penetration": {"material": "wood"}})");
        CHECK(err.find("$.penetration.material") != std::string::npos);
        CHECK(err.find("wood") != std::string::npos);
    }
    SUBCASE("custom table entries extend the built-ins") {
        RunConfig run = parse(R"({
            "schema_version": 1,
            "penetration": {"material": "wood", "table": {"wood": 6.5}}
        })");
        CHECK(run.scenario.penetration_material == "wood");
        auto result = scenario::evaluate(run.scenario);
        CHECK(result.penetration_db == 6.5);
        CHECK(result.total_loss_db ==
              doctest::Approx(result.path_loss_db + 6.5).epsilon(1e-12));
    }
    SUBCASE("negative table entries are rejected") {
        std::string err = error_of(
            R"({"schema_version": 1, "penetration": {"table": {"wood": -2}}})");
        CHECK(err.find("$.penetration.table.wood") != std::string::npos);
    }
}

TEST_CASE("full config round trip") {
    RunConfig run = parse(R"({
        "schema_version": 1,
        "scenario": "umi-street-canyon-nlos",
        "frequency_ghz": 39,
        "distance_m": 500,
        "bandwidth_mhz": 400,
        "direction": "uplink",
        "n_ant": 16,
        "n_bf": 4,
        "n_array": 256,
        "holding": "landscape-two-hands",
        "overhead": 0.25,
        "body_blockage_db": 20,
        "pa_power_dbm": 12,
        "weather": {"specific_attenuation_db_per_km": 8.1, "rain_rate_mm_per_h": 25},
        "penetration": {"material": "concrete"},
        "se": {"mode": "shannon_with_backoff", "backoff_db": 3, "se_cap": 6},
        "receiver": {"front_end_loss_db": 5, "noise_figure_db": 8, "element_gain_dbi": 4},
        "regulatory": {"ue_eirp_limit_dbm": 40, "bs_psd_dbm": 70, "psd_ref_bw_mhz": 50},
        "path_loss_model": {"intercept_db": 70, "exponent": 2.5},
        "output": {"format": "csv", "rounding": "full", "path": "out.csv"}
    })");
    const auto& s = run.scenario;
    CHECK(s.scenario == channel::DeploymentScenario::umi_street_canyon_nlos);
    CHECK(s.frequency.gigahertz() == doctest::Approx(39.0));
    CHECK(s.distance.meters() == 500.0);
    CHECK(s.bandwidth.megahertz() == doctest::Approx(400.0));
    CHECK(s.direction == scenario::LinkDirection::uplink);
    CHECK(s.n_ant == 16);
    CHECK(s.n_bf == 4);
    CHECK(s.n_array == 256);
    CHECK(s.holding == scenario::HoldingPosition::landscape_two_hands);
    CHECK(s.overhead == 0.25);
    CHECK(s.body_blockage_db == 20.0);
    CHECK(s.pa_power_dbm == 12.0);
    CHECK(s.weather.specific_attenuation_db_per_km == 8.1);
    CHECK(s.weather.rain_rate_mm_per_h == 25.0);
    CHECK(s.penetration_material == "concrete");
    CHECK(s.se_mapping.mode == rate::SeMode::shannon_with_backoff);
    CHECK(s.se_mapping.backoff_db == 3.0);
    CHECK(s.se_mapping.se_cap_bits == 6.0);
    CHECK(s.receiver.front_end_loss_db == 5.0);
    CHECK(s.receiver.noise_figure_db == 8.0);
    CHECK(s.receiver.element_gain_dbi == 4.0);
    CHECK(s.regulatory.ue_eirp_limit_dbm == 40.0);
    CHECK(s.regulatory.bs_psd_dbm == 70.0);
    CHECK(s.regulatory.psd_ref_bw.megahertz() == doctest::Approx(50.0));
    REQUIRE(s.model_override.has_value());
    CHECK(s.model_override->intercept_db == 70.0);
    CHECK(s.model_override->exponent == 2.5);
    CHECK(run.output.format == OutputFormat::csv);
    CHECK(run.output.rounding == report::Rounding::full);
    CHECK(run.output.path == "out.csv");

    SUBCASE("override drives the evaluated path loss") {
        auto result = scenario::evaluate(s);
        // 70 + 25*log10(500)
        CHECK(result.path_loss_db == doctest::Approx(137.47425010840047).epsilon(1e-12));
    }
}

TEST_CASE("layout section parses into a validatable layout") {
    RunConfig run = parse(R"({
        "schema_version": 1,
        "layout": {
            "housing": {"width_mm": 80, "height_mm": 160, "origin_mm": [0, 0]},
            "min_isolation_mm": 16,
            "carrier_ghz": 28,
            "modules": [
                {"id": 1, "center_mm": [15.5, 150.0], "size_mm": [25, 18]},
                {"id": 2, "center_mm": [64.5, 150.0], "size_mm": [25, 18]},
                {"id": 3, "center_mm": [15.5, 115.5], "size_mm": [25, 18]},
                {"id": 4, "center_mm": [64.5, 115.5], "size_mm": [25, 18]}
            ]
        }
    })");
    CHECK(run.scenario.ue_layout.modules.size() == 4);
    CHECK(run.scenario.ue_layout.housing.width_mm == 80.0);
    CHECK(run.scenario.ue_layout.min_isolation_mm == 16.0);
    auto report = geometry::validate_layout(run.scenario.ue_layout);
    CHECK_FALSE(report.passed());  // four modules cannot satisfy the count rule

    SUBCASE("malformed module entries are schema errors") {
        std::string err = error_of(R"({
            "schema_version": 1,
            "layout": {
                "housing": {"width_mm": 80, "height_mm": 160},
                "modules": [{"id": 1, "center_mm": [15.5], "size_mm": [25, 18]}]
            }
        })");
        CHECK(err.find("$.layout.modules[0].center_mm") != std::string::npos);
    }
}

TEST_CASE("frequency plan section converts MHz fields") {
    RunConfig run = parse(R"({
        "schema_version": 1,
        "frequency_plan": {
            "rf_band_ghz": [27.5, 28.35],
            "if_center_ghz": 4.4,
            "if_bandwidth_mhz": 400,
            "control_mhz": 550,
            "ref_clock_mhz": 100,
            "max_harmonic": 8,
            "protected_bands_ghz": [[2.4, 2.5]]
        }
    })");
    CHECK(run.frequency_plan.rf_low_ghz == 27.5);
    CHECK(run.frequency_plan.rf_high_ghz == 28.35);
    CHECK(run.frequency_plan.if_bandwidth_ghz == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(run.frequency_plan.control_ghz == doctest::Approx(0.55).epsilon(1e-12));
    CHECK(run.frequency_plan.ref_clock_ghz == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(run.max_harmonic == 8);
    REQUIRE(run.frequency_plan.protected_bands_ghz.size() == 1);
    CHECK(run.frequency_plan.protected_bands_ghz[0].first == 2.4);

    CHECK(error_of(R"({"schema_version": 1, "frequency_plan": {"rf_band_ghz": [27.5, 28.35],
                       "if_center_ghz": 4.4, "max_harmonic": 0}})")
              .find("$.frequency_plan.max_harmonic") != std::string::npos);
}

TEST_CASE("file parsing") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "linkplan_config_test.json";
    {
        std::ofstream out(path);
        out << R"({"schema_version": 1, "distance_m": 250})";
    }
    RunConfig run = parse_file(path.string());
    CHECK(run.scenario.distance.meters() == 250.0);
    fs::remove(path);

    try {
        parse_file("/nonexistent/linkplan.json");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("cannot open file") != std::string::npos);
    }
}
