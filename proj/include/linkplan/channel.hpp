// Copyright (C) 2026 linkplan contributors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "linkplan/quantities.hpp"

namespace linkplan::channel {

// The six urban deployment scenarios the built-in models cover.
enum class DeploymentScenario {
    uma_los,
    uma_nlos,
    umi_street_canyon_los,
    umi_street_canyon_nlos,
    umi_street_open_los,
    umi_street_open_nlos,
};

inline constexpr DeploymentScenario kAllScenarios[] = {
    DeploymentScenario::uma_los,
    DeploymentScenario::uma_nlos,
    DeploymentScenario::umi_street_canyon_los,
    DeploymentScenario::umi_street_canyon_nlos,
    DeploymentScenario::umi_street_open_los,
    DeploymentScenario::umi_street_open_nlos,
};

// Config token, e.g. "uma-nlos". scenario_from_token throws ConfigError for
// unknown tokens, listing the valid ones.
const char* scenario_token(DeploymentScenario s);
DeploymentScenario scenario_from_token(std::string_view token);

// Close-in path-loss model: PL(d) = intercept + 10 * n * log10(d / 1 m).
struct PathLossModel {
    DeploymentScenario scenario;
    double frequency_ghz;
    double intercept_db;  // loss at the 1 m reference distance
    double exponent;      // path-loss exponent n
};

struct DistanceAnchor {
    Distance distance;
    double path_loss_db;
};

// Exact two-point fit: the returned model reproduces both anchors.
// Throws std::invalid_argument for coincident anchor distances or anchors
// below the 1 m reference.
PathLossModel fit_ci_model(const DistanceAnchor& a, const DistanceAnchor& b,
                           DeploymentScenario scenario, Frequency frequency);

// Evaluate the model. Distances below the 1 m reference are rejected.
Decibel path_loss(const PathLossModel& model, Distance d);

// Combined rain + oxygen attenuation, linear in distance.
struct AttenuationModel {
    double specific_attenuation_db_per_km = 0.0;
    double rain_rate_mm_per_h = 0.0;
};

Decibel atmospheric_attenuation(const AttenuationModel& model, Distance d);

// Material penetration losses at the run's carrier frequency. The default
// table ships the attested concrete value and placeholder zeros for glass;
// glass coefficients come from user configuration.
class PenetrationTable {
  public:
    PenetrationTable();  // default entries: none, concrete, regular-glass, irr-glass
    explicit PenetrationTable(std::map<std::string, double> entries);

    void set(const std::string& material, double loss_db);
    // Throws ConfigError for unknown materials, listing the known tags.
    Decibel loss(const std::string& material) const;
    const std::map<std::string, double>& entries() const { return entries_; }

  private:
    std::map<std::string, double> entries_;
};

// Arithmetic sum of the loss terms; every component must be >= 0 dB.
Decibel total_propagation_loss(Decibel path_loss, Decibel atmospheric, Decibel penetration,
                               Decibel blockage);

// Built-in fitted models: six scenarios x {2.6, 28, 39} GHz.
std::span<const PathLossModel> builtin_models();
// Throws ConfigError when no built-in model matches (frequency matched to
// within 1 kHz).
const PathLossModel& builtin_model(DeploymentScenario scenario, Frequency frequency);

// 39 GHz heavy-rain (25 mm/h) attenuation calibrated from the 1 km data.
AttenuationModel heavy_rain_39ghz();

// CSV export of the built-in models: header
// "scenario,frequency_GHz,intercept_dB,exponent", one row per model,
// deterministic order, full precision.
std::string models_csv();

}  // namespace linkplan::channel
