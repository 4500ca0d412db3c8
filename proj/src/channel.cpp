// Copyright (C) 2026 linkplan contributors
// SPDX-License-Identifier: Apache-2.0
//
#include "linkplan/channel.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "linkplan/errors.hpp"

namespace linkplan::channel {

namespace {

struct TokenEntry {
    DeploymentScenario scenario;
    const char* token;
};

constexpr TokenEntry kTokens[] = {
    {DeploymentScenario::uma_los, "uma-los"},
    {DeploymentScenario::uma_nlos, "uma-nlos"},
    {DeploymentScenario::umi_street_canyon_los, "umi-street-canyon-los"},
    {DeploymentScenario::umi_street_canyon_nlos, "umi-street-canyon-nlos"},
    {DeploymentScenario::umi_street_open_los, "umi-street-open-los"},
    {DeploymentScenario::umi_street_open_nlos, "umi-street-open-nlos"},
};

// Measured path loss (dB) at the 100 m / 1 km calibration distances for each
// (scenario, frequency) cell. The 39 GHz entries are the clear-sky rows; the
// heavy-rain rows are reproduced by heavy_rain_39ghz() on top of these
// (calibrated at 1 km: e.g. UMa-LOS 136.5 - 128.4 = 8.1 dB/km; the published
// 100 m rain rows add a flat 1 dB, with one +10 dB outlier, and cannot be
// matched by any linear-in-distance model, so they are intentionally not
// fitted).
struct AnchorRow {
    DeploymentScenario scenario;
    double frequency_ghz;
    double pl_100m_db;
    double pl_1km_db;
};

constexpr AnchorRow kAnchorTable[] = {
    {DeploymentScenario::uma_los, 2.6, 84.8, 104.9},
    {DeploymentScenario::uma_los, 28.0, 105.5, 125.5},
    {DeploymentScenario::uma_los, 39.0, 108.4, 128.4},
    {DeploymentScenario::uma_nlos, 2.6, 107.5, 137.5},
    {DeploymentScenario::uma_nlos, 28.0, 128.2, 158.2},
    {DeploymentScenario::uma_nlos, 39.0, 131.1, 161.1},
    {DeploymentScenario::umi_street_canyon_los, 2.6, 83.4, 103.2},
    {DeploymentScenario::umi_street_canyon_los, 28.0, 104.1, 123.9},
    {DeploymentScenario::umi_street_canyon_los, 39.0, 107.0, 126.8},
    {DeploymentScenario::umi_street_canyon_nlos, 2.6, 112.7, 144.6},
    {DeploymentScenario::umi_street_canyon_nlos, 28.0, 133.4, 165.3},
    {DeploymentScenario::umi_street_canyon_nlos, 39.0, 136.3, 168.2},
    {DeploymentScenario::umi_street_open_los, 2.6, 81.9, 100.4},
    {DeploymentScenario::umi_street_open_los, 28.0, 102.6, 121.1},
    {DeploymentScenario::umi_street_open_los, 39.0, 105.5, 124.0},
    {DeploymentScenario::umi_street_open_nlos, 2.6, 105.6, 134.5},
    {DeploymentScenario::umi_street_open_nlos, 28.0, 126.3, 155.2},
    {DeploymentScenario::umi_street_open_nlos, 39.0, 129.2, 158.1},
};

std::string shortest(double v) {
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) {
        return "nan";
    }
    return std::string(buf.data(), end);
}

}  // namespace

const char* scenario_token(DeploymentScenario s) {
    for (const auto& e : kTokens) {
        if (e.scenario == s) {
            return e.token;
        }
    }
    return "?";
}

DeploymentScenario scenario_from_token(std::string_view token) {
    for (const auto& e : kTokens) {
        if (token == e.token) {
            return e.scenario;
        }
    }
    std::string msg = "unknown scenario '" + std::string(token) + "'; valid scenarios:";
    for (const auto& e : kTokens) {
        msg += std::string(" ") + e.token;
    }
    throw ConfigError(msg);
}

PathLossModel fit_ci_model(const DistanceAnchor& a, const DistanceAnchor& b,
                           DeploymentScenario scenario, Frequency frequency) {
    const double d1 = a.distance.meters();
    const double d2 = b.distance.meters();
    if (d1 < 1.0 || d2 < 1.0) {
        throw std::invalid_argument("fit_ci_model: anchor distances must be >= 1 m");
    }
    if (d1 == d2) {
        throw std::invalid_argument("fit_ci_model: coincident anchor distances (degenerate fit)");
    }
    const double dlog = std::log10(d2) - std::log10(d1);
    const double exponent = (b.path_loss_db - a.path_loss_db) / (10.0 * dlog);
    const double intercept = a.path_loss_db - 10.0 * exponent * std::log10(d1);
    return PathLossModel{scenario, frequency.gigahertz(), intercept, exponent};
}

Decibel path_loss(const PathLossModel& model, Distance d) {
    if (d.meters() < 1.0) {
        throw std::invalid_argument("path_loss: distance " + shortest(d.meters()) +
                                    " m is below the 1 m model reference");
    }
    return Decibel(model.intercept_db + 10.0 * model.exponent * std::log10(d.meters()));
}

Decibel atmospheric_attenuation(const AttenuationModel& model, Distance d) {
    if (model.specific_attenuation_db_per_km < 0.0) {
        throw std::invalid_argument("atmospheric_attenuation: specific attenuation must be >= 0");
    }
    return Decibel(model.specific_attenuation_db_per_km * d.kilometers());
}

PenetrationTable::PenetrationTable()
    : entries_{{"none", 0.0}, {"concrete", 117.0}, {"regular-glass", 0.0}, {"irr-glass", 0.0}} {}

PenetrationTable::PenetrationTable(std::map<std::string, double> entries)
    : entries_(std::move(entries)) {
    for (const auto& [material, loss_db] : entries_) {
        if (!(loss_db >= 0.0)) {
            throw std::invalid_argument("PenetrationTable: loss for '" + material +
                                        "' must be >= 0 dB");
        }
    }
    entries_.emplace("none", 0.0);
}

void PenetrationTable::set(const std::string& material, double loss_db) {
    if (!(loss_db >= 0.0)) {
        throw std::invalid_argument("PenetrationTable::set: loss must be >= 0 dB");
    }
    entries_[material] = loss_db;
}

Decibel PenetrationTable::loss(const std::string& material) const {
    auto it = entries_.find(material);
    if (it == entries_.end()) {
        std::string msg = "unknown penetration material '" + material + "'; known materials:";
        for (const auto& [tag, value] : entries_) {
            (void)value;
            msg += " " + tag;
        }
        throw ConfigError(msg);
    }
    return Decibel(it->second);
}

Decibel total_propagation_loss(Decibel path_loss, Decibel atmospheric, Decibel penetration,
                               Decibel blockage) {
    const double components[] = {path_loss.db(), atmospheric.db(), penetration.db(),
                                 blockage.db()};
    const char* names[] = {"path loss", "atmospheric", "penetration", "blockage"};
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) {
        if (components[i] < 0.0) {
            throw std::invalid_argument(std::string("total_propagation_loss: ") + names[i] +
                                        " component must be >= 0 dB");
        }
        sum += components[i];
    }
    return Decibel(sum);
}

std::span<const PathLossModel> builtin_models() {
    static const std::vector<PathLossModel> models = [] {
        std::vector<PathLossModel> out;
        out.reserve(std::size(kAnchorTable));
        for (const auto& row : kAnchorTable) {
            out.push_back(fit_ci_model({Distance::m(100.0), row.pl_100m_db},
                                       {Distance::km(1.0), row.pl_1km_db}, row.scenario,
                                       Frequency::ghz(row.frequency_ghz)));
        }
        return out;
    }();
    return models;
}

const PathLossModel& builtin_model(DeploymentScenario scenario, Frequency frequency) {
    constexpr double kTolGhz = 1e-6;  // 1 kHz
    for (const auto& m : builtin_models()) {
        if (m.scenario == scenario && std::abs(m.frequency_ghz - frequency.gigahertz()) < kTolGhz) {
            return m;
        }
    }
    throw ConfigError(std::string("no built-in path-loss model for ") + scenario_token(scenario) +
                      " at " + shortest(frequency.gigahertz()) +
                      " GHz (built-in frequencies: 2.6, 28, 39)");
}

AttenuationModel heavy_rain_39ghz() { return AttenuationModel{8.1, 25.0}; }

std::string models_csv() {
    std::ostringstream out;
    out << "scenario,frequency_GHz,intercept_dB,exponent\n";
    for (const auto& m : builtin_models()) {
        out << scenario_token(m.scenario) << ',' << shortest(m.frequency_ghz) << ','
            << shortest(m.intercept_db) << ',' << shortest(m.exponent) << '\n';
    }
    return out.str();
}

}  // namespace linkplan::channel
