// Copyright (C) 2026 linkplan contributors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linkplan/channel.hpp"
#include "linkplan/geometry.hpp"
#include "linkplan/linkbudget.hpp"
#include "linkplan/rate.hpp"

namespace linkplan::scenario {

enum class LinkDirection { downlink, uplink };

// The four handset holding positions and the module sets they leave
// unobstructed.
enum class HoldingPosition {
    portrait_one_hand,
    portrait_two_thumbs,
    landscape_two_hands,
    on_surface,
};

const char* direction_token(LinkDirection d);
LinkDirection direction_from_token(std::string_view token);
const char* holding_token(HoldingPosition h);
HoldingPosition holding_from_token(std::string_view token);

struct RegulatoryLimits {
    double ue_eirp_limit_dbm = 43.0;
    double bs_psd_dbm = 75.0;                      // per psd_ref_bw
    Frequency psd_ref_bw = Frequency::mhz(100.0);
};

struct ScenarioConfig {
    channel::DeploymentScenario scenario = channel::DeploymentScenario::uma_nlos;
    Frequency frequency = Frequency::ghz(28.0);
    Distance distance = Distance::m(100.0);
    Frequency bandwidth = Frequency::mhz(200.0);
    LinkDirection direction = LinkDirection::downlink;

    int n_ant = 8;     // elements per UE module
    int n_bf = 8;      // UE module count usable for MIMO
    int n_array = 64;  // BS elements per array unit (uplink receive)

    geometry::UeLayout ue_layout = geometry::reference_layout();
    HoldingPosition holding = HoldingPosition::on_surface;

    channel::AttenuationModel weather;
    std::string penetration_material = "none";
    channel::PenetrationTable penetration;
    double body_blockage_db = 35.0;  // per blocked module; active set is unobstructed

    rate::SeMapping se_mapping;
    double overhead = 0.2;

    linkbudget::ReceiverSpec receiver;  // n_rx_elements resolved from direction
    RegulatoryLimits regulatory;
    std::optional<double> pa_power_dbm;  // uplink per-PA power; cap applies

    std::optional<channel::PathLossModel> model_override;
};

struct ActiveSet {
    std::vector<int> module_ids;
    int mimo_order = 0;
};

// Maps a holding position onto the unobstructed module set:
//   portrait (one hand / two thumbs) -> {1, 2}, order 2
//   landscape two hands              -> {3, 4, 5, 6}, order 4
//   on surface                       -> all modules, order = module count
// Throws std::invalid_argument when the layout lacks a required module id.
ActiveSet active_modules(HoldingPosition holding, const geometry::UeLayout& layout);

// One evaluated budget column.
struct LinkBudgetResult {
    channel::DeploymentScenario scenario;
    LinkDirection direction;
    double frequency_ghz = 0.0;
    double distance_m = 0.0;
    double bandwidth_mhz = 0.0;

    PowerDbm eirp;
    double path_loss_db = 0.0;
    double atmospheric_db = 0.0;
    double penetration_db = 0.0;
    double blockage_db = 0.0;
    double total_loss_db = 0.0;

    linkbudget::SnrChain chain;
    int rx_elements = 0;
    linkbudget::ReceiverSpec receiver;

    double se = 0.0;
    double throughput_siso_bps = 0.0;
    double throughput_mimo_bps = 0.0;
    std::vector<int> active_module_ids;
    int mimo_order = 0;
};

// Full pipeline: path loss -> total propagation loss -> EIRP (downlink PSD
// rule or uplink cap) -> SNR chain (rx elements = n_ant downlink, n_array
// uplink) -> spectral efficiency -> SISO and MIMO throughput at the holding
// position's MIMO order (clamped by n_bf).
LinkBudgetResult evaluate(const ScenarioConfig& cfg);

enum class SweepAxis { distance, n_ant, n_array, bandwidth };

const char* sweep_axis_token(SweepAxis a);
SweepAxis sweep_axis_from_token(std::string_view token);

struct SweepPoint {
    double axis_value = 0.0;  // in the axis' native unit (m, count, Hz)
    LinkBudgetResult result;
};

// Element-wise evaluate with the axis substituted; output order equals input
// order. In table-injected mode a non-empty injected_se span (same length as
// values) supplies the per-point SE. Invalid axis values throw
// std::invalid_argument identifying the offending value.
std::vector<SweepPoint> sweep(const ScenarioConfig& cfg, SweepAxis axis,
                              std::span<const double> values,
                              std::span<const double> injected_se = {});

}  // namespace linkplan::scenario
