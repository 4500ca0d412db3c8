// Copyright (C) 2026 linkplan contributors
// SPDX-License-Identifier: Apache-2.0
//
#include "linkplan/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "linkplan/errors.hpp"

namespace linkplan::scenario {

namespace {

struct DirectionToken {
    LinkDirection value;
    const char* token;
};
constexpr DirectionToken kDirections[] = {
    {LinkDirection::downlink, "downlink"},
    {LinkDirection::uplink, "uplink"},
};

struct HoldingToken {
    HoldingPosition value;
    const char* token;
};
constexpr HoldingToken kHoldings[] = {
    {HoldingPosition::portrait_one_hand, "portrait-one-hand"},
    {HoldingPosition::portrait_two_thumbs, "portrait-two-thumbs"},
    {HoldingPosition::landscape_two_hands, "landscape-two-hands"},
    {HoldingPosition::on_surface, "on-surface"},
};

struct AxisToken {
    SweepAxis value;
    const char* token;
};
constexpr AxisToken kAxes[] = {
    {SweepAxis::distance, "distance"},
    {SweepAxis::n_ant, "n_ant"},
    {SweepAxis::n_array, "n_array"},
    {SweepAxis::bandwidth, "bandwidth"},
};

template <typename Table>
std::string token_list(const Table& table) {
    std::string out;
    for (const auto& e : table) {
        if (!out.empty()) {
            out += " ";
        }
        out += e.token;
    }
    return out;
}

void require_modules(const geometry::UeLayout& layout, std::initializer_list<int> ids,
                     const char* position) {
    for (int id : ids) {
        const bool found = std::any_of(layout.modules.begin(), layout.modules.end(),
                                       [&](const auto& m) { return m.id == id; });
        if (!found) {
            throw std::invalid_argument("active_modules: layout lacks module " +
                                        std::to_string(id) + " required by the " +
                                        std::string(position) + " position");
        }
    }
}

int positive_count(double value, const char* axis) {
    if (!(value >= 1.0) || value != std::floor(value)) {
        std::ostringstream msg;
        msg << "sweep: " << axis << " value " << value << " must be a positive integer";
        throw std::invalid_argument(msg.str());
    }
    return static_cast<int>(value);
}

}  // namespace

const char* direction_token(LinkDirection d) {
    for (const auto& e : kDirections) {
        if (e.value == d) {
            return e.token;
        }
    }
    return "?";
}

LinkDirection direction_from_token(std::string_view token) {
    for (const auto& e : kDirections) {
        if (token == e.token) {
            return e.value;
        }
    }
    throw ConfigError("unknown direction '" + std::string(token) +
                      "'; valid directions: " + token_list(kDirections));
}

const char* holding_token(HoldingPosition h) {
    for (const auto& e : kHoldings) {
        if (e.value == h) {
            return e.token;
        }
    }
    return "?";
}

HoldingPosition holding_from_token(std::string_view token) {
    for (const auto& e : kHoldings) {
        if (token == e.token) {
            return e.value;
        }
    }
    throw ConfigError("unknown holding position '" + std::string(token) +
                      "'; valid positions: " + token_list(kHoldings));
}

const char* sweep_axis_token(SweepAxis a) {
    for (const auto& e : kAxes) {
        if (e.value == a) {
            return e.token;
        }
    }
    return "?";
}

SweepAxis sweep_axis_from_token(std::string_view token) {
    for (const auto& e : kAxes) {
        if (token == e.token) {
            return e.value;
        }
    }
    throw ConfigError("unknown sweep axis '" + std::string(token) +
                      "'; valid axes: " + token_list(kAxes));
}

ActiveSet active_modules(HoldingPosition holding, const geometry::UeLayout& layout) {
    ActiveSet out;
    switch (holding) {
        case HoldingPosition::portrait_one_hand:
        case HoldingPosition::portrait_two_thumbs:
            require_modules(layout, {1, 2}, holding_token(holding));
            out.module_ids = {1, 2};
            break;
        case HoldingPosition::landscape_two_hands:
            require_modules(layout, {3, 4, 5, 6}, holding_token(holding));
            out.module_ids = {3, 4, 5, 6};
            break;
        case HoldingPosition::on_surface:
            if (layout.modules.empty()) {
                throw std::invalid_argument("active_modules: layout has no modules");
            }
            for (const auto& m : layout.modules) {
                out.module_ids.push_back(m.id);
            }
            std::sort(out.module_ids.begin(), out.module_ids.end());
            break;
    }
    out.mimo_order = static_cast<int>(out.module_ids.size());
    return out;
}

LinkBudgetResult evaluate(const ScenarioConfig& cfg) {
    if (cfg.n_ant < 1 || cfg.n_bf < 1 || cfg.n_array < 1) {
        throw std::invalid_argument("evaluate: n_ant, n_bf, and n_array must be >= 1");
    }
    if (cfg.body_blockage_db < 0.0) {
        throw std::invalid_argument("evaluate: body blockage must be >= 0 dB");
    }

    const channel::PathLossModel model =
        cfg.model_override ? *cfg.model_override : channel::builtin_model(cfg.scenario, cfg.frequency);

    const Decibel pl = channel::path_loss(model, cfg.distance);
    const Decibel atm = channel::atmospheric_attenuation(cfg.weather, cfg.distance);
    const Decibel pen = cfg.penetration.loss(cfg.penetration_material);
    // The holding position already excludes blocked modules from the active
    // set, so the evaluated path sees no body-blockage attenuation.
    const Decibel blockage(0.0);
    const Decibel total = channel::total_propagation_loss(pl, atm, pen, blockage);

    PowerDbm eirp_dbm;
    if (cfg.direction == LinkDirection::downlink) {
        eirp_dbm = linkbudget::bs_eirp_from_psd(PowerDbm(cfg.regulatory.bs_psd_dbm),
                                                cfg.regulatory.psd_ref_bw, cfg.bandwidth);
    } else if (cfg.pa_power_dbm) {
        const PowerDbm unconstrained = linkbudget::eirp(
            {cfg.n_ant, 0.0, linkbudget::PaArchitecture::per_element_pa, PowerDbm(*cfg.pa_power_dbm)});
        eirp_dbm = PowerDbm(std::min(unconstrained.dbm(), cfg.regulatory.ue_eirp_limit_dbm));
    } else {
        eirp_dbm = PowerDbm(cfg.regulatory.ue_eirp_limit_dbm);
    }

    linkbudget::ReceiverSpec rx = cfg.receiver;
    rx.n_rx_elements = cfg.direction == LinkDirection::downlink ? cfg.n_ant : cfg.n_array;

    const linkbudget::SnrChain chain = linkbudget::link_snr(eirp_dbm, total, cfg.bandwidth, rx);
    const double se = rate::spectral_efficiency(chain.snr_after_bf, cfg.se_mapping);
    const double siso = rate::throughput_bps(se, {cfg.bandwidth, cfg.overhead, 1});

    const ActiveSet active = active_modules(cfg.holding, cfg.ue_layout);
    const int order = std::min(active.mimo_order, cfg.n_bf);

    LinkBudgetResult r;
    r.scenario = cfg.scenario;
    r.direction = cfg.direction;
    r.frequency_ghz = cfg.frequency.gigahertz();
    r.distance_m = cfg.distance.meters();
    r.bandwidth_mhz = cfg.bandwidth.megahertz();
    r.eirp = eirp_dbm;
    r.path_loss_db = pl.db();
    r.atmospheric_db = atm.db();
    r.penetration_db = pen.db();
    r.blockage_db = blockage.db();
    r.total_loss_db = total.db();
    r.chain = chain;
    r.rx_elements = rx.n_rx_elements;
    r.receiver = rx;
    r.se = se;
    r.throughput_siso_bps = siso;
    r.throughput_mimo_bps = siso * order;
    r.active_module_ids = active.module_ids;
    r.mimo_order = order;
    return r;
}

std::vector<SweepPoint> sweep(const ScenarioConfig& cfg, SweepAxis axis,
                              std::span<const double> values,
                              std::span<const double> injected_se) {
    if (values.empty()) {
        throw std::invalid_argument("sweep: value list must be non-empty");
    }
    if (!injected_se.empty() && injected_se.size() != values.size()) {
        throw std::invalid_argument("sweep: injected SE list must match the sweep values (" +
                                    std::to_string(injected_se.size()) + " vs " +
                                    std::to_string(values.size()) + ")");
    }

    std::vector<SweepPoint> out;
    out.reserve(values.size());
    for (size_t i = 0; i < values.size(); ++i) {
        ScenarioConfig point = cfg;
        const double v = values[i];
        switch (axis) {
            case SweepAxis::distance:
                if (!(v >= 1.0)) {
                    std::ostringstream msg;
                    msg << "sweep: distance value " << v << " m is below the 1 m model reference";
                    throw std::invalid_argument(msg.str());
                }
                point.distance = Distance::m(v);
                break;
            case SweepAxis::n_ant:
                point.n_ant = positive_count(v, "n_ant");
                break;
            case SweepAxis::n_array:
                point.n_array = positive_count(v, "n_array");
                break;
            case SweepAxis::bandwidth:
                if (!(v > 0.0)) {
                    std::ostringstream msg;
                    msg << "sweep: bandwidth value " << v << " Hz must be > 0";
                    throw std::invalid_argument(msg.str());
                }
                point.bandwidth = Frequency::hz(v);
                break;
        }
        if (!injected_se.empty() && point.se_mapping.mode == rate::SeMode::table_injected) {
            point.se_mapping.injected_se = injected_se[i];
        }
        out.push_back(SweepPoint{v, evaluate(point)});
    }
    return out;
}

}  // namespace linkplan::scenario
