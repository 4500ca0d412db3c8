// Copyright (C) 2026 linkplan contributors
// SPDX-License-Identifier: Apache-2.0
//
#include "linkplan/linkbudget.hpp"

#include <cmath>
#include <stdexcept>

namespace linkplan::linkbudget {

namespace {

void require_elements(int n, const char* op) {
    if (n < 1) {
        throw std::invalid_argument(std::string(op) + ": element count must be >= 1");
    }
}

}  // namespace

PowerDbm eirp(const ArrayConfig& cfg) {
    require_elements(cfg.n_ant, "eirp");
    const double n = static_cast<double>(cfg.n_ant);
    const double boost_db = cfg.pa_architecture == PaArchitecture::single_split_pa
                                ? 10.0 * std::log10(n)
                                : 20.0 * std::log10(n);
    return cfg.p_pa + Decibel(boost_db);
}

PowerDbm max_pa_power(PowerDbm eirp_limit, int n_ant) {
    require_elements(n_ant, "max_pa_power");
    return eirp_limit - Decibel(20.0 * std::log10(static_cast<double>(n_ant)));
}

PowerDbm bs_eirp_from_psd(PowerDbm psd_limit, Frequency ref_bw, Frequency bw) {
    return psd_limit + Decibel(10.0 * std::log10(bw.hertz() / ref_bw.hertz()));
}

Decibel rx_array_gain(int n_elements, double element_gain_dbi) {
    require_elements(n_elements, "rx_array_gain");
    return Decibel(10.0 * std::log10(static_cast<double>(n_elements)) + element_gain_dbi);
}

PowerDbm thermal_noise(Frequency bw) {
    return PowerDbm(-174.0 + 10.0 * std::log10(bw.hertz()));
}

SnrChain link_snr(PowerDbm eirp, Decibel total_loss, Frequency bw, const ReceiverSpec& rx) {
    if (rx.front_end_loss_db < 0.0 || rx.noise_figure_db < 0.0) {
        throw std::invalid_argument("link_snr: front-end loss and noise figure must be >= 0 dB");
    }
    SnrChain chain;
    chain.rx_power = eirp - total_loss;
    chain.thermal_noise = thermal_noise(bw);
    chain.rx_array_gain = rx_array_gain(rx.n_rx_elements, rx.element_gain_dbi);
    chain.snr_before_bf = chain.rx_power - chain.thermal_noise;
    chain.snr_after_bf = Decibel(chain.snr_before_bf.db() - rx.front_end_loss_db +
                                 chain.rx_array_gain.db() - rx.noise_figure_db);
    return chain;
}

}  // namespace linkplan::linkbudget
