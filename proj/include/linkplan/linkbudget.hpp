// Copyright (C) 2026 linkplan contributors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include "linkplan/quantities.hpp"

namespace linkplan::linkbudget {

enum class PaArchitecture {
    single_split_pa,  // one PA split across the elements
    per_element_pa,   // one PA per element
};

struct ArrayConfig {
    int n_ant = 1;             // elements per module
    double element_gain_dbi = 0.0;
    PaArchitecture pa_architecture = PaArchitecture::per_element_pa;
    PowerDbm p_pa;             // per-PA output power
};

// Transmit EIRP. Element gain is deliberately not included here; receive
// chains account for it inside the total array gain.
//   single-split: p_pa + 10*log10(n_ant)
//   per-element:  p_pa + 20*log10(n_ant)
PowerDbm eirp(const ArrayConfig& cfg);

// Per-PA power ceiling under an EIRP limit, valid for the per-element
// architecture: eirp_limit - 20*log10(n_ant). Exact inverse of eirp().
PowerDbm max_pa_power(PowerDbm eirp_limit, int n_ant);

// Base-station EIRP from a PSD-style limit (e.g. 75 dBm per 100 MHz):
// psd_limit + 10*log10(bw / ref_bw).
PowerDbm bs_eirp_from_psd(PowerDbm psd_limit, Frequency ref_bw, Frequency bw);

// Receive-side total array gain: 10*log10(n_elements) + element_gain.
Decibel rx_array_gain(int n_elements, double element_gain_dbi);

// kTB floor at 290 K: -174 dBm/Hz + 10*log10(bw).
PowerDbm thermal_noise(Frequency bw);

struct ReceiverSpec {
    double front_end_loss_db = 4.0;  // pre-LNA loss
    double noise_figure_db = 7.0;
    int n_rx_elements = 1;
    double element_gain_dbi = 5.0;
};

struct SnrChain {
    PowerDbm rx_power;
    PowerDbm thermal_noise;
    Decibel rx_array_gain;
    Decibel snr_before_bf;
    Decibel snr_after_bf;
};

// rx_power = eirp - total_loss
// snr_before = rx_power - thermal_noise(bw)
// snr_after  = snr_before - front_end_loss + rx_array_gain - noise_figure
SnrChain link_snr(PowerDbm eirp, Decibel total_loss, Frequency bw, const ReceiverSpec& rx);

}  // namespace linkplan::linkbudget
