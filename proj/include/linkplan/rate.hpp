// Copyright (C) 2026 linkplan contributors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <span>

#include "linkplan/quantities.hpp"

namespace linkplan::rate {

enum class SeMode {
    shannon,
    shannon_with_backoff,
    table_injected,
};

// SNR -> spectral-efficiency mapping. Default: pure Shannon capped at
// 8 bits/s/Hz (256-QAM). No implementation-margin back-off is assumed unless
// configured; table-injected mode bypasses the formula entirely.
struct SeMapping {
    SeMode mode = SeMode::shannon;
    double backoff_db = 0.0;                 // Delta, subtracted from SNR
    double se_cap_bits = 8.0;                // log2 of modulation order
    double injected_se = 0.0;                // used by table_injected
};

// shannon modes: min(log2(1 + 10^((snr - backoff)/10)), se_cap).
// Monotone nondecreasing in snr; never exceeds se_cap.
double spectral_efficiency(Decibel snr_after_bf, const SeMapping& m = {});

struct RateConfig {
    Frequency bandwidth = Frequency::mhz(200.0);
    double overhead = 0.2;  // fraction in [0, 1)
    int n_layers = 1;
};

// se * bandwidth * (1 - overhead) * n_layers, bits/s.
double throughput_bps(double se, const RateConfig& cfg);

struct Carrier {
    Frequency bandwidth;
    double se;
};

// Carrier aggregation: sum of per-carrier throughputs. Empty list is an error.
double aggregate_ca_bps(std::span<const Carrier> carriers, double overhead, int n_layers);

}  // namespace linkplan::rate
