// Copyright (C) 2026 linkplan contributors
// SPDX-License-Identifier: Apache-2.0
//
#include "linkplan/rate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace linkplan::rate {

namespace {

void validate(const SeMapping& m) {
    if (m.backoff_db < 0.0) {
        throw std::invalid_argument("spectral_efficiency: backoff must be >= 0 dB");
    }
    if (!(m.se_cap_bits > 0.0)) {
        throw std::invalid_argument("spectral_efficiency: se_cap must be > 0");
    }
    if (m.mode == SeMode::table_injected && m.injected_se < 0.0) {
        throw std::invalid_argument("spectral_efficiency: injected SE must be >= 0");
    }
}

void validate(double overhead, int n_layers) {
    if (!(overhead >= 0.0 && overhead < 1.0)) {
        throw std::invalid_argument("throughput: overhead must be within [0, 1)");
    }
    if (n_layers < 1) {
        throw std::invalid_argument("throughput: layer count must be >= 1");
    }
}

}  // namespace

double spectral_efficiency(Decibel snr_after_bf, const SeMapping& m) {
    validate(m);
    if (m.mode == SeMode::table_injected) {
        return m.injected_se;
    }
    const double backoff = m.mode == SeMode::shannon_with_backoff ? m.backoff_db : 0.0;
    const double snr_linear = to_linear(snr_after_bf.db() - backoff);
    return std::min(std::log2(1.0 + snr_linear), m.se_cap_bits);
}

double throughput_bps(double se, const RateConfig& cfg) {
    if (se < 0.0) {
        throw std::invalid_argument("throughput: spectral efficiency must be >= 0");
    }
    validate(cfg.overhead, cfg.n_layers);
    return se * cfg.bandwidth.hertz() * (1.0 - cfg.overhead) * cfg.n_layers;
}

double aggregate_ca_bps(std::span<const Carrier> carriers, double overhead, int n_layers) {
    if (carriers.empty()) {
        throw std::invalid_argument("aggregate_ca: carrier list must be non-empty");
    }
    double total = 0.0;
    for (const auto& c : carriers) {
        total += throughput_bps(c.se, RateConfig{c.bandwidth, overhead, n_layers});
    }
    return total;
}

}  // namespace linkplan::rate
