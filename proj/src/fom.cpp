// Copyright (C) 2026 linkplan contributors
// SPDX-License-Identifier: Apache-2.0
//
#include "linkplan/fom.hpp"

#include <cmath>
#include <stdexcept>

namespace linkplan::fom {

namespace {

double efficiency_term(const std::string& label, double pdlt_bps, double b_eff_hz,
                       double power_w) {
    if (!(pdlt_bps > 0.0) || !(b_eff_hz > 0.0) || !(power_w > 0.0)) {
        throw std::invalid_argument("ue_fom: record '" + label +
                                    "' requires positive throughput, bandwidth, and power");
    }
    return pdlt_bps / (b_eff_hz * power_w);
}

void validate_adc(const AdcSpec& spec) {
    if (!(spec.bandwidth_hz > 0.0) || !(spec.power_w > 0.0) || !(spec.sample_rate_hz > 0.0) ||
        !(spec.enob_bits > 0.0)) {
        throw std::invalid_argument("ADC FOM: bandwidth, power, sample rate, and ENOB must be > 0");
    }
}

}  // namespace

double ue_fom(const UeFomInputs& inputs) {
    if (!(inputs.volume_mm3 > 0.0) || !(inputs.mass_g > 0.0)) {
        throw std::invalid_argument("ue_fom: volume and mass must be > 0");
    }
    double sum = 0.0;
    for (const auto& r : inputs.non_ca) {
        sum += efficiency_term(r.label, r.pdlt_bps, r.b_eff_hz, r.power_w);
    }
    for (const auto& r : inputs.ca) {
        if (r.cc_count < 2 || r.cc_count > 5) {
            throw std::invalid_argument("ue_fom: CA record '" + r.label +
                                        "' must aggregate 2 to 5 component carriers");
        }
        sum += efficiency_term(r.label, r.pdlt_bps, r.b_eff_hz, r.power_w);
    }
    return sum / (inputs.volume_mm3 * inputs.mass_g);
}

double fom_schreier_db(const AdcSpec& spec) {
    validate_adc(spec);
    return spec.sndr_db + 10.0 * std::log10(spec.bandwidth_hz / spec.power_w);
}

double fom_walden_j(const AdcSpec& spec) {
    validate_adc(spec);
    const double conv_rate = std::min(2.0 * spec.bandwidth_hz, spec.sample_rate_hz);
    return spec.power_w / (std::exp2(spec.enob_bits) * conv_rate);
}

}  // namespace linkplan::fom
