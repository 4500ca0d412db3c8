// Copyright (C) 2026 linkplan contributors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <string>
#include <vector>

namespace linkplan::fom {

// One measured throughput operating point: peak throughput, effective
// bandwidth, and consumed power. CA records additionally carry the component
// carrier count (2..5) and a free-form combination label.
struct ThroughputRecord {
    std::string label;
    double pdlt_bps = 0.0;
    double b_eff_hz = 0.0;
    double power_w = 0.0;
};

struct CaRecord {
    std::string label;
    int cc_count = 2;  // 2..5
    double pdlt_bps = 0.0;
    double b_eff_hz = 0.0;
    double power_w = 0.0;
};

struct UeFomInputs {
    std::vector<ThroughputRecord> non_ca;
    std::vector<CaRecord> ca;
    double volume_mm3 = 0.0;
    double mass_g = 0.0;
};

// Handset-level figure of merit, bit/Hz/Joule/mm^3/gram:
//   [ sum_n pdlt/(b_eff*p) + sum_m pdlt/(b_eff*p) ] / (volume * mass)
// Empty record lists yield 0. Non-positive volume/mass/b_eff/power throw
// std::invalid_argument.
double ue_fom(const UeFomInputs& inputs);

struct AdcSpec {
    double sndr_db = 0.0;
    double enob_bits = 0.0;
    double bandwidth_hz = 0.0;   // B
    double power_w = 0.0;        // P
    double sample_rate_hz = 0.0; // f_s
};

// Schreier FOM, dB: SNDR + 10*log10(B/P) with B in Hz and P in W.
double fom_schreier_db(const AdcSpec& spec);

// Walden FOM, Joules/conversion: P / (2^ENOB * min(2B, f_s)).
double fom_walden_j(const AdcSpec& spec);

}  // namespace linkplan::fom
