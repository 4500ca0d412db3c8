// Copyright (C) 2026 linkplan contributors
// SPDX-License-Identifier: Apache-2.0
//
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "linkplan/fom.hpp"

using namespace linkplan::fom;

namespace {

UeFomInputs single_record_inputs() {
    UeFomInputs in;
    in.non_ca.push_back({"nr-200", 1.0e9, 1.0e8, 1.0});
    in.volume_mm3 = 1.0e5;
    in.mass_g = 150.0;
    return in;
}

}  // namespace

TEST_CASE("handset figure of merit") {
    // 1 Gbps over 100 MHz at 1 W in a 1e5 mm^3, 150 g handset
    CHECK(ue_fom(single_record_inputs()) ==
          doctest::Approx(6.666666666666667e-07).epsilon(1e-12));

    SUBCASE("empty record lists yield zero") {
        UeFomInputs in;
        in.volume_mm3 = 1.0e5;
        in.mass_g = 150.0;
        CHECK(ue_fom(in) == 0.0);
    }
    SUBCASE("CA records add efficiency terms") {
        UeFomInputs in = single_record_inputs();
        in.ca.push_back({"ca-2cc", 2, 2.0e9, 2.0e8, 1.0});
        CHECK(ue_fom(in) == doctest::Approx(2.0 * 6.666666666666667e-07).epsilon(1e-12));
    }
    SUBCASE("scaling laws") {
        UeFomInputs in = single_record_inputs();
        double base = ue_fom(in);
        in.volume_mm3 *= 2.0;
        CHECK(ue_fom(in) == doctest::Approx(base / 2.0).epsilon(1e-12));
        in = single_record_inputs();
        in.mass_g *= 2.0;
        CHECK(ue_fom(in) == doctest::Approx(base / 2.0).epsilon(1e-12));
        in = single_record_inputs();
        in.non_ca[0].power_w *= 2.0;
        CHECK(ue_fom(in) == doctest::Approx(base / 2.0).epsilon(1e-12));
        in = single_record_inputs();
        in.non_ca[0].pdlt_bps *= 2.0;
        CHECK(ue_fom(in) == doctest::Approx(base * 2.0).epsilon(1e-12));
    }
    SUBCASE("invalid inputs") {
        UeFomInputs in = single_record_inputs();
        in.volume_mm3 = 0.0;
        CHECK_THROWS_AS(ue_fom(in), std::invalid_argument);
        in = single_record_inputs();
        in.mass_g = 0.0;
        CHECK_THROWS_AS(ue_fom(in), std::invalid_argument);
        in = single_record_inputs();
        in.non_ca[0].b_eff_hz = 0.0;
        CHECK_THROWS_AS(ue_fom(in), std::invalid_argument);
        in = single_record_inputs();
        in.non_ca[0].power_w = 0.0;
        CHECK_THROWS_AS(ue_fom(in), std::invalid_argument);
        in = single_record_inputs();
        in.ca.push_back({"ca-1cc", 1, 1.0e9, 1.0e8, 1.0});
        CHECK_THROWS_AS(ue_fom(in), std::invalid_argument);
        in.ca[0].cc_count = 6;
        CHECK_THROWS_AS(ue_fom(in), std::invalid_argument);
        in.ca[0].cc_count = 5;
        CHECK_NOTHROW(ue_fom(in));
    }
}

TEST_CASE("Schreier ADC figure of merit") {
    AdcSpec spec;
    spec.sndr_db = 60.0;
    spec.bandwidth_hz = 1.0e8;
    spec.power_w = 0.01;
    spec.sample_rate_hz = 2.0e8;
    spec.enob_bits = 9.67;
    CHECK(fom_schreier_db(spec) == doctest::Approx(160.0).epsilon(1e-12));

    SUBCASE("B equal to P leaves SNDR unchanged") {
        spec.bandwidth_hz = 0.01;  // numerically equal to power
        CHECK(fom_schreier_db(spec) == doctest::Approx(60.0).epsilon(1e-12));
    }
    SUBCASE("wideband low-power receiver ADC") {
        spec.sndr_db = 70.0;
        spec.bandwidth_hz = 2.0e8;
        spec.power_w = 0.0377;
        CHECK(fom_schreier_db(spec) == doctest::Approx(167.2468864545819).epsilon(1e-12));
    }
    SUBCASE("monotone in SNDR") {
        double prev = fom_schreier_db(spec);
        for (double s = 61.0; s <= 80.0; s += 1.0) {
            spec.sndr_db = s;
            double cur = fom_schreier_db(spec);
            CHECK(cur > prev);
            prev = cur;
        }
    }
    spec.power_w = 0.0;
    CHECK_THROWS_AS(fom_schreier_db(spec), std::invalid_argument);
}

TEST_CASE("Walden ADC figure of merit") {
    AdcSpec spec;
    spec.sndr_db = 64.2;
    spec.enob_bits = 10.37;
    spec.bandwidth_hz = 1.0e9;   // 2B >= f_s, so f_s limits the conversion rate
    spec.power_w = 0.0377;
    spec.sample_rate_hz = 1.6e9;
    CHECK(fom_walden_j(spec) == doctest::Approx(1.7804931718917275e-14).epsilon(1e-12));

    SUBCASE("one extra effective bit halves the energy per conversion") {
        double base = fom_walden_j(spec);
        spec.enob_bits += 1.0;
        CHECK(fom_walden_j(spec) == doctest::Approx(base / 2.0).epsilon(1e-12));
    }
    SUBCASE("Nyquist-limited branch uses 2B") {
        double fs_limited = fom_walden_j(spec);
        spec.bandwidth_hz = 0.5e9;  // 2B = 1.0e9 < f_s
        CHECK(fom_walden_j(spec) == doctest::Approx(fs_limited * 1.6).epsilon(1e-12));
    }
    SUBCASE("ranking is stable under common scaling") {
        std::mt19937 rng(20260814);
        std::uniform_real_distribution<double> enob(6.0, 14.0);
        std::uniform_real_distribution<double> power(1e-3, 1e-1);
        std::uniform_real_distribution<double> scale(0.1, 10.0);
        for (int i = 0; i < 200; ++i) {
            AdcSpec a = spec, b = spec;
            a.enob_bits = enob(rng);
            a.power_w = power(rng);
            b.enob_bits = enob(rng);
            b.power_w = power(rng);
            bool a_better = fom_walden_j(a) < fom_walden_j(b);
            double k = scale(rng);
            a.power_w *= k;
            b.power_w *= k;
            CHECK((fom_walden_j(a) < fom_walden_j(b)) == a_better);
        }
    }
    spec.enob_bits = 0.0;
    CHECK_THROWS_AS(fom_walden_j(spec), std::invalid_argument);
    spec.enob_bits = 10.0;
    spec.sample_rate_hz = 0.0;
    CHECK_THROWS_AS(fom_walden_j(spec), std::invalid_argument);
}
