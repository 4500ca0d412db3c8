// Copyright (C) 2026 linkplan contributors
// SPDX-License-Identifier: Apache-2.0
//
#include <cmath>
#include <random>

#include "doctest.h"
#include "linkplan/linkbudget.hpp"

using namespace linkplan;
using namespace linkplan::linkbudget;

TEST_CASE("transmit EIRP by PA architecture") {
    ArrayConfig split{8, 0.0, PaArchitecture::single_split_pa, PowerDbm(20.0)};
    // 20 + 10*log10(8)
    CHECK(eirp(split).dbm() == doctest::Approx(29.030899869919436).epsilon(1e-12));

    ArrayConfig per_el{8, 0.0, PaArchitecture::per_element_pa, PowerDbm(20.0)};
    // 20 + 20*log10(8)
    CHECK(eirp(per_el).dbm() == doctest::Approx(38.06179973983887).epsilon(1e-12));

    SUBCASE("single element adds nothing") {
        ArrayConfig one{1, 0.0, PaArchitecture::single_split_pa, PowerDbm(17.5)};
        CHECK(eirp(one).dbm() == 17.5);
        one.pa_architecture = PaArchitecture::per_element_pa;
        CHECK(eirp(one).dbm() == 17.5);
    }
    SUBCASE("per-element doubles the dB boost of single-split") {
        for (int n : {2, 4, 8, 16, 64}) {
            ArrayConfig a{n, 0.0, PaArchitecture::single_split_pa, PowerDbm(0.0)};
            ArrayConfig b{n, 0.0, PaArchitecture::per_element_pa, PowerDbm(0.0)};
            CHECK(eirp(b).dbm() == doctest::Approx(2.0 * eirp(a).dbm()).epsilon(1e-12));
        }
    }
    ArrayConfig bad{0, 0.0, PaArchitecture::per_element_pa, PowerDbm(20.0)};
    CHECK_THROWS_AS(eirp(bad), std::invalid_argument);
}

TEST_CASE("per-PA ceiling under an EIRP limit") {
    CHECK(max_pa_power(PowerDbm(43.0), 16).dbm() ==
          doctest::Approx(18.917600346881503).epsilon(1e-12));
    CHECK(max_pa_power(PowerDbm(43.0), 8).dbm() ==
          doctest::Approx(24.93820026016113).epsilon(1e-12));
    CHECK(max_pa_power(PowerDbm(43.0), 1).dbm() == 43.0);
    CHECK(std::round(max_pa_power(PowerDbm(43.0), 16).dbm()) == 19.0);
    CHECK(std::round(max_pa_power(PowerDbm(43.0), 8).dbm()) == 25.0);
    CHECK_THROWS_AS(max_pa_power(PowerDbm(43.0), 0), std::invalid_argument);

    SUBCASE("exact inverse of per-element eirp") {
        for (int n : {1, 2, 3, 8, 16, 100, 256}) {
            PowerDbm limit(43.0);
            ArrayConfig cfg{n, 0.0, PaArchitecture::per_element_pa, max_pa_power(limit, n)};
            CHECK(eirp(cfg).dbm() == doctest::Approx(limit.dbm()).epsilon(1e-12));
        }
    }
}

TEST_CASE("base-station EIRP from a PSD limit") {
    PowerDbm psd(75.0);
    CHECK(bs_eirp_from_psd(psd, Frequency::mhz(100.0), Frequency::mhz(200.0)).dbm() ==
          doctest::Approx(78.01029995663981).epsilon(1e-12));
    CHECK(bs_eirp_from_psd(psd, Frequency::mhz(100.0), Frequency::mhz(100.0)).dbm() == 75.0);
    CHECK(bs_eirp_from_psd(psd, Frequency::mhz(100.0), Frequency::mhz(800.0)).dbm() ==
          doctest::Approx(84.03089986991944).epsilon(1e-12));
}

TEST_CASE("receive array gain") {
    CHECK(rx_array_gain(8, 5.0).db() == doctest::Approx(14.030899869919436).epsilon(1e-12));
    CHECK(rx_array_gain(64, 5.0).db() == doctest::Approx(23.06179973983887).epsilon(1e-12));
    CHECK(rx_array_gain(256, 5.0).db() == doctest::Approx(29.082399653118497).epsilon(1e-12));
    CHECK(rx_array_gain(1, 0.0).db() == 0.0);
    CHECK_THROWS_AS(rx_array_gain(0, 5.0), std::invalid_argument);

    SUBCASE("doubling the elements adds 10*log10(2) dB") {
        for (int n : {1, 2, 4, 8, 32, 128}) {
            double step = rx_array_gain(2 * n, 5.0).db() - rx_array_gain(n, 5.0).db();
            CHECK(step == doctest::Approx(3.0102999566398116).epsilon(1e-9));
        }
    }
}

TEST_CASE("thermal noise floor") {
    CHECK(thermal_noise(Frequency::hz(1.0)).dbm() == -174.0);
    CHECK(thermal_noise(Frequency::mhz(200.0)).dbm() ==
          doctest::Approx(-90.98970004336019).epsilon(1e-12));
    CHECK(thermal_noise(Frequency::mhz(800.0)).dbm() ==
          doctest::Approx(-84.96910013008056).epsilon(1e-12));
}

TEST_CASE("SNR chain") {
    ReceiverSpec ue{4.0, 7.0, 8, 5.0};

    SUBCASE("downlink at a PSD-derived EIRP") {
        PowerDbm bs = bs_eirp_from_psd(PowerDbm(75.0), Frequency::mhz(100.0),
                                       Frequency::mhz(200.0));
        SnrChain c = link_snr(bs, Decibel(126.3), Frequency::mhz(200.0), ue);
        CHECK(c.rx_power.dbm() == doctest::Approx(-48.28970004336019).epsilon(1e-12));
        CHECK(c.thermal_noise.dbm() == doctest::Approx(-90.98970004336019).epsilon(1e-12));
        CHECK(c.snr_before_bf.db() == doctest::Approx(42.7).epsilon(1e-12));
        CHECK(c.rx_array_gain.db() == doctest::Approx(14.030899869919436).epsilon(1e-12));
        CHECK(c.snr_after_bf.db() == doctest::Approx(45.73089986991944).epsilon(1e-12));
    }
    SUBCASE("uplink into a 64-element base station") {
        ReceiverSpec bs{4.0, 7.0, 64, 5.0};
        SnrChain c = link_snr(PowerDbm(43.0), Decibel(126.3), Frequency::mhz(200.0), bs);
        CHECK(c.rx_power.dbm() == doctest::Approx(-83.3).epsilon(1e-12));
        CHECK(c.snr_before_bf.db() == doctest::Approx(7.68970004336019).epsilon(1e-12));
        CHECK(c.snr_after_bf.db() == doctest::Approx(19.751499783199062).epsilon(1e-12));
    }
    SUBCASE("lossless single-element chain at 1 Hz") {
        ReceiverSpec bare{0.0, 0.0, 1, 0.0};
        SnrChain c = link_snr(PowerDbm(0.0), Decibel(0.0), Frequency::hz(1.0), bare);
        CHECK(c.rx_power.dbm() == 0.0);
        CHECK(c.thermal_noise.dbm() == -174.0);
        CHECK(c.snr_before_bf.db() == 174.0);
        CHECK(c.snr_after_bf.db() == 174.0);
    }
    SUBCASE("SNR is linear in EIRP") {
        std::mt19937 rng(20260814);
        std::uniform_real_distribution<double> e(0.0, 80.0);
        std::uniform_real_distribution<double> delta(0.1, 30.0);
        for (int i = 0; i < 500; ++i) {
            double base = e(rng);
            double d = delta(rng);
            SnrChain lo = link_snr(PowerDbm(base), Decibel(120.0), Frequency::mhz(200.0), ue);
            SnrChain hi = link_snr(PowerDbm(base + d), Decibel(120.0), Frequency::mhz(200.0), ue);
            CHECK(hi.rx_power.dbm() - lo.rx_power.dbm() == doctest::Approx(d).epsilon(1e-9));
            CHECK(hi.snr_before_bf.db() - lo.snr_before_bf.db() ==
                  doctest::Approx(d).epsilon(1e-9));
            CHECK(hi.snr_after_bf.db() - lo.snr_after_bf.db() == doctest::Approx(d).epsilon(1e-9));
        }
    }
    SUBCASE("negative receiver parameters are rejected") {
        CHECK_THROWS_AS(
            link_snr(PowerDbm(43.0), Decibel(120.0), Frequency::mhz(200.0), {-1.0, 7.0, 8, 5.0}),
            std::invalid_argument);
        CHECK_THROWS_AS(
            link_snr(PowerDbm(43.0), Decibel(120.0), Frequency::mhz(200.0), {4.0, -7.0, 8, 5.0}),
            std::invalid_argument);
    }
}
