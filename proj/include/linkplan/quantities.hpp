// Copyright (C) 2026 linkplan contributors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace linkplan {

inline constexpr double kSpeedOfLightMps = 299792458.0;

namespace detail {
inline double require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + ": value must be finite");
    }
    return v;
}
}  // namespace detail

// Dimensionless ratio expressed in dB. All link-budget arithmetic stays in
// dB/dBm; conversion to linear happens only where a formula demands it.
class Decibel {
  public:
    Decibel() = default;
    explicit Decibel(double db) : db_(detail::require_finite(db, "Decibel")) {}

    double db() const { return db_; }
    double linear() const { return std::pow(10.0, db_ / 10.0); }

    static Decibel from_linear(double ratio) {
        if (!(ratio > 0.0) || !std::isfinite(ratio)) {
            throw std::invalid_argument("Decibel::from_linear: ratio must be finite and > 0");
        }
        return Decibel(10.0 * std::log10(ratio));
    }

    Decibel operator+(Decibel o) const { return Decibel(db_ + o.db_); }
    Decibel operator-(Decibel o) const { return Decibel(db_ - o.db_); }
    Decibel operator-() const { return Decibel(-db_); }

  private:
    double db_ = 0.0;
};

// Absolute power referenced to 1 mW.
class PowerDbm {
  public:
    PowerDbm() = default;
    explicit PowerDbm(double dbm) : dbm_(detail::require_finite(dbm, "PowerDbm")) {}

    double dbm() const { return dbm_; }
    double milliwatts() const { return std::pow(10.0, dbm_ / 10.0); }
    double watts() const { return milliwatts() * 1e-3; }

    static PowerDbm from_milliwatts(double mw) {
        if (!(mw > 0.0) || !std::isfinite(mw)) {
            throw std::invalid_argument("PowerDbm::from_milliwatts: power must be finite and > 0");
        }
        return PowerDbm(10.0 * std::log10(mw));
    }
    static PowerDbm from_watts(double w) { return from_milliwatts(w * 1e3); }

    PowerDbm operator+(Decibel gain) const { return PowerDbm(dbm_ + gain.db()); }
    PowerDbm operator-(Decibel loss) const { return PowerDbm(dbm_ - loss.db()); }
    Decibel operator-(PowerDbm o) const { return Decibel(dbm_ - o.dbm_); }

  private:
    double dbm_ = 0.0;
};

// Strictly positive frequency in Hz.
class Frequency {
  public:
    explicit Frequency(double hz) : hz_(hz) {
        if (!(hz > 0.0) || !std::isfinite(hz)) {
            throw std::invalid_argument("Frequency: value must be finite and > 0 Hz");
        }
    }

    double hertz() const { return hz_; }
    double megahertz() const { return hz_ / 1e6; }
    double gigahertz() const { return hz_ / 1e9; }

    static Frequency hz(double v) { return Frequency(v); }
    static Frequency mhz(double v) { return Frequency(v * 1e6); }
    static Frequency ghz(double v) { return Frequency(v * 1e9); }

  private:
    double hz_;
};

// Non-negative distance in meters.
class Distance {
  public:
    explicit Distance(double meters) : m_(meters) {
        if (!(meters >= 0.0) || !std::isfinite(meters)) {
            throw std::invalid_argument("Distance: value must be finite and >= 0 m");
        }
    }

    double meters() const { return m_; }
    double kilometers() const { return m_ / 1e3; }

    static Distance m(double v) { return Distance(v); }
    static Distance km(double v) { return Distance(v * 1e3); }

  private:
    double m_;
};

inline double to_db(double linear_ratio) {
    if (!(linear_ratio > 0.0) || !std::isfinite(linear_ratio)) {
        throw std::invalid_argument("to_db: ratio must be finite and > 0");
    }
    return 10.0 * std::log10(linear_ratio);
}

inline double to_linear(double db) { return std::pow(10.0, db / 10.0); }

// Tagged scalar conversion used by config ingestion and reporting.
enum class Unit {
    db,
    linear_ratio,
    dbm,
    milliwatt,
    watt,
    hertz,
    gigahertz,
    meter,
    kilometer,
};

const char* unit_name(Unit u);

// Converts between dimensionally compatible units (dB <-> linear ratio,
// dBm <-> mW <-> W, Hz <-> GHz, m <-> km). Throws std::invalid_argument on a
// unit mismatch; round trips are identity within 1e-12 relative error.
double convert(double value, Unit from, Unit to);

}  // namespace linkplan
