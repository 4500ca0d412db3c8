// Copyright (C) 2026 linkplan contributors
// SPDX-License-Identifier: Apache-2.0
//
#include "linkplan/quantities.hpp"

namespace linkplan {

namespace {

enum class Dimension { ratio, power, frequency, length };

Dimension dimension_of(Unit u) {
    switch (u) {
        case Unit::db:
        case Unit::linear_ratio:
            return Dimension::ratio;
        case Unit::dbm:
        case Unit::milliwatt:
        case Unit::watt:
            return Dimension::power;
        case Unit::hertz:
        case Unit::gigahertz:
            return Dimension::frequency;
        case Unit::meter:
        case Unit::kilometer:
            return Dimension::length;
    }
    throw std::invalid_argument("convert: unknown unit");
}

// Canonical units: linear ratio, mW, Hz, m.
double to_canonical(double value, Unit u) {
    switch (u) {
        case Unit::db:
            return std::pow(10.0, value / 10.0);
        case Unit::linear_ratio:
            return value;
        case Unit::dbm:
            return std::pow(10.0, value / 10.0);
        case Unit::milliwatt:
            return value;
        case Unit::watt:
            return value * 1e3;
        case Unit::hertz:
            return value;
        case Unit::gigahertz:
            return value * 1e9;
        case Unit::meter:
            return value;
        case Unit::kilometer:
            return value * 1e3;
    }
    throw std::invalid_argument("convert: unknown unit");
}

double from_canonical(double value, Unit u) {
    switch (u) {
        case Unit::db:
        case Unit::dbm:
            if (!(value > 0.0)) {
                throw std::invalid_argument("convert: log-scale target requires a positive value");
            }
            return 10.0 * std::log10(value);
        case Unit::linear_ratio:
        case Unit::milliwatt:
        case Unit::hertz:
        case Unit::meter:
            return value;
        case Unit::watt:
            return value * 1e-3;
        case Unit::gigahertz:
            return value * 1e-9;
        case Unit::kilometer:
            return value * 1e-3;
    }
    throw std::invalid_argument("convert: unknown unit");
}

}  // namespace

const char* unit_name(Unit u) {
    switch (u) {
        case Unit::db: return "dB";
        case Unit::linear_ratio: return "linear ratio";
        case Unit::dbm: return "dBm";
        case Unit::milliwatt: return "mW";
        case Unit::watt: return "W";
        case Unit::hertz: return "Hz";
        case Unit::gigahertz: return "GHz";
        case Unit::meter: return "m";
        case Unit::kilometer: return "km";
    }
    return "?";
}

double convert(double value, Unit from, Unit to) {
    detail::require_finite(value, "convert");
    if (dimension_of(from) != dimension_of(to)) {
        throw std::invalid_argument(std::string("convert: incompatible units ") + unit_name(from) +
                                    " -> " + unit_name(to));
    }
    if (from == to) {
        return value;
    }
    return from_canonical(to_canonical(value, from), to);
}

}  // namespace linkplan
