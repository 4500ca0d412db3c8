// Copyright (C) 2026 linkplan contributors
// SPDX-License-Identifier: Apache-2.0
//
#include "linkplan/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace linkplan::report {

namespace {

std::string fixed(double v, int decimals) {
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.*f", decimals, v);
    std::string s(buf.data());
    // normalize negative zero produced by display rounding
    if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') {
        s.erase(0, 1);
    }
    return s;
}

std::string join_ids(const std::vector<int>& ids) {
    std::string out;
    for (int id : ids) {
        if (!out.empty()) {
            out += ';';
        }
        out += std::to_string(id);
    }
    return out;
}

struct Cell {
    std::string label;   // table row label
    std::string column;  // CSV column name
    std::string display;
    std::string full;
};

std::vector<Cell> result_cells(const scenario::LinkBudgetResult& r) {
    auto num = [](std::string label, std::string column, double value,
                  std::string (*rounded)(double)) {
        return Cell{std::move(label), std::move(column), rounded(value), format_full(value)};
    };
    auto text = [](std::string label, std::string column, std::string value) {
        return Cell{std::move(label), std::move(column), value, value};
    };

    std::vector<Cell> cells;
    cells.push_back(text("Scenario", "scenario", channel::scenario_token(r.scenario)));
    cells.push_back(text("Direction", "direction", scenario::direction_token(r.direction)));
    cells.push_back(num("Frequency (GHz)", "frequency_ghz", r.frequency_ghz, format_full));
    cells.push_back(num("Distance (m)", "distance_m", r.distance_m, format_full));
    cells.push_back(num("Bandwidth (MHz)", "bandwidth_mhz", r.bandwidth_mhz, format_full));
    cells.push_back(num("Max EIRP (dBm)", "eirp_dbm", r.eirp.dbm(), format_db));
    cells.push_back(num("Path loss (dB)", "path_loss_db", r.path_loss_db, format_db));
    cells.push_back(
        num("Atmospheric loss (dB)", "atmospheric_loss_db", r.atmospheric_db, format_db));
    cells.push_back(
        num("Penetration loss (dB)", "penetration_loss_db", r.penetration_db, format_db));
    cells.push_back(num("Blockage loss (dB)", "blockage_loss_db", r.blockage_db, format_db));
    cells.push_back(
        num("Total propagation loss (dB)", "total_loss_db", r.total_loss_db, format_db));
    cells.push_back(num("Received power (dBm)", "rx_power_dbm", r.chain.rx_power.dbm(), format_db));
    cells.push_back(
        num("Thermal noise (dBm)", "thermal_noise_dbm", r.chain.thermal_noise.dbm(), format_db));
    cells.push_back(
        num("SNR before BF (dB)", "snr_before_bf_db", r.chain.snr_before_bf.db(), format_db));
    cells.push_back(num("Rx front end loss (dB)", "rx_front_end_loss_db",
                        r.receiver.front_end_loss_db, format_db));
    cells.push_back(num("Single antenna element gain (dBi)", "element_gain_dbi",
                        r.receiver.element_gain_dbi, format_db));
    cells.push_back(text("Rx array elements", "rx_elements", std::to_string(r.rx_elements)));
    cells.push_back(num("Total antenna array gain (dB)", "rx_array_gain_db",
                        r.chain.rx_array_gain.db(), format_db));
    cells.push_back(
        num("Noise figure (dB)", "noise_figure_db", r.receiver.noise_figure_db, format_db));
    cells.push_back(
        num("SNR after BF (dB)", "snr_after_bf_db", r.chain.snr_after_bf.db(), format_db));
    cells.push_back(num("Spectral efficiency SISO (bits/s/Hz)", "spectral_efficiency", r.se,
                        format_se));
    cells.push_back(num("SISO throughput (Mbps)", "siso_throughput_mbps", r.throughput_siso_bps,
                        format_mbps));
    cells.push_back(text("MIMO order", "mimo_order", std::to_string(r.mimo_order)));
    cells.push_back(num("MIMO throughput (Mbps)", "mimo_throughput_mbps", r.throughput_mimo_bps,
                        format_mbps));
    cells.push_back(text("Active modules", "active_modules", join_ids(r.active_module_ids)));
    return cells;
}

// Throughput cells carry bps internally but report Mbps.
void scale_throughput_cells(std::vector<Cell>& cells, const scenario::LinkBudgetResult& r) {
    for (auto& c : cells) {
        if (c.column == "siso_throughput_mbps") {
            c.full = format_full(r.throughput_siso_bps / 1e6);
        } else if (c.column == "mimo_throughput_mbps") {
            c.full = format_full(r.throughput_mimo_bps / 1e6);
        }
    }
}

}  // namespace

std::string format_full(double v) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) {
        return "nan";
    }
    return std::string(buf.data(), end);
}

std::string format_db(double v) { return fixed(v, 1); }

std::string format_se(double v) { return fixed(v, 2); }

std::string format_mbps(double bps) { return fixed(bps / 1e6, 0); }

std::string budget_table(const scenario::LinkBudgetResult& r, Rounding rounding) {
    auto cells = result_cells(r);
    scale_throughput_cells(cells, r);
    size_t width = 0;
    for (const auto& c : cells) {
        width = std::max(width, c.label.size());
    }
    std::ostringstream out;
    for (const auto& c : cells) {
        out << c.label << std::string(width - c.label.size() + 2, ' ')
            << (rounding == Rounding::display ? c.display : c.full) << '\n';
    }
    return out.str();
}

std::string budget_csv(const scenario::LinkBudgetResult& r) {
    auto cells = result_cells(r);
    scale_throughput_cells(cells, r);
    std::ostringstream out;
    for (size_t i = 0; i < cells.size(); ++i) {
        out << cells[i].column << (i + 1 < cells.size() ? "," : "\n");
    }
    for (size_t i = 0; i < cells.size(); ++i) {
        out << cells[i].full << (i + 1 < cells.size() ? "," : "\n");
    }
    return out.str();
}

std::string sweep_csv(const std::vector<scenario::SweepPoint>& points,
                      const std::string& axis_label) {
    std::ostringstream out;
    for (size_t p = 0; p < points.size(); ++p) {
        auto cells = result_cells(points[p].result);
        scale_throughput_cells(cells, points[p].result);
        if (p == 0) {
            out << axis_label;
            for (const auto& c : cells) {
                out << ',' << c.column;
            }
            out << '\n';
        }
        out << format_full(points[p].axis_value);
        for (const auto& c : cells) {
            out << ',' << c.full;
        }
        out << '\n';
    }
    return out.str();
}

std::string sweep_table(const std::vector<scenario::SweepPoint>& points,
                        const std::string& axis_label, Rounding rounding) {
    std::ostringstream out;
    for (const auto& p : points) {
        out << axis_label << " = " << format_full(p.axis_value) << '\n';
        out << budget_table(p.result, rounding) << '\n';
    }
    return out.str();
}

std::string validation_text(const ValidationReport& report) {
    std::ostringstream out;
    for (const auto& v : report.violations) {
        out << "violation [" << v.code << "] " << v.message << '\n';
    }
    for (const auto& n : report.notes) {
        out << "note " << n << '\n';
    }
    out << (report.passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

}  // namespace linkplan::report
