// Copyright (C) 2026 linkplan contributors
// SPDX-License-Identifier: Apache-2.0
//
#include "linkplan/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "linkplan/errors.hpp"

namespace linkplan::config {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& source, const std::string& msg) {
    throw ConfigError(source + ": " + msg);
}

// Strict object reader: every key must be consumed by exactly one accessor,
// leftovers are reported with their JSON path.
class ObjView {
  public:
    ObjView(const json& j, std::string path, const std::string& source)
        : j_(j), path_(std::move(path)), source_(source) {
        if (!j_.is_object()) {
            fail(source_, path_ + ": expected an object");
        }
    }

    bool has(const std::string& key) {
        allowed_.insert(key);
        return j_.contains(key);
    }

    const json& raw(const std::string& key) {
        allowed_.insert(key);
        if (!j_.contains(key)) {
            fail(source_, path_ + "." + key + ": required key is missing");
        }
        return j_.at(key);
    }

    double number(const std::string& key) {
        const json& v = raw(key);
        if (!v.is_number()) {
            fail(source_, path_ + "." + key + ": expected a number");
        }
        return v.get<double>();
    }

    double number_or(const std::string& key, double fallback) {
        return has(key) ? number(key) : fallback;
    }

    int integer(const std::string& key) {
        const json& v = raw(key);
        if (!v.is_number_integer()) {
            fail(source_, path_ + "." + key + ": expected an integer");
        }
        return v.get<int>();
    }

    int integer_or(const std::string& key, int fallback) {
        return has(key) ? integer(key) : fallback;
    }

    std::string str(const std::string& key) {
        const json& v = raw(key);
        if (!v.is_string()) {
            fail(source_, path_ + "." + key + ": expected a string");
        }
        return v.get<std::string>();
    }

    std::string str_or(const std::string& key, const std::string& fallback) {
        return has(key) ? str(key) : fallback;
    }

    // Fixed-length array of numbers, e.g. a [low, high] pair.
    std::vector<double> number_array(const std::string& key, size_t expected) {
        const json& v = raw(key);
        if (!v.is_array() || (expected > 0 && v.size() != expected)) {
            std::ostringstream msg;
            msg << path_ << "." << key << ": expected an array of " << expected << " numbers";
            fail(source_, msg.str());
        }
        std::vector<double> out;
        out.reserve(v.size());
        for (size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_number()) {
                std::ostringstream msg;
                msg << path_ << "." << key << "[" << i << "]: expected a number";
                fail(source_, msg.str());
            }
            out.push_back(v[i].get<double>());
        }
        return out;
    }

    void finish() const {
        for (const auto& item : j_.items()) {
            if (allowed_.find(item.key()) == allowed_.end()) {
                fail(source_, path_ + ": unknown key \"" + item.key() + "\"");
            }
        }
    }

    const std::string& path() const { return path_; }

  private:
    const json& j_;
    std::string path_;
    const std::string& source_;
    std::set<std::string> allowed_;
};

// Re-throw token-lookup errors with the key's JSON path prepended.
template <typename Fn>
auto tokenized(Fn&& fn, const std::string& source, const std::string& path) {
    try {
        return fn();
    } catch (const ConfigError& e) {
        throw ConfigError(source + ": " + path + ": " + e.what());
    }
}

void parse_weather(ObjView parent, scenario::ScenarioConfig& cfg, const std::string& source) {
    channel::AttenuationModel w;
    w.specific_attenuation_db_per_km = parent.number_or("specific_attenuation_db_per_km", 0.0);
    w.rain_rate_mm_per_h = parent.number_or("rain_rate_mm_per_h", 0.0);
    if (w.specific_attenuation_db_per_km < 0.0 || w.rain_rate_mm_per_h < 0.0) {
        fail(source, parent.path() + ": attenuation and rain rate must be >= 0");
    }
    parent.finish();
    cfg.weather = w;
}

void parse_penetration(ObjView parent, scenario::ScenarioConfig& cfg,
                       const std::string& source) {
    cfg.penetration_material = parent.str_or("material", "none");
    if (parent.has("table")) {
        const json& table = parent.raw("table");
        if (!table.is_object()) {
            fail(source, parent.path() + ".table: expected an object of material -> dB entries");
        }
        for (const auto& item : table.items()) {
            if (!item.value().is_number()) {
                fail(source, parent.path() + ".table." + item.key() + ": expected a number");
            }
            double loss = item.value().get<double>();
            if (loss < 0.0) {
                fail(source, parent.path() + ".table." + item.key() + ": loss must be >= 0 dB");
            }
            cfg.penetration.set(item.key(), loss);
        }
    }
    parent.finish();
    // Surface unknown-material errors at parse time, with the path.
    tokenized([&] { return cfg.penetration.loss(cfg.penetration_material); }, source,
              parent.path() + ".material");
}

void parse_se(ObjView parent, scenario::ScenarioConfig& cfg, std::vector<double>& injected_values,
              const std::string& source) {
    rate::SeMapping m;
    std::string mode = parent.str_or("mode", "shannon");
    if (mode == "shannon") {
        m.mode = rate::SeMode::shannon;
    } else if (mode == "shannon_with_backoff") {
        m.mode = rate::SeMode::shannon_with_backoff;
    } else if (mode == "table_injected") {
        m.mode = rate::SeMode::table_injected;
    } else {
        fail(source, parent.path() +
                         ".mode: unknown mode \"" + mode +
                         "\" (expected shannon, shannon_with_backoff, table_injected)");
    }
    m.backoff_db = parent.number_or("backoff_db", 0.0);
    m.se_cap_bits = parent.number_or("se_cap", 8.0);
    m.injected_se = parent.number_or("injected", 0.0);
    if (parent.has("injected_values")) {
        injected_values = parent.number_array("injected_values", 0);
        for (size_t i = 0; i < injected_values.size(); ++i) {
            if (injected_values[i] < 0.0) {
                std::ostringstream msg;
                msg << parent.path() << ".injected_values[" << i << "]: SE must be >= 0";
                fail(source, msg.str());
            }
        }
    }
    if (m.backoff_db < 0.0) {
        fail(source, parent.path() + ".backoff_db: must be >= 0");
    }
    if (m.se_cap_bits <= 0.0) {
        fail(source, parent.path() + ".se_cap: must be > 0");
    }
    if (m.injected_se < 0.0) {
        fail(source, parent.path() + ".injected: must be >= 0");
    }
    parent.finish();
    cfg.se_mapping = m;
}

void parse_receiver(ObjView parent, scenario::ScenarioConfig& cfg, const std::string& source) {
    cfg.receiver.front_end_loss_db =
        parent.number_or("front_end_loss_db", cfg.receiver.front_end_loss_db);
    cfg.receiver.noise_figure_db =
        parent.number_or("noise_figure_db", cfg.receiver.noise_figure_db);
    cfg.receiver.element_gain_dbi =
        parent.number_or("element_gain_dbi", cfg.receiver.element_gain_dbi);
    if (cfg.receiver.front_end_loss_db < 0.0 || cfg.receiver.noise_figure_db < 0.0) {
        fail(source, parent.path() + ": front end loss and noise figure must be >= 0 dB");
    }
    parent.finish();
}

void parse_regulatory(ObjView parent, scenario::ScenarioConfig& cfg, const std::string& source) {
    cfg.regulatory.ue_eirp_limit_dbm =
        parent.number_or("ue_eirp_limit_dbm", cfg.regulatory.ue_eirp_limit_dbm);
    cfg.regulatory.bs_psd_dbm = parent.number_or("bs_psd_dbm", cfg.regulatory.bs_psd_dbm);
    if (parent.has("psd_ref_bw_mhz")) {
        double ref = parent.number("psd_ref_bw_mhz");
        if (ref <= 0.0) {
            fail(source, parent.path() + ".psd_ref_bw_mhz: must be > 0");
        }
        cfg.regulatory.psd_ref_bw = Frequency::mhz(ref);
    }
    parent.finish();
}

void parse_layout(ObjView parent, scenario::ScenarioConfig& cfg, const std::string& source) {
    geometry::UeLayout layout;
    {
        ObjView housing(parent.raw("housing"), parent.path() + ".housing", source);
        double w = housing.number("width_mm");
        double h = housing.number("height_mm");
        if (w <= 0.0 || h <= 0.0) {
            fail(source, housing.path() + ": width and height must be > 0");
        }
        layout.housing.width_mm = w;
        layout.housing.height_mm = h;
        if (housing.has("origin_mm")) {
            auto origin = housing.number_array("origin_mm", 2);
            layout.housing.origin_x_mm = origin[0];
            layout.housing.origin_y_mm = origin[1];
        }
        housing.finish();
    }
    layout.min_isolation_mm = parent.number_or("min_isolation_mm", layout.min_isolation_mm);
    if (parent.has("carrier_ghz")) {
        double carrier = parent.number("carrier_ghz");
        if (carrier <= 0.0) {
            fail(source, parent.path() + ".carrier_ghz: must be > 0");
        }
        layout.carrier = Frequency::ghz(carrier);
    }
    const json& modules = parent.raw("modules");
    if (!modules.is_array() || modules.empty()) {
        fail(source, parent.path() + ".modules: expected a non-empty array");
    }
    for (size_t i = 0; i < modules.size(); ++i) {
        std::ostringstream p;
        p << parent.path() << ".modules[" << i << "]";
        ObjView mod(modules[i], p.str(), source);
        geometry::ModulePlacement m;
        m.id = mod.integer("id");
        auto center = mod.number_array("center_mm", 2);
        auto size = mod.number_array("size_mm", 2);
        m.center_x_mm = center[0];
        m.center_y_mm = center[1];
        m.width_mm = size[0];
        m.height_mm = size[1];
        if (m.width_mm <= 0.0 || m.height_mm <= 0.0) {
            fail(source, mod.path() + ".size_mm: dimensions must be > 0");
        }
        mod.finish();
        layout.modules.push_back(m);
    }
    parent.finish();
    cfg.ue_layout = std::move(layout);
}

void parse_frequency_plan(ObjView parent, RunConfig& run, const std::string& source) {
    geometry::FrequencyPlan plan;
    auto band = parent.number_array("rf_band_ghz", 2);
    plan.rf_low_ghz = band[0];
    plan.rf_high_ghz = band[1];
    plan.if_center_ghz = parent.number("if_center_ghz");
    plan.if_bandwidth_ghz = parent.number_or("if_bandwidth_mhz", 200.0) / 1000.0;
    plan.control_ghz = parent.number_or("control_mhz", 600.0) / 1000.0;
    plan.ref_clock_ghz = parent.number_or("ref_clock_mhz", 100.0) / 1000.0;
    run.max_harmonic = parent.integer_or("max_harmonic", run.max_harmonic);
    if (run.max_harmonic < 1) {
        fail(source, parent.path() + ".max_harmonic: must be >= 1");
    }
    if (parent.has("protected_bands_ghz")) {
        const json& bands = parent.raw("protected_bands_ghz");
        if (!bands.is_array()) {
            fail(source, parent.path() + ".protected_bands_ghz: expected an array of [low, high]");
        }
        for (size_t i = 0; i < bands.size(); ++i) {
            const json& b = bands[i];
            if (!b.is_array() || b.size() != 2 || !b[0].is_number() || !b[1].is_number()) {
                std::ostringstream msg;
                msg << parent.path() << ".protected_bands_ghz[" << i
                    << "]: expected [low, high] in GHz";
                fail(source, msg.str());
            }
            plan.protected_bands_ghz.emplace_back(b[0].get<double>(), b[1].get<double>());
        }
    }
    parent.finish();
    run.frequency_plan = plan;
}

void parse_output(ObjView parent, OutputOptions& out, const std::string& source) {
    std::string format = parent.str_or("format", "table");
    if (format == "table") {
        out.format = OutputFormat::table;
    } else if (format == "csv") {
        out.format = OutputFormat::csv;
    } else {
        fail(source,
             parent.path() + ".format: unknown format \"" + format + "\" (expected table, csv)");
    }
    out.path = parent.str_or("path", "");
    std::string rounding = parent.str_or("rounding", "display");
    if (rounding == "display") {
        out.rounding = report::Rounding::display;
    } else if (rounding == "full") {
        out.rounding = report::Rounding::full;
    } else {
        fail(source, parent.path() + ".rounding: unknown rounding \"" + rounding +
                         "\" (expected display, full)");
    }
    parent.finish();
}

RunConfig parse_root(const json& j, const std::string& source) {
    RunConfig run;
    scenario::ScenarioConfig& cfg = run.scenario;
    ObjView root(j, "$", source);

    if (!root.has("schema_version")) {
        fail(source, "$.schema_version: required key is missing");
    }
    int version = root.integer("schema_version");
    if (version != 1) {
        std::ostringstream msg;
        msg << "$.schema_version: unsupported version " << version << " (expected 1)";
        fail(source, msg.str());
    }

    if (root.has("scenario")) {
        std::string token = root.str("scenario");
        cfg.scenario =
            tokenized([&] { return channel::scenario_from_token(token); }, source, "$.scenario");
    }
    if (root.has("frequency_ghz")) {
        double f = root.number("frequency_ghz");
        if (f <= 0.0) {
            fail(source, "$.frequency_ghz: must be > 0");
        }
        cfg.frequency = Frequency::ghz(f);
    }
    if (root.has("distance_m")) {
        double d = root.number("distance_m");
        if (d < 1.0) {
            fail(source, "$.distance_m: must be >= 1 (model reference distance)");
        }
        cfg.distance = Distance::m(d);
    }
    if (root.has("bandwidth_mhz")) {
        double bw = root.number("bandwidth_mhz");
        if (bw <= 0.0) {
            fail(source, "$.bandwidth_mhz: must be > 0");
        }
        cfg.bandwidth = Frequency::mhz(bw);
    }
    if (root.has("direction")) {
        std::string token = root.str("direction");
        cfg.direction = tokenized([&] { return scenario::direction_from_token(token); }, source,
                                  "$.direction");
    }
    cfg.n_ant = root.integer_or("n_ant", cfg.n_ant);
    cfg.n_bf = root.integer_or("n_bf", cfg.n_bf);
    cfg.n_array = root.integer_or("n_array", cfg.n_array);
    if (cfg.n_ant < 1 || cfg.n_bf < 1 || cfg.n_array < 1) {
        fail(source, "$: n_ant, n_bf, and n_array must be >= 1");
    }
    if (root.has("holding")) {
        std::string token = root.str("holding");
        cfg.holding =
            tokenized([&] { return scenario::holding_from_token(token); }, source, "$.holding");
    }
    cfg.overhead = root.number_or("overhead", cfg.overhead);
    if (cfg.overhead < 0.0 || cfg.overhead >= 1.0) {
        fail(source, "$.overhead: must lie in [0, 1)");
    }
    cfg.body_blockage_db = root.number_or("body_blockage_db", cfg.body_blockage_db);
    if (cfg.body_blockage_db < 0.0) {
        fail(source, "$.body_blockage_db: must be >= 0");
    }
    if (root.has("pa_power_dbm")) {
        cfg.pa_power_dbm = root.number("pa_power_dbm");
    }

    if (root.has("weather")) {
        parse_weather(ObjView(root.raw("weather"), "$.weather", source), cfg, source);
    }
    if (root.has("penetration")) {
        parse_penetration(ObjView(root.raw("penetration"), "$.penetration", source), cfg, source);
    }
    if (root.has("se")) {
        parse_se(ObjView(root.raw("se"), "$.se", source), cfg, run.injected_se_values, source);
    }
    if (root.has("receiver")) {
        parse_receiver(ObjView(root.raw("receiver"), "$.receiver", source), cfg, source);
    }
    if (root.has("regulatory")) {
        parse_regulatory(ObjView(root.raw("regulatory"), "$.regulatory", source), cfg, source);
    }
    if (root.has("path_loss_model")) {
        ObjView model(root.raw("path_loss_model"), "$.path_loss_model", source);
        channel::PathLossModel m;
        m.scenario = cfg.scenario;
        m.frequency_ghz = cfg.frequency.gigahertz();
        m.intercept_db = model.number("intercept_db");
        m.exponent = model.number("exponent");
        model.finish();
        if (m.exponent <= 0.0) {
            fail(source, "$.path_loss_model.exponent: must be > 0");
        }
        cfg.model_override = m;
    }
    if (root.has("layout")) {
        parse_layout(ObjView(root.raw("layout"), "$.layout", source), cfg, source);
    }
    if (root.has("frequency_plan")) {
        parse_frequency_plan(ObjView(root.raw("frequency_plan"), "$.frequency_plan", source), run,
                             source);
    }
    if (root.has("output")) {
        parse_output(ObjView(root.raw("output"), "$.output", source), run.output, source);
    }

    root.finish();
    return run;
}

}  // namespace

RunConfig parse_string(const std::string& json_text, const std::string& source_name) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        size_t offset = std::min(e.byte, json_text.size());
        long line = 1 + std::count(json_text.begin(), json_text.begin() + offset, '\n');
        std::ostringstream msg;
        msg << source_name << ":" << line << ": JSON parse error: " << e.what();
        throw ConfigError(msg.str());
    }
    return parse_root(j, source_name);
}

RunConfig parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError(path + ": cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str(), path);
}

}  // namespace linkplan::config
