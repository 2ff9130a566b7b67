// Copyright 2026 The satedge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Scenario configuration: one JSON document with sections platform, link,
// grid, isl and experiment. Every field has a default; unknown keys are
// rejected with their full key path.

#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "satedge/channel.hpp"
#include "satedge/compute.hpp"
#include "satedge/errors.hpp"
#include "satedge/harness/ground_truth.hpp"
#include "satedge/scheduler.hpp"

namespace satedge::harness {

using json = nlohmann::ordered_json;

struct PlatformSpec {
    std::string name;
    double n_cores = 0;
    double n_flops = 0;
    double f_max_hz = 0;
    double f_min_ratio = 0.3;
    double p_max_w = 0;
    double mu_c = 1;
    double mu_sync_s = 0;
    double mean_exec_at_fmax_s = 0;

    Platform build() const {
        return Platform::calibrated(name, n_cores, n_flops, f_max_hz, f_min_ratio * f_max_hz, p_max_w, mu_c,
                                    mu_sync_s, mean_exec_at_fmax_s);
    }
};

inline PlatformSpec nano_spec() { return {"nano", 1024, 2, 1.02e9, 0.3, 25.0, 1.071, 17.48e-3, 61.19e-3}; }
inline PlatformSpec agx_spec() { return {"agx", 2048, 2, 1.3e9, 0.3, 60.0, 1.122, 14.14e-3, 32.63e-3}; }

struct PlatformSection {
    std::vector<std::string> run{"nano", "agx"};
    PlatformSpec nano = nano_spec();
    PlatformSpec agx = agx_spec();

    const PlatformSpec& spec(const std::string& name) const {
        if (name == "nano") return nano;
        if (name == "agx") return agx;
        throw ConfigError("platform.run", "unknown platform '" + name + "'");
    }
};

struct LinkSection {
    double carrier_hz = 2e9;
    double bandwidth_hz = 180e3;
    double g_sat_dbi = 30.0;
    double g_ue_dbi = 0.0;
    double p_ul_w = 0.2;
    double p_dl_w = 75.0;
    double pointing_loss_db = 0.3;
    double noise_density_dbm_hz = -176.31;
    double shadow_sigma_db = 4.0;
    /// Deterministic-mode fade margin in units of shadow_sigma_db.
    double shadow_margin_sigmas = 2.0;
    double altitude_m = 600e3;
    double earth_radius_m = channel::earth_radius;
};

struct GridSection {
    std::int64_t subcarriers = 12;
    std::int64_t symbols_per_slot = 14;
    double scs_hz = 15e3;
    std::int64_t slots = 4;
    std::int64_t payload_bits = 1500;
    std::int64_t blocklength = 672;
    double rate_bpcu = 2.23;
    /// Unset selects one slot.
    std::optional<double> nack_delay_s;
    bool cyclic_prefix = false;
    std::int64_t max_attempts = 10000;
};

struct IslSection {
    std::int64_t n_sats = 12;
    std::int64_t n_hops = 4;
    /// Unset selects the ring chord.
    std::optional<double> hop_distance_m;
    double symbol_time_s = 1e-10;
    std::int64_t subcarriers = 1;
};

struct ExperimentSection {
    double t_e2e_s = 0.5;
    double rho_th = 0.95;
    std::vector<std::string> budget_terms{"ul"};
    std::int64_t n_img_max = 40;
    double elevation_max_deg = 90.0;
    double elevation_min_deg = 5.0;
    double elevation_step_deg = 1.0;
    double fig4_elevation_deg = 90.0;
    double fig3_elevation_deg = 90.0;
    std::map<std::string, std::int64_t> fig3_n_img{{"agx", 12}, {"nano", 7}};
    std::map<std::string, std::vector<std::int64_t>> fig5_n_img{{"agx", {4, 8, 12}}, {"nano", {2, 4, 6}}};
    std::vector<std::int64_t> sample_sizes{10, 30, 100, 300, 1000, 3000, 10000};
    std::int64_t replicates = 100;
    std::int64_t n_frequencies = 8;
    std::int64_t poly_degree = 3;
    double cv_at_f_min = 0.15;
    double cv_at_f_max = 0.20;
    std::int64_t n_images = 56;
    double multiplier_sigma = 0.10;
    std::int64_t grid_points = 2048;
    double rel_tolerance = 1e-6;
    std::uint64_t seed = 20260101;
    std::string output_dir = "out";
};

struct ScenarioConfig {
    PlatformSection platform;
    LinkSection link;
    GridSection grid;
    IslSection isl;
    ExperimentSection experiment;

    double symbol_time_s() const {
        const double base = 1.0 / grid.scs_hz;
        return grid.cyclic_prefix ? base * (2048.0 + 144.0) / 2048.0 : base;
    }

    channel::OfdmGrid ofdm_grid() const {
        channel::OfdmGrid g;
        g.subcarriers = grid.subcarriers;
        g.symbol_time_s = symbol_time_s();
        g.blocklength = grid.blocklength;
        g.rate_bpcu = grid.rate_bpcu;
        g.nack_delay_s = grid.nack_delay_s.value_or(static_cast<double>(grid.symbols_per_slot) * symbol_time_s());
        return g;
    }

    double noise_power_w() const {
        return channel::dbm_to_watt(link.noise_density_dbm_hz) * link.bandwidth_hz;
    }

    channel::LinkParams uplink() const { return link_params(link.p_ul_w); }
    channel::LinkParams downlink() const { return link_params(link.p_dl_w); }

    /// Shadowing used by the deterministic (single operating point) mode.
    double deterministic_shadow_db() const { return link.shadow_margin_sigmas * link.shadow_sigma_db; }

    double hop_distance_m() const {
        return isl.hop_distance_m ? *isl.hop_distance_m
                                  : channel::ring_chord(isl.n_sats, link.altitude_m, link.earth_radius_m);
    }

    channel::IslPath isl_path() const {
        channel::IslPath p;
        p.hop_distances_m.assign(static_cast<std::size_t>(isl.n_hops), hop_distance_m());
        p.symbol_time_s = isl.symbol_time_s;
        p.subcarriers = isl.subcarriers;
        return p;
    }

    std::vector<Platform> platforms() const {
        std::vector<Platform> out;
        for (const auto& name : platform.run) out.push_back(platform.spec(name).build());
        return out;
    }

    GroundTruthOptions ground_truth_options() const {
        GroundTruthOptions o;
        o.cv = CvProfile{experiment.cv_at_f_min, experiment.cv_at_f_max};
        o.n_images = static_cast<std::size_t>(experiment.n_images);
        o.multiplier_sigma = experiment.multiplier_sigma;
        o.n_frequencies = static_cast<std::size_t>(experiment.n_frequencies);
        o.degree = static_cast<int>(experiment.poly_degree);
        return o;
    }

    scheduler::SearchOptions search() const {
        return {static_cast<int>(experiment.grid_points), experiment.rel_tolerance};
    }

    bool charges(const std::string& term) const {
        for (const auto& t : experiment.budget_terms)
            if (t == term) return true;
        return false;
    }

private:
    channel::LinkParams link_params(double tx_power_w) const {
        channel::LinkParams p;
        p.carrier_hz = link.carrier_hz;
        p.tx_power_w = tx_power_w;
        p.gain_sat = channel::db_to_linear(link.g_sat_dbi);
        p.gain_ue = channel::db_to_linear(link.g_ue_dbi);
        p.pointing_loss = channel::db_to_linear(link.pointing_loss_db);
        p.noise_power_w = noise_power_w();
        p.shadow_sigma_db = link.shadow_sigma_db;
        return p;
    }
};

namespace detail {

/// Reads the keys of one JSON object, remembering which were consumed so
/// that the rest can be reported as unknown.
class ObjectReader {
public:
    ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) throw ConfigError(path_, "expected an object");
    }

    std::string child(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

    const json* find(const std::string& key) {
        seen_.insert(key);
        const auto it = j_.find(key);
        return it == j_.end() ? nullptr : &*it;
    }

    template <class T>
    void read(const std::string& key, T& out) {
        if (const json* v = find(key)) out = convert<T>(*v, child(key));
    }

    template <class F>
    void section(const std::string& key, F&& f) {
        if (const json* v = find(key)) {
            ObjectReader sub(*v, child(key));
            f(sub);
            sub.finish();
        }
    }

    void finish() const {
        for (const auto& [key, value] : j_.items())
            if (!seen_.count(key)) throw ConfigError(child(key), "unknown key");
    }

    template <class T>
    static T convert(const json& v, const std::string& path) {
        if constexpr (requires { typename T::value_type; requires std::is_same_v<T, std::optional<typename T::value_type>>; }) {
            if (v.is_null()) return std::nullopt;
            return convert<typename T::value_type>(v, path);
        } else if constexpr (std::is_same_v<T, bool>) {
            if (!v.is_boolean()) throw ConfigError(path, "expected a boolean");
            return v.get<bool>();
        } else if constexpr (std::is_same_v<T, std::string>) {
            if (!v.is_string()) throw ConfigError(path, "expected a string");
            return v.get<std::string>();
        } else if constexpr (std::is_same_v<T, std::uint64_t>) {
            if (!v.is_number_unsigned()) throw ConfigError(path, "expected a nonnegative integer");
            return v.get<std::uint64_t>();
        } else if constexpr (std::is_integral_v<T>) {
            if (!v.is_number_integer()) throw ConfigError(path, "expected an integer");
            return v.get<T>();
        } else if constexpr (std::is_floating_point_v<T>) {
            if (!v.is_number()) throw ConfigError(path, "expected a number");
            const double x = v.get<double>();
            if (!std::isfinite(x)) throw ConfigError(path, "expected a finite number");
            return x;
        } else if constexpr (requires { typename T::value_type; typename T::mapped_type; }) {
            if (!v.is_object()) throw ConfigError(path, "expected an object");
            T out;
            for (const auto& [k, e] : v.items()) out[k] = convert<typename T::mapped_type>(e, path + "." + k);
            return out;
        } else {
            if (!v.is_array()) throw ConfigError(path, "expected an array");
            T out;
            for (std::size_t i = 0; i < v.size(); ++i)
                out.push_back(convert<typename T::value_type>(v[i], path + "[" + std::to_string(i) + "]"));
            return out;
        }
    }

private:
    const json& j_;
    std::string path_;
    std::set<std::string> seen_;
};

inline void read_platform_spec(ObjectReader& r, PlatformSpec& p) {
    r.read("n_cores", p.n_cores);
    r.read("n_flops", p.n_flops);
    r.read("f_max_hz", p.f_max_hz);
    r.read("f_min_ratio", p.f_min_ratio);
    r.read("p_max_w", p.p_max_w);
    r.read("mu_c", p.mu_c);
    r.read("mu_sync_s", p.mu_sync_s);
    r.read("mean_exec_at_fmax_s", p.mean_exec_at_fmax_s);
}

inline void check(bool ok, const std::string& path, const std::string& what) {
    if (!ok) throw ConfigError(path, what);
}

} // namespace detail

/// Semantic checks beyond types. Throws ConfigError naming the key.
inline void validate(const ScenarioConfig& c) {
    using detail::check;
    check(!c.platform.run.empty(), "platform.run", "must name at least one platform");
    for (const auto& name : c.platform.run) {
        const auto& spec = c.platform.spec(name);
        const std::string at = "platform." + name;
        check(spec.n_cores > 0 && spec.n_flops > 0 && spec.p_max_w > 0, at, "cores, FLOPs and power must be positive");
        check(spec.f_max_hz > 0, at + ".f_max_hz", "must be positive");
        check(spec.f_min_ratio > 0 && spec.f_min_ratio < 1, at + ".f_min_ratio", "must lie in (0, 1)");
        check(spec.mu_c >= 1, at + ".mu_c", "must be >= 1");
        check(spec.mu_sync_s >= 0, at + ".mu_sync_s", "must be >= 0");
        check(spec.mean_exec_at_fmax_s > spec.mu_sync_s, at + ".mean_exec_at_fmax_s", "must exceed mu_sync_s");
    }
    const auto& l = c.link;
    check(l.carrier_hz > 0, "link.carrier_hz", "must be positive");
    check(l.bandwidth_hz > 0, "link.bandwidth_hz", "must be positive");
    check(l.p_ul_w > 0, "link.p_ul_w", "must be positive");
    check(l.p_dl_w > 0, "link.p_dl_w", "must be positive");
    check(l.shadow_sigma_db >= 0, "link.shadow_sigma_db", "must be >= 0");
    check(l.shadow_margin_sigmas >= 0, "link.shadow_margin_sigmas", "must be >= 0");
    check(l.altitude_m > 0, "link.altitude_m", "must be positive");
    check(l.earth_radius_m > 0, "link.earth_radius_m", "must be positive");
    const auto& g = c.grid;
    check(g.subcarriers >= 1, "grid.subcarriers", "must be >= 1");
    check(g.symbols_per_slot >= 1, "grid.symbols_per_slot", "must be >= 1");
    check(g.scs_hz > 0, "grid.scs_hz", "must be positive");
    check(g.slots >= 1, "grid.slots", "must be >= 1");
    check(g.payload_bits >= 1, "grid.payload_bits", "must be >= 1");
    check(g.blocklength >= 1, "grid.blocklength", "must be >= 1");
    check(g.rate_bpcu > 0, "grid.rate_bpcu", "must be positive");
    check(g.max_attempts >= 1, "grid.max_attempts", "must be >= 1");
    check(!g.nack_delay_s || *g.nack_delay_s >= 0, "grid.nack_delay_s", "must be >= 0");
    const auto& i = c.isl;
    check(i.n_sats >= 2, "isl.n_sats", "must be >= 2");
    check(i.n_hops >= 0, "isl.n_hops", "must be >= 0");
    check(!i.hop_distance_m || *i.hop_distance_m > 0, "isl.hop_distance_m", "must be positive");
    check(i.symbol_time_s > 0, "isl.symbol_time_s", "must be positive");
    check(i.subcarriers >= 1, "isl.subcarriers", "must be >= 1");
    const auto& e = c.experiment;
    check(e.t_e2e_s > 0, "experiment.t_e2e_s", "must be positive");
    check(e.rho_th > 0 && e.rho_th < 1, "experiment.rho_th", "must lie in (0, 1)");
    for (std::size_t k = 0; k < e.budget_terms.size(); ++k) {
        const auto& t = e.budget_terms[k];
        check(t == "ul" || t == "isl" || t == "dl", "experiment.budget_terms[" + std::to_string(k) + "]",
              "must be one of ul, isl, dl");
    }
    check(e.n_img_max >= 1, "experiment.n_img_max", "must be >= 1");
    auto elevation_ok = [](double deg) { return deg > 0 && deg <= 90; };
    check(elevation_ok(e.elevation_max_deg), "experiment.elevation_max_deg", "must lie in (0, 90]");
    check(elevation_ok(e.elevation_min_deg), "experiment.elevation_min_deg", "must lie in (0, 90]");
    check(e.elevation_min_deg <= e.elevation_max_deg, "experiment.elevation_min_deg", "must not exceed elevation_max_deg");
    check(e.elevation_step_deg > 0, "experiment.elevation_step_deg", "must be positive");
    check(elevation_ok(e.fig4_elevation_deg), "experiment.fig4_elevation_deg", "must lie in (0, 90]");
    check(elevation_ok(e.fig3_elevation_deg), "experiment.fig3_elevation_deg", "must lie in (0, 90]");
    for (const auto& [name, n] : e.fig3_n_img) {
        c.platform.spec(name);
        check(n >= 1, "experiment.fig3_n_img." + name, "must be >= 1");
    }
    for (const auto& [name, v] : e.fig5_n_img) {
        c.platform.spec(name);
        for (auto n : v) check(n >= 1, "experiment.fig5_n_img." + name, "entries must be >= 1");
    }
    for (auto n : e.sample_sizes) check(n >= 2, "experiment.sample_sizes", "entries must be >= 2");
    check(e.replicates >= 1, "experiment.replicates", "must be >= 1");
    check(e.poly_degree >= 0, "experiment.poly_degree", "must be >= 0");
    check(e.n_frequencies >= e.poly_degree + 1 && e.n_frequencies >= 2, "experiment.n_frequencies",
          "must be >= max(2, poly_degree + 1)");
    check(e.cv_at_f_min > 0, "experiment.cv_at_f_min", "must be positive");
    check(e.cv_at_f_max > 0, "experiment.cv_at_f_max", "must be positive");
    check(e.n_images >= 1, "experiment.n_images", "must be >= 1");
    check(e.multiplier_sigma >= 0, "experiment.multiplier_sigma", "must be >= 0");
    check(e.grid_points >= 2, "experiment.grid_points", "must be >= 2");
    check(e.rel_tolerance > 0 && e.rel_tolerance < 1, "experiment.rel_tolerance", "must lie in (0, 1)");
}

inline ScenarioConfig parse_config(const json& doc) {
    ScenarioConfig c;
    detail::ObjectReader root(doc, "");
    root.section("platform", [&](detail::ObjectReader& r) {
        r.read("run", c.platform.run);
        r.section("nano", [&](detail::ObjectReader& p) { detail::read_platform_spec(p, c.platform.nano); });
        r.section("agx", [&](detail::ObjectReader& p) { detail::read_platform_spec(p, c.platform.agx); });
    });
    root.section("link", [&](detail::ObjectReader& r) {
        auto& l = c.link;
        r.read("carrier_hz", l.carrier_hz);
        r.read("bandwidth_hz", l.bandwidth_hz);
        r.read("g_sat_dbi", l.g_sat_dbi);
        r.read("g_ue_dbi", l.g_ue_dbi);
        r.read("p_ul_w", l.p_ul_w);
        r.read("p_dl_w", l.p_dl_w);
        r.read("pointing_loss_db", l.pointing_loss_db);
        r.read("noise_density_dbm_hz", l.noise_density_dbm_hz);
        r.read("shadow_sigma_db", l.shadow_sigma_db);
        r.read("shadow_margin_sigmas", l.shadow_margin_sigmas);
        r.read("altitude_m", l.altitude_m);
        r.read("earth_radius_m", l.earth_radius_m);
    });
    root.section("grid", [&](detail::ObjectReader& r) {
        auto& g = c.grid;
        r.read("subcarriers", g.subcarriers);
        r.read("symbols_per_slot", g.symbols_per_slot);
        r.read("scs_hz", g.scs_hz);
        r.read("slots", g.slots);
        r.read("payload_bits", g.payload_bits);
        r.read("blocklength", g.blocklength);
        r.read("rate_bpcu", g.rate_bpcu);
        r.read("nack_delay_s", g.nack_delay_s);
        r.read("cyclic_prefix", g.cyclic_prefix);
        r.read("max_attempts", g.max_attempts);
    });
    root.section("isl", [&](detail::ObjectReader& r) {
        auto& i = c.isl;
        r.read("n_sats", i.n_sats);
        r.read("n_hops", i.n_hops);
        r.read("hop_distance_m", i.hop_distance_m);
        r.read("symbol_time_s", i.symbol_time_s);
        r.read("subcarriers", i.subcarriers);
    });
    root.section("experiment", [&](detail::ObjectReader& r) {
        auto& e = c.experiment;
        r.read("t_e2e_s", e.t_e2e_s);
        r.read("rho_th", e.rho_th);
        r.read("budget_terms", e.budget_terms);
        r.read("n_img_max", e.n_img_max);
        r.read("elevation_max_deg", e.elevation_max_deg);
        r.read("elevation_min_deg", e.elevation_min_deg);
        r.read("elevation_step_deg", e.elevation_step_deg);
        r.read("fig4_elevation_deg", e.fig4_elevation_deg);
        r.read("fig3_elevation_deg", e.fig3_elevation_deg);
        r.read("fig3_n_img", e.fig3_n_img);
        r.read("fig5_n_img", e.fig5_n_img);
        r.read("sample_sizes", e.sample_sizes);
        r.read("replicates", e.replicates);
        r.read("n_frequencies", e.n_frequencies);
        r.read("poly_degree", e.poly_degree);
        r.read("cv_at_f_min", e.cv_at_f_min);
        r.read("cv_at_f_max", e.cv_at_f_max);
        r.read("n_images", e.n_images);
        r.read("multiplier_sigma", e.multiplier_sigma);
        r.read("grid_points", e.grid_points);
        r.read("rel_tolerance", e.rel_tolerance);
        r.read("seed", e.seed);
        r.read("output_dir", e.output_dir);
    });
    root.finish();
    validate(c);
    return c;
}

inline ScenarioConfig parse_config_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("", std::string("malformed JSON: ") + e.what());
    }
    return parse_config(doc);
}

inline ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("", "cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

inline json platform_json(const PlatformSpec& p) {
    return json{{"n_cores", p.n_cores},     {"n_flops", p.n_flops},     {"f_max_hz", p.f_max_hz},
                {"f_min_ratio", p.f_min_ratio}, {"p_max_w", p.p_max_w}, {"mu_c", p.mu_c},
                {"mu_sync_s", p.mu_sync_s}, {"mean_exec_at_fmax_s", p.mean_exec_at_fmax_s}};
}

inline json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

/// The fully resolved configuration, in the same schema `parse_config` reads.
inline json to_json(const ScenarioConfig& c) {
    const auto& l = c.link;
    const auto& g = c.grid;
    const auto& i = c.isl;
    const auto& e = c.experiment;
    json out;
    out["platform"] = {{"run", c.platform.run}, {"nano", platform_json(c.platform.nano)},
                       {"agx", platform_json(c.platform.agx)}};
    out["link"] = {{"carrier_hz", l.carrier_hz},
                   {"bandwidth_hz", l.bandwidth_hz},
                   {"g_sat_dbi", l.g_sat_dbi},
                   {"g_ue_dbi", l.g_ue_dbi},
                   {"p_ul_w", l.p_ul_w},
                   {"p_dl_w", l.p_dl_w},
                   {"pointing_loss_db", l.pointing_loss_db},
                   {"noise_density_dbm_hz", l.noise_density_dbm_hz},
                   {"shadow_sigma_db", l.shadow_sigma_db},
                   {"shadow_margin_sigmas", l.shadow_margin_sigmas},
                   {"altitude_m", l.altitude_m},
                   {"earth_radius_m", l.earth_radius_m}};
    out["grid"] = {{"subcarriers", g.subcarriers}, {"symbols_per_slot", g.symbols_per_slot},
                   {"scs_hz", g.scs_hz},           {"slots", g.slots},
                   {"payload_bits", g.payload_bits}, {"blocklength", g.blocklength},
                   {"rate_bpcu", g.rate_bpcu},     {"nack_delay_s", optional_json(g.nack_delay_s)},
                   {"cyclic_prefix", g.cyclic_prefix}, {"max_attempts", g.max_attempts}};
    out["isl"] = {{"n_sats", i.n_sats},
                  {"n_hops", i.n_hops},
                  {"hop_distance_m", optional_json(i.hop_distance_m)},
                  {"symbol_time_s", i.symbol_time_s},
                  {"subcarriers", i.subcarriers}};
    out["experiment"] = {{"t_e2e_s", e.t_e2e_s},
                         {"rho_th", e.rho_th},
                         {"budget_terms", e.budget_terms},
                         {"n_img_max", e.n_img_max},
                         {"elevation_max_deg", e.elevation_max_deg},
                         {"elevation_min_deg", e.elevation_min_deg},
                         {"elevation_step_deg", e.elevation_step_deg},
                         {"fig4_elevation_deg", e.fig4_elevation_deg},
                         {"fig3_elevation_deg", e.fig3_elevation_deg},
                         {"fig3_n_img", e.fig3_n_img},
                         {"fig5_n_img", e.fig5_n_img},
                         {"sample_sizes", e.sample_sizes},
                         {"replicates", e.replicates},
                         {"n_frequencies", e.n_frequencies},
                         {"poly_degree", e.poly_degree},
                         {"cv_at_f_min", e.cv_at_f_min},
                         {"cv_at_f_max", e.cv_at_f_max},
                         {"n_images", e.n_images},
                         {"multiplier_sigma", e.multiplier_sigma},
                         {"grid_points", e.grid_points},
                         {"rel_tolerance", e.rel_tolerance},
                         {"seed", e.seed},
                         {"output_dir", e.output_dir}};
    return out;
}

/// Quantities computed from the configuration, for display.
inline json derived_json(const ScenarioConfig& c) {
    const auto grid = c.ofdm_grid();
    json d;
    d["symbol_time_s"] = grid.symbol_time_s;
    d["nack_delay_s"] = grid.nack_delay_s;
    d["airtime_s"] = grid.airtime_s();
    d["grid_channel_uses"] = c.grid.slots * c.grid.subcarriers * c.grid.symbols_per_slot;
    d["noise_power_dbm"] = channel::linear_to_db(c.noise_power_w()) + 30.0;
    d["deterministic_shadow_db"] = c.deterministic_shadow_db();
    d["isl_hop_distance_m"] = c.hop_distance_m();
    json plats = json::object();
    for (const auto& p : c.platforms())
        plats[p.name] = {{"f_min_hz", p.f_min_hz},
                         {"work_flops", p.work_flops},
                         {"mean_exec_at_fmax_s", compute::mean_exec_time(p.f_max_hz, p)}};
    d["platforms"] = plats;
    return d;
}

} // namespace satedge::harness
