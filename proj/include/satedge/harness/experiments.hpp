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

// Experiment runners. Every output is a pure function of the configuration:
// each platform draws from its own stream derived from the root seed and the
// platform name, so adding or reordering platforms leaves other rows intact.

#pragma once

#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "satedge/channel.hpp"
#include "satedge/compute.hpp"
#include "satedge/errors.hpp"
#include "satedge/estimation.hpp"
#include "satedge/harness/config.hpp"
#include "satedge/harness/csv.hpp"
#include "satedge/harness/ground_truth.hpp"
#include "satedge/numerics/random.hpp"
#include "satedge/scheduler.hpp"

namespace satedge::harness {

using scheduler::Method;

inline constexpr std::uint64_t ground_truth_stream = 1;
inline constexpr std::uint64_t fig3_stream = 2;

/// FNV-1a of a platform name.
inline std::uint64_t name_hash(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t stream_seed(const ScenarioConfig& cfg, std::uint64_t stream, const std::string& platform) {
    return numerics::derive_seed(cfg.experiment.seed, {stream, name_hash(platform)});
}

inline GroundTruth build_ground_truth(const ScenarioConfig& cfg, const Platform& platform) {
    numerics::Xoshiro256 rng(stream_seed(cfg, ground_truth_stream, platform.name));
    return synthesize_ground_truth(platform, cfg.ground_truth_options(), rng);
}

/// Communication delays at one elevation in deterministic mode.
struct CommDelays {
    double elevation_deg = 90.0;
    double distance_m = 0.0;
    double snr_ul = 0.0;
    double eps_ul = 0.0;
    /// Infinite when the uplink cannot deliver (eps = 1).
    double e_t_ul_s = 0.0;
    double t_isl_s = 0.0;
    double t_dl_s = 0.0;
};

inline CommDelays comm_delays(const ScenarioConfig& cfg, double elevation_deg) {
    CommDelays out;
    out.elevation_deg = elevation_deg;
    const channel::LinkGeometry geom{cfg.link.altitude_m, elevation_deg * std::numbers::pi / 180.0,
                                     cfg.link.earth_radius_m};
    out.distance_m = channel::slant_range(geom);
    const auto grid = cfg.ofdm_grid();
    out.snr_ul = channel::snr(cfg.uplink(), out.distance_m, cfg.deterministic_shadow_db());
    out.eps_ul = channel::fbl_error_probability(out.snr_ul, static_cast<double>(grid.blocklength), grid.rate_bpcu);
    try {
        out.e_t_ul_s = channel::expected_uplink_delay(grid, out.eps_ul, out.distance_m);
    } catch (const InfeasibleLinkError&) {
        out.e_t_ul_s = std::numeric_limits<double>::infinity();
    }
    out.t_isl_s = channel::isl_round_trip(cfg.isl_path(), grid.blocklength);
    out.t_dl_s = channel::downlink_delay(grid, out.distance_m);
    return out;
}

/// Deadline decomposition charging only the configured budget terms.
inline scheduler::LatencyBudget latency_budget(const ScenarioConfig& cfg, const CommDelays& d,
                                               double t_e2e_s) {
    return {t_e2e_s, cfg.charges("ul") ? d.e_t_ul_s : 0.0, cfg.charges("isl") ? d.t_isl_s : 0.0,
            cfg.charges("dl") ? d.t_dl_s : 0.0};
}

inline scheduler::LatencyBudget latency_budget(const ScenarioConfig& cfg, const CommDelays& d) {
    return latency_budget(cfg, d, cfg.experiment.t_e2e_s);
}

/// One priced decision, or nothing if the method cannot meet the target.
inline std::optional<scheduler::PricedDecision> try_price(Method method, const GroundTruth& gt,
                                                          const scheduler::LatencyBudget& budget,
                                                          std::int64_t n_img, const ScenarioConfig& cfg) {
    if (!budget.feasible()) return std::nullopt;
    try {
        return scheduler::select_and_price(method, gt.model(), gt.moments(), gt.model(), budget, n_img,
                                           cfg.experiment.rho_th, gt.platform(), cfg.search());
    } catch (const InfeasibleError&) {
        return std::nullopt;
    }
}

inline constexpr Method all_methods[] = {Method::gamma, Method::cantelli};

// Fig. 3: deadline-miss probability of subset-trained schedulers.

struct Fig3Row {
    std::string platform;
    std::int64_t sample_size = 0;
    int replicate = 0;
    double f_hat_hz = 0.0;
    double p_miss = 0.0;
    bool infeasible = false;
};

struct Fig3SummaryRow {
    std::string platform;
    std::int64_t sample_size = 0;
    estimation::Summary p_miss;
    int infeasible_count = 0;
};

struct Fig3Result {
    std::vector<Fig3Row> rows;
    std::vector<Fig3SummaryRow> summary;
};

inline std::int64_t fig3_n_img(const ScenarioConfig& cfg, const std::string& platform) {
    const auto it = cfg.experiment.fig3_n_img.find(platform);
    if (it == cfg.experiment.fig3_n_img.end())
        throw ConfigError("experiment.fig3_n_img." + platform, "missing entry for a selected platform");
    return it->second;
}

inline Fig3Result run_fig3(const ScenarioConfig& cfg) {
    Fig3Result out;
    const auto delays = comm_delays(cfg, cfg.experiment.fig3_elevation_deg);
    const auto budget = latency_budget(cfg, delays);
    if (!budget.feasible())
        throw InfeasibleBudgetError("fig3: communication delays consume the whole deadline", budget.t_proc_s());
    for (const auto& platform : cfg.platforms()) {
        const GroundTruth gt = build_ground_truth(cfg, platform);
        estimation::StudyOptions opts;
        opts.sample_sizes = cfg.experiment.sample_sizes;
        opts.replicates = static_cast<int>(cfg.experiment.replicates);
        opts.t_proc_s = budget.t_proc_s();
        opts.n_img = fig3_n_img(cfg, platform.name);
        opts.rho_th = cfg.experiment.rho_th;
        opts.degree = static_cast<int>(cfg.experiment.poly_degree);
        opts.root_seed = stream_seed(cfg, fig3_stream, platform.name);
        opts.search = cfg.search();
        for (const auto& res : estimation::sample_size_study(gt.model(), gt, platform, opts)) {
            for (const auto& r : res.replicates)
                out.rows.push_back({platform.name, r.sample_size, r.replicate, r.f_hat_hz, r.p_miss, r.infeasible});
            out.summary.push_back({platform.name, res.sample_size, res.p_miss, res.infeasible_count});
        }
    }
    return out;
}

inline std::string fig3_csv(const Fig3Result& r) {
    std::string s = "platform,N_s,k,f_hat_hz,p_miss,infeasible_flag\n";
    for (const auto& row : r.rows)
        csv_row(s, row.platform, row.sample_size, row.replicate, row.f_hat_hz, row.p_miss, row.infeasible);
    return s;
}

inline std::string fig3_summary_csv(const Fig3Result& r) {
    std::string s = "platform,N_s,mean,p05,p95,min,max\n";
    for (const auto& row : r.summary)
        csv_row(s, row.platform, row.sample_size, row.p_miss.mean, row.p_miss.p05, row.p_miss.p95, row.p_miss.min,
                row.p_miss.max);
    return s;
}

// Fig. 4: energy against the number of requested images, near zenith.

struct Fig4Row {
    std::string platform;
    Method method = Method::gamma;
    std::int64_t n_img = 0;
    double frequency_hz = 0.0;
    double energy_j = 0.0;
    bool feasible = false;
};

inline std::vector<Fig4Row> run_fig4(const ScenarioConfig& cfg) {
    std::vector<Fig4Row> out;
    const auto delays = comm_delays(cfg, cfg.experiment.fig4_elevation_deg);
    const auto budget = latency_budget(cfg, delays);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (const auto& platform : cfg.platforms()) {
        const GroundTruth gt = build_ground_truth(cfg, platform);
        std::vector<Fig4Row> per_method[2];
        for (std::int64_t n = 1; n <= cfg.experiment.n_img_max; ++n) {
            bool any = false;
            for (int m = 0; m < 2; ++m) {
                const auto d = try_price(all_methods[m], gt, budget, n, cfg);
                per_method[m].push_back({platform.name, all_methods[m], n, d ? d->frequency_hz : nan,
                                         d ? d->energy_j : nan, d.has_value()});
                any = any || d.has_value();
            }
            if (!any) break;
        }
        for (auto& v : per_method) out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

inline std::string fig4_csv(const std::vector<Fig4Row>& rows) {
    std::string s = "platform,method,n_img,frequency_hz,energy_j,feasible\n";
    for (const auto& r : rows)
        csv_row(s, r.platform, scheduler::to_string(r.method), r.n_img, r.frequency_hz, r.energy_j, r.feasible);
    return s;
}

// Fig. 5: energy against elevation for fixed batch sizes.

struct Fig5Row {
    std::string platform;
    std::int64_t n_img = 0;
    double elevation_deg = 0.0;
    double e_t_ul_s = 0.0;
    double t_proc_s = 0.0;
    Method method = Method::gamma;
    double frequency_hz = 0.0;
    double energy_j = 0.0;
    bool feasible = false;
};

/// Elevations from max down to min in fixed steps; the minimum is included
/// when the step lands on it.
inline std::vector<double> elevation_sweep(const ScenarioConfig& cfg) {
    const auto& e = cfg.experiment;
    std::vector<double> out;
    for (std::int64_t k = 0;; ++k) {
        const double el = e.elevation_max_deg - static_cast<double>(k) * e.elevation_step_deg;
        if (el < e.elevation_min_deg - 1e-9 * e.elevation_step_deg) break;
        out.push_back(el);
    }
    return out;
}

inline std::vector<Fig5Row> run_fig5(const ScenarioConfig& cfg) {
    std::vector<Fig5Row> out;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<CommDelays> delays;
    for (double el : elevation_sweep(cfg)) delays.push_back(comm_delays(cfg, el));
    for (const auto& platform : cfg.platforms()) {
        const auto it = cfg.experiment.fig5_n_img.find(platform.name);
        if (it == cfg.experiment.fig5_n_img.end())
            throw ConfigError("experiment.fig5_n_img." + platform.name, "missing entry for a selected platform");
        const GroundTruth gt = build_ground_truth(cfg, platform);
        for (Method method : all_methods) {
            for (std::int64_t n : it->second) {
                for (const auto& d : delays) {
                    const auto budget = latency_budget(cfg, d);
                    const bool link_ok = d.e_t_ul_s < cfg.experiment.t_e2e_s;
                    const auto p = link_ok ? try_price(method, gt, budget, n, cfg) : std::nullopt;
                    out.push_back({platform.name, n, d.elevation_deg, d.e_t_ul_s, budget.t_proc_s(), method,
                                   p ? p->frequency_hz : nan, p ? p->energy_j : nan, p.has_value()});
                }
            }
        }
    }
    return out;
}

inline std::string fig5_csv(const std::vector<Fig5Row>& rows) {
    std::string s = "platform,n_img,elevation_deg,e_t_ul_s,t_proc_s,method,frequency_hz,energy_j,feasible\n";
    for (const auto& r : rows)
        csv_row(s, r.platform, r.n_img, r.elevation_deg, r.e_t_ul_s, r.t_proc_s, scheduler::to_string(r.method),
                r.frequency_hz, r.energy_j, r.feasible);
    return s;
}

// One-shot decision for a single request.

struct PlanResult {
    Platform platform;
    CommDelays delays;
    scheduler::LatencyBudget budget;
    std::int64_t n_img = 0;
    std::optional<scheduler::PricedDecision> gamma;
    std::optional<scheduler::PricedDecision> cantelli;
};

inline PlanResult plan(const ScenarioConfig& cfg, const std::string& platform_name, std::int64_t n_img,
                       double elevation_deg, double t_e2e_s) {
    if (n_img < 1) throw DomainError("plan: n_img must be >= 1");
    PlanResult out;
    out.platform = cfg.platform.spec(platform_name).build();
    out.delays = comm_delays(cfg, elevation_deg);
    out.budget = latency_budget(cfg, out.delays, t_e2e_s);
    out.n_img = n_img;
    const GroundTruth gt = build_ground_truth(cfg, out.platform);
    out.gamma = try_price(Method::gamma, gt, out.budget, n_img, cfg);
    out.cantelli = try_price(Method::cantelli, gt, out.budget, n_img, cfg);
    return out;
}

} // namespace satedge::harness
