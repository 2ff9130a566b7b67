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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "satedge/harness/experiments.hpp"

using namespace satedge;
using namespace satedge::harness;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

ScenarioConfig small_fig3() {
    ScenarioConfig c;
    c.experiment.sample_sizes = {10, 100};
    c.experiment.replicates = 3;
    return c;
}

double recomputed_energy(const ScenarioConfig& cfg, const std::string& platform, double f, std::int64_t n) {
    const Platform p = cfg.platform.spec(platform).build();
    const GroundTruth gt = build_ground_truth(cfg, p);
    return compute::power(f, p) * compute::batch_law(gt.model().law_at(f), n).mean();
}

} // namespace

TEST_CASE("communication delays at zenith", "[experiments]") {
    const ScenarioConfig cfg;
    const auto d = comm_delays(cfg, 90.0);
    CHECK(d.distance_m == 600e3);
    CHECK(d.eps_ul < 1e-12);
    CHECK_THAT(d.e_t_ul_s, WithinAbs(5.7347e-3, 1e-7));
    CHECK_THAT(d.t_dl_s, WithinAbs(5.7347e-3, 1e-7));
    CHECK_THAT(d.t_isl_s, WithinAbs(96.3e-3, 0.05e-3));
    CHECK(d.e_t_ul_s + d.t_isl_s + d.t_dl_s < 0.110);

    const auto ul_only = latency_budget(cfg, d);
    CHECK_THAT(ul_only.t_proc_s(), WithinRel(0.5 - d.e_t_ul_s, 1e-15));
    ScenarioConfig all = cfg;
    all.experiment.budget_terms = {"ul", "isl", "dl"};
    CHECK_THAT(latency_budget(all, d).t_proc_s(), WithinRel(0.5 - d.e_t_ul_s - d.t_isl_s - d.t_dl_s, 1e-12));
}

TEST_CASE("low elevations eventually break the uplink", "[experiments]") {
    const ScenarioConfig cfg;
    double prev = 0;
    bool broke = false;
    for (double el : elevation_sweep(cfg)) {
        const auto d = comm_delays(cfg, el);
        CHECK(d.e_t_ul_s >= prev);
        prev = d.e_t_ul_s;
        broke = broke || d.e_t_ul_s >= cfg.experiment.t_e2e_s;
    }
    CHECK(broke);

    ScenarioConfig median = cfg;
    median.link.shadow_margin_sigmas = 0.0;
    for (double el : elevation_sweep(median)) CHECK(comm_delays(median, el).e_t_ul_s < 0.05);
}

TEST_CASE("elevation sweep", "[experiments]") {
    ScenarioConfig cfg;
    const auto s = elevation_sweep(cfg);
    REQUIRE(s.size() == 86);
    CHECK(s.front() == 90.0);
    CHECK(s.back() == 5.0);
    cfg.experiment.elevation_step_deg = 10;
    CHECK(elevation_sweep(cfg).back() == 10.0);
}

TEST_CASE("fig4 sweep", "[experiments]") {
    const ScenarioConfig cfg;
    const auto rows = run_fig4(cfg);
    std::map<std::pair<std::string, Method>, std::vector<Fig4Row>> by;
    for (const auto& r : rows) by[{r.platform, r.method}].push_back(r);

    for (const auto& name : cfg.platform.run) {
        const auto& g = by.at({name, Method::gamma});
        const auto& c = by.at({name, Method::cantelli});
        REQUIRE(g.size() == c.size());
        CHECK_FALSE(g.back().feasible);
        CHECK_FALSE(c.back().feasible);
        for (std::size_t i = 0; i < g.size(); ++i) {
            CHECK(g[i].n_img == static_cast<std::int64_t>(i + 1));
            if (i > 0 && g[i].feasible) CHECK(g[i].energy_j > g[i - 1].energy_j);
            if (i > 0 && c[i].feasible) CHECK(c[i].energy_j > c[i - 1].energy_j);
            if (c[i].feasible) {
                REQUIRE(g[i].feasible);
                CHECK(c[i].frequency_hz >= g[i].frequency_hz);
            }
            if (i > 0 && !g[i - 1].feasible) CHECK_FALSE(g[i].feasible);
            for (const auto* r : {&g[i], &c[i]})
                if (r->feasible)
                    CHECK_THAT(r->energy_j, WithinRel(recomputed_energy(cfg, name, r->frequency_hz, r->n_img), 1e-12));
        }
    }
}

TEST_CASE("fig4 energy gap widens with the batch size", "[experiments]") {
    const ScenarioConfig cfg;
    const auto rows = run_fig4(cfg);
    for (const auto& name : cfg.platform.run) {
        std::vector<double> ns, ratios;
        const Platform p = cfg.platform.spec(name).build();
        for (const auto& g : rows) {
            if (g.platform != name || g.method != Method::gamma || !g.feasible || g.frequency_hz <= p.f_min_hz) continue;
            for (const auto& c : rows)
                if (c.platform == name && c.method == Method::cantelli && c.n_img == g.n_img && c.feasible) {
                    ns.push_back(static_cast<double>(g.n_img));
                    ratios.push_back(c.energy_j / g.energy_j);
                }
        }
        REQUIRE(ns.size() >= 3);
        // Positive least-squares trend and a wider gap at the end than at the start.
        double mx = 0, my = 0;
        for (std::size_t i = 0; i < ns.size(); ++i) {
            mx += ns[i] / ns.size();
            my += ratios[i] / ns.size();
        }
        double sxy = 0;
        for (std::size_t i = 0; i < ns.size(); ++i) sxy += (ns[i] - mx) * (ratios[i] - my);
        CHECK(sxy > 0);
        CHECK(ratios.back() > ratios.front());
    }
}

TEST_CASE("fig5 sweep", "[experiments]") {
    const ScenarioConfig cfg;
    const auto rows = run_fig5(cfg);
    const auto fig4 = run_fig4(cfg);

    std::map<std::tuple<std::string, Method, std::int64_t>, std::vector<Fig5Row>> series;
    for (const auto& r : rows) series[{r.platform, r.method, r.n_img}].push_back(r);
    CHECK(series.size() == 2 * (cfg.experiment.fig5_n_img.at("nano").size() + cfg.experiment.fig5_n_img.at("agx").size()));

    for (const auto& [key, s] : series) {
        const auto& [platform, method, n] = key;
        REQUIRE(s.size() == elevation_sweep(cfg).size());
        CHECK(s.front().elevation_deg == 90.0);
        for (const auto& f4 : fig4)
            if (f4.platform == platform && f4.method == method && f4.n_img == n) {
                REQUIRE(f4.feasible == s.front().feasible);
                if (f4.feasible) CHECK_THAT(s.front().energy_j, WithinRel(f4.energy_j, 1e-3));
            }
        bool lost = false;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i].e_t_ul_s >= cfg.experiment.t_e2e_s) CHECK_FALSE(s[i].feasible);
            if (i > 0 && s[i].feasible && s[i - 1].feasible) CHECK(s[i].energy_j >= s[i - 1].energy_j);
            if (lost) CHECK_FALSE(s[i].feasible);
            lost = lost || (i > 0 && s[i - 1].feasible && !s[i].feasible);
            if (s[i].feasible)
                CHECK_THAT(s[i].energy_j, WithinRel(recomputed_energy(cfg, platform, s[i].frequency_hz, n), 1e-12));
        }
        CHECK_FALSE(s.back().feasible);
    }
}

TEST_CASE("fig3 study", "[experiments]") {
    const auto cfg = small_fig3();
    const auto r = run_fig3(cfg);
    CHECK(r.rows.size() == 2 * 2 * 3);
    CHECK(r.summary.size() == 4);
    CHECK(r.rows.front().platform == "nano");
    CHECK(r.rows.front().sample_size == 10);
    CHECK(r.rows.back().platform == "agx");
    const auto csv = fig3_csv(r);
    CHECK(csv.rfind("platform,N_s,k,f_hat_hz,p_miss,infeasible_flag\n", 0) == 0);
    CHECK(fig3_summary_csv(r).rfind("platform,N_s,mean,p05,p95,min,max\n", 0) == 0);

    ScenarioConfig missing = cfg;
    missing.experiment.fig3_n_img.erase("agx");
    CHECK_THROWS_AS(run_fig3(missing), ConfigError);
}

TEST_CASE("outputs are pure functions of the configuration", "[experiments]") {
    const auto cfg = small_fig3();
    CHECK(fig3_csv(run_fig3(cfg)) == fig3_csv(run_fig3(cfg)));
    CHECK(fig4_csv(run_fig4(cfg)) == fig4_csv(run_fig4(cfg)));
    CHECK(fig5_csv(run_fig5(cfg)) == fig5_csv(run_fig5(cfg)));

    ScenarioConfig other = cfg;
    other.experiment.seed += 1;
    CHECK(fig3_csv(run_fig3(other)) != fig3_csv(run_fig3(cfg)));

    // Platform streams do not depend on which other platforms run.
    ScenarioConfig agx_only = cfg;
    agx_only.platform.run = {"agx"};
    std::string a, b;
    for (const auto& row : run_fig3(agx_only).rows) csv_row(a, row.platform, row.sample_size, row.replicate, row.f_hat_hz);
    for (const auto& row : run_fig3(cfg).rows)
        if (row.platform == "agx") csv_row(b, row.platform, row.sample_size, row.replicate, row.f_hat_hz);
    CHECK(a == b);
}

TEST_CASE("plan compares both methods", "[experiments]") {
    const ScenarioConfig cfg;
    const auto p = plan(cfg, "nano", 4, 85.0, 0.5);
    REQUIRE(p.gamma);
    REQUIRE(p.cantelli);
    CHECK(p.gamma->frequency_hz <= p.cantelli->frequency_hz);
    CHECK(p.gamma->predicted_reliability >= 0.95);
    CHECK_FALSE(plan(cfg, "nano", 12, 85.0, 0.5).gamma);
    CHECK_FALSE(plan(cfg, "nano", 1, 5.0, 0.5).gamma);
    CHECK_THROWS_AS(plan(cfg, "tx2", 1, 85.0, 0.5), ConfigError);
}

TEST_CASE("CSV number formatting", "[experiments]") {
    CHECK(format_real(0.1) == "0.1");
    CHECK(format_real(1.0 / 3.0) == "0.333333333");
    CHECK(format_real(1.02e9) == "1.02e+09");
    CHECK(format_real(std::nan("")) == "nan");
    std::string s;
    csv_row(s, std::string("x"), std::int64_t{3}, 2.5, true);
    CHECK(s == "x,3,2.5,1\n");
}
