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

// Command-line front end. Exit codes: 0 success, 1 configuration or input
// error, 2 infeasible plan, 3 numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "satedge/harness.hpp"
#include "satedge/satedge.hpp"

namespace {

using namespace satedge;
using namespace satedge::harness;

constexpr int exit_config = 1;
constexpr int exit_infeasible = 2;
constexpr int exit_numerical = 3;

struct GlobalOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_dir;
    std::string format = "csv";
};

ScenarioConfig resolve(const GlobalOptions& g) {
    ScenarioConfig cfg = g.config_path.empty() ? ScenarioConfig{} : load_config(g.config_path);
    if (g.seed) cfg.experiment.seed = *g.seed;
    if (!g.out_dir.empty()) cfg.experiment.output_dir = g.out_dir;
    return cfg;
}

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

double parse_number(const std::string& text, const std::string& where) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(where, "not a number: '" + text + "'");
    }
}

std::vector<estimation::ExecSample> read_samples(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("", "cannot open sample file '" + path + "'");
    std::string line;
    if (!std::getline(in, line) || trim(line) != "image_id,frequency_hz,exec_time_s")
        throw ConfigError(path + ":1", "header must be image_id,frequency_hz,exec_time_s");
    std::vector<estimation::ExecSample> out;
    for (int lineno = 2; std::getline(in, line); ++lineno) {
        if (trim(line).empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(trim(cell));
        const std::string where = path + ":" + std::to_string(lineno);
        if (cells.size() != 3) throw ConfigError(where, "expected 3 fields");
        out.push_back({parse_number(cells[1], where), parse_number(cells[2], where), cells[0]});
    }
    if (out.empty()) throw ConfigError(path, "no samples");
    return out;
}

int cmd_fit(const ScenarioConfig& cfg, const std::string& input, const std::string& platform_name, int degree,
            const std::string& out_dir) {
    const auto samples = read_samples(input);
    const Platform platform = cfg.platform.spec(platform_name).build();
    const auto grouped = estimation::group_by_frequency(samples);
    const auto model = estimation::fit_frequency_model(grouped, degree);
    const auto bsp = estimation::estimate_bsp_moments(samples, platform);

    std::printf("samples            %zu over %zu frequencies\n", samples.size(), grouped.size());
    std::printf("bsp mu_C           %s\n", format_real(bsp.mu_c).c_str());
    std::printf("bsp mu_sync_s      %s\n", format_real(bsp.mu_sync_s).c_str());
    std::printf("R2 alpha / theta   %s / %s\n", format_real(model.r2_alpha()).c_str(),
                format_real(model.r2_theta()).c_str());
    auto coeffs = [](const numerics::Polynomial& p) {
        std::string s;
        for (double c : p.coefficients()) s += (s.empty() ? "" : " ") + format_real(c);
        return s;
    };
    std::printf("alpha(f) coeffs    %s\n", coeffs(model.alpha_poly()).c_str());
    std::printf("theta(f) coeffs    %s\n", coeffs(model.theta_poly()).c_str());

    std::string csv = "frequency_hz,n,shape,scale,mean_s,ks,moment_fallback,alpha_poly,theta_poly\n";
    std::printf("\n%-14s %6s %12s %12s %12s %10s\n", "frequency_hz", "n", "shape", "scale", "mean_s", "ks");
    for (const auto& [f, fit] : model.per_frequency_fits()) {
        const double ks = numerics::ks_statistic(grouped.at(f), fit.law);
        const auto n = static_cast<std::int64_t>(grouped.at(f).size());
        std::printf("%-14s %6lld %12s %12s %12s %10s%s\n", format_real(f).c_str(), static_cast<long long>(n),
                    format_real(fit.law.shape).c_str(), format_real(fit.law.scale).c_str(),
                    format_real(fit.law.mean()).c_str(), format_real(ks).c_str(),
                    fit.moment_fallback ? "  (moment fallback)" : "");
        csv_row(csv, f, n, fit.law.shape, fit.law.scale, fit.law.mean(), ks, fit.moment_fallback,
                model.alpha_poly()(f), model.theta_poly()(f));
    }
    if (!out_dir.empty()) std::printf("\nwrote %s\n", write_text_file(out_dir, "fit_report.csv", csv).c_str());
    return 0;
}

int cmd_plan(const ScenarioConfig& cfg, const std::string& platform_name, std::int64_t n_img, double elevation,
             std::optional<double> deadline) {
    const auto r = plan(cfg, platform_name, n_img, elevation, deadline.value_or(cfg.experiment.t_e2e_s));
    std::printf("platform           %s\n", r.platform.name.c_str());
    std::printf("n_img              %lld\n", static_cast<long long>(r.n_img));
    std::printf("elevation_deg      %s\n", format_real(elevation).c_str());
    std::printf("slant_range_m      %s\n", format_real(r.delays.distance_m).c_str());
    std::printf("uplink_snr_db      %s\n", format_real(channel::linear_to_db(r.delays.snr_ul)).c_str());
    std::printf("uplink_bler        %s\n", format_real(r.delays.eps_ul).c_str());
    std::printf("e_t_ul_s           %s\n", format_real(r.delays.e_t_ul_s).c_str());
    std::printf("t_isl_s            %s%s\n", format_real(r.delays.t_isl_s).c_str(), cfg.charges("isl") ? "" : " (not charged)");
    std::printf("t_dl_s             %s%s\n", format_real(r.delays.t_dl_s).c_str(), cfg.charges("dl") ? "" : " (not charged)");
    std::printf("t_e2e_s            %s\n", format_real(r.budget.t_e2e_s).c_str());
    std::printf("t_proc_s           %s\n\n", format_real(r.budget.t_proc_s()).c_str());
    std::printf("%-9s %-16s %-16s %-22s\n", "method", "frequency_hz", "energy_j", "predicted_reliability");
    auto row = [](const char* name, const std::optional<scheduler::PricedDecision>& d) {
        if (d)
            std::printf("%-9s %-16s %-16s %-22s\n", name, format_real(d->frequency_hz).c_str(),
                        format_real(d->energy_j).c_str(), format_real(d->predicted_reliability).c_str());
        else
            std::printf("%-9s %-16s %-16s %-22s\n", name, "infeasible", "-", "-");
    };
    row("gamma", r.gamma);
    row("cantelli", r.cantelli);
    if (!r.gamma) {
        std::fprintf(stderr, "plan: no frequency in [f_min, f_max] meets the reliability target\n");
        return exit_infeasible;
    }
    return 0;
}

void report(const std::filesystem::path& p) { std::printf("wrote %s\n", p.string().c_str()); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Energy-minimal GPU frequency selection for on-board satellite image processing"};
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_option("--config", g.config_path, "Scenario configuration (JSON)")->check(CLI::ExistingFile);
    app.add_option("--seed", g.seed, "Override the root seed");
    app.add_option("--out", g.out_dir, "Output directory (overrides experiment.output_dir)");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv"}));

    auto* fit = app.add_subcommand("fit", "Fit a frequency model to a sample log")->fallthrough();
    std::string fit_input;
    std::string fit_platform = "nano";
    std::optional<int> fit_degree;
    fit->add_option("input", fit_input, "CSV with header image_id,frequency_hz,exec_time_s")->required();
    fit->add_option("--platform", fit_platform, "Platform for the BSP moment estimates");
    fit->add_option("--degree", fit_degree, "Polynomial degree (default: experiment.poly_degree)");

    auto* fig3 = app.add_subcommand("fig3", "Deadline-miss probability against sample size")->fallthrough();
    auto* fig4 = app.add_subcommand("fig4", "Energy against number of images")->fallthrough();
    auto* fig5 = app.add_subcommand("fig5", "Energy against elevation")->fallthrough();

    auto* plan_cmd = app.add_subcommand("plan", "One-shot frequency decision")->fallthrough();
    std::int64_t plan_n_img = 1;
    double plan_elevation = 90.0;
    std::string plan_platform = "nano";
    std::optional<double> plan_deadline;
    plan_cmd->add_option("--n-img", plan_n_img, "Images in the request")->required()->check(CLI::PositiveNumber);
    plan_cmd->add_option("--elevation", plan_elevation, "Elevation angle in degrees")->check(CLI::Range(0.0, 90.0));
    plan_cmd->add_option("--platform", plan_platform, "Platform name");
    plan_cmd->add_option("--deadline", plan_deadline, "End-to-end deadline in seconds (default: experiment.t_e2e_s)");

    auto* validate_cmd = app.add_subcommand("validate-config", "Check and echo the resolved configuration")->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : exit_config;
    }

    try {
        const ScenarioConfig cfg = resolve(g);
        const std::filesystem::path out = cfg.experiment.output_dir;
        if (*fit) {
            return cmd_fit(cfg, fit_input, fit_platform, fit_degree.value_or(static_cast<int>(cfg.experiment.poly_degree)),
                           g.out_dir);
        }
        if (*fig3) {
            const auto r = run_fig3(cfg);
            report(write_text_file(out, "fig3_replicates.csv", fig3_csv(r)));
            report(write_text_file(out, "fig3_summary.csv", fig3_summary_csv(r)));
        } else if (*fig4) {
            report(write_text_file(out, "fig4.csv", fig4_csv(run_fig4(cfg))));
        } else if (*fig5) {
            report(write_text_file(out, "fig5.csv", fig5_csv(run_fig5(cfg))));
        } else if (*plan_cmd) {
            return cmd_plan(cfg, plan_platform, plan_n_img, plan_elevation, plan_deadline);
        } else if (*validate_cmd) {
            json doc = to_json(cfg);
            doc["derived"] = derived_json(cfg);
            std::cout << doc.dump(2) << '\n';
        }
        return 0;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return exit_config;
    } catch (const InfeasibleError& e) {
        std::fprintf(stderr, "infeasible: %s\n", e.what());
        return exit_infeasible;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return exit_numerical;
    }
}
