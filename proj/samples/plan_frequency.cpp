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

// Learn an execution-time model from a measurement log, then pick the
// lowest frequency that finishes a batch within the deadline with 95%
// probability. The "measurements" here are simulated.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "satedge/satedge.hpp"

using namespace satedge;

int main() {
    const compute::Platform nano = compute::jetson_orin_nano();

    // One run of 200 images at each of 8 frequencies, cv = 0.1.
    numerics::Xoshiro256 rng(7);
    std::vector<estimation::ExecSample> log;
    for (int j = 0; j < 8; ++j) {
        const double f = nano.f_min_hz + (nano.f_max_hz - nano.f_min_hz) * j / 7.0;
        const double mean = compute::mean_exec_time(f, nano);
        for (int i = 0; i < 200; ++i) log.push_back({f, numerics::sample_gamma(100.0, mean / 100.0, rng), ""});
    }
    const auto model = estimation::fit_frequency_model(estimation::group_by_frequency(log), 3);
    const auto bsp = estimation::estimate_bsp_moments(log, nano);
    std::printf("estimated mu_C = %.4f, mu_sync = %.2f ms\n", bsp.mu_c, bsp.mu_sync_s * 1e3);

    // Uplink at 60 degrees elevation, median channel.
    channel::LinkParams ul;
    ul.noise_power_w = channel::dbm_to_watt(-176.31) * 180e3;
    ul.gain_sat = channel::db_to_linear(30.0);
    ul.pointing_loss = channel::db_to_linear(0.3);
    const channel::OfdmGrid grid;
    const double d = channel::slant_range({600e3, 60.0 * std::numbers::pi / 180.0});
    const double eps = channel::fbl_error_probability(channel::snr(ul, d, 0.0), grid.blocklength, grid.rate_bpcu);
    const double t_ul = channel::expected_uplink_delay(grid, eps, d);

    const auto budget = scheduler::processing_budget(0.5, t_ul, 0.0, 0.0);
    const std::int64_t n_img = 5;
    std::vector<double> freqs, variances;
    for (const auto& [f, fit] : model.per_frequency_fits()) {
        freqs.push_back(f);
        variances.push_back(fit.law.variance());
    }
    const auto moments = scheduler::MomentModel::from_platform(nano, numerics::polyfit(freqs, variances, 3));

    for (auto method : {scheduler::Method::gamma, scheduler::Method::cantelli}) {
        const auto p = scheduler::select_and_price(method, model, moments, model, budget, n_img, 0.95, nano);
        std::printf("%-8s f = %7.1f MHz  E = %6.3f J  P(on time) = %.4f\n", scheduler::to_string(method),
                    p.frequency_hz / 1e6, p.energy_j, p.predicted_reliability);
    }
}
