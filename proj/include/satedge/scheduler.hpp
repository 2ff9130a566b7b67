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

// Frequency selection under a probabilistic processing deadline, with the
// exact Gamma quantile constraint and the moment-only Cantelli benchmark.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "satedge/compute.hpp"
#include "satedge/errors.hpp"
#include "satedge/numerics/gamma.hpp"
#include "satedge/numerics/polynomial.hpp"

namespace satedge::scheduler {

using compute::GammaLaw;
using compute::Platform;

/// End-to-end deadline split into communication legs and the remaining
/// processing budget.
struct LatencyBudget {
    double t_e2e_s = 0.5;
    double t_ul_s = 0.0;
    double t_isl_s = 0.0;
    double t_dl_s = 0.0;

    double t_proc_s() const noexcept { return t_e2e_s - t_ul_s - t_isl_s - t_dl_s; }
    bool feasible() const noexcept { return t_proc_s() > 0.0; }
};

inline LatencyBudget processing_budget(double t_e2e_s, double t_ul_s, double t_isl_s, double t_dl_s) {
    for (double v : {t_e2e_s, t_ul_s, t_isl_s, t_dl_s}) {
        if (!(v >= 0.0) || std::isnan(v)) throw DomainError("processing_budget: delays must be nonnegative");
    }
    LatencyBudget b{t_e2e_s, t_ul_s, t_isl_s, t_dl_s};
    if (!b.feasible())
        throw InfeasibleBudgetError("processing_budget: communication delays consume the whole deadline",
                                    b.t_proc_s());
    return b;
}

/// First two moments of the per-image execution time: the BSP mean and a
/// polynomial fit of the per-frequency variance.
struct MomentModel {
    double mu_c = 1.0;
    double mu_sync_s = 0.0;
    double work_flops = 0.0;
    double flops_per_cycle = 1.0;
    numerics::Polynomial variance_poly;

    static MomentModel from_platform(const Platform& platform, numerics::Polynomial variance_poly) {
        return MomentModel{platform.mu_c, platform.mu_sync_s, platform.work_flops, platform.flops_per_cycle(),
                           std::move(variance_poly)};
    }

    double mean(double f_hz) const noexcept { return mu_c * work_flops / (flops_per_cycle * f_hz) + mu_sync_s; }
    /// Per-image variance, clamped at zero where the fitted polynomial dips below.
    double variance(double f_hz) const noexcept { return std::max(0.0, variance_poly(f_hz)); }
};

struct SearchOptions {
    int grid_points = 2048;
    double rel_tolerance = 1e-6;
};

struct FrequencyDecision {
    double frequency_hz = 0.0;
    /// A feasible grid cell was followed by an infeasible one: the
    /// constraint is not monotone in frequency over [f_min, f_max].
    bool non_monotone = false;
};

namespace detail {

struct Crossing {
    bool found = false;
    double frequency_hz = 0.0;
    bool non_monotone = false;
};

// Lowest frequency in [lo, hi] satisfying `ok`: grid pre-scan for the first
// feasible cell, then bisection inside that cell.
inline Crossing lowest_feasible(double lo, double hi, const SearchOptions& opts,
                                const std::function<bool(double)>& ok) {
    const int n = std::max(2, opts.grid_points);
    auto at = [&](int i) { return i == n - 1 ? hi : lo + (hi - lo) * static_cast<double>(i) / (n - 1); };
    Crossing out;
    int first = -1;
    bool seen_gap = false;
    for (int i = 0; i < n; ++i) {
        const bool feasible = ok(at(i));
        if (feasible && first < 0) first = i;
        if (!feasible && first >= 0) seen_gap = true;
    }
    if (first < 0) return out;
    out.found = true;
    out.non_monotone = seen_gap;
    if (first == 0) {
        out.frequency_hz = lo;
        return out;
    }
    double a = at(first - 1); // infeasible
    double b = at(first);     // feasible
    while (b - a > opts.rel_tolerance * b) {
        const double mid = 0.5 * (a + b);
        (ok(mid) ? b : a) = mid;
    }
    out.frequency_hz = b;
    return out;
}

inline void check_common(const LatencyBudget& budget, std::int64_t n_img, double rho_th, const Platform& platform) {
    if (!(rho_th > 0.0 && rho_th < 1.0)) throw DomainError("scheduler: rho_th must lie in (0, 1)");
    if (n_img < 1) throw DomainError("scheduler: n_img must be >= 1");
    if (!budget.feasible())
        throw InfeasibleBudgetError("scheduler: processing budget is not positive", budget.t_proc_s());
    platform.validate();
}

} // namespace detail

/// Probability that a batch of n_img images finishes within t_proc at f.
template <compute::ExecTimeModel M>
double batch_reliability(const M& model, double f_hz, double t_proc_s, std::int64_t n_img) {
    const GammaLaw law = compute::batch_law(model.law_at(f_hz), n_img);
    return law.cdf(t_proc_s);
}

/// Smallest f in [f_min, f_max] with F_Gamma(t_proc; n_img alpha(f), theta(f)) >= rho_th.
template <compute::ExecTimeModel M>
FrequencyDecision optimal_frequency(const M& model, const LatencyBudget& budget, std::int64_t n_img, double rho_th,
                                    const Platform& platform, const SearchOptions& opts = {}) {
    detail::check_common(budget, n_img, rho_th, platform);
    const double t_proc = budget.t_proc_s();
    auto ok = [&](double f) {
        try {
            return batch_reliability(model, f, t_proc, n_img) >= rho_th;
        } catch (const DomainError&) {
            return false; // model yields an invalid law here
        }
    };
    const auto c = detail::lowest_feasible(platform.f_min_hz, platform.f_max_hz, opts, ok);
    if (!c.found) {
        double achievable = 0.0;
        try {
            achievable = batch_reliability(model, platform.f_max_hz, t_proc, n_img);
        } catch (const DomainError&) {
        }
        throw InfeasibleError("optimal_frequency: reliability target unreachable even at f_max", achievable);
    }
    return {c.frequency_hz, c.non_monotone};
}

/// Cantelli upper bound on P(T_batch >= t); returns 1 outside the bound's
/// validity region t > n_img E[T].
inline double cantelli_miss_bound(const MomentModel& moments, double f_hz, double t_proc_s, std::int64_t n_img) {
    const double n = static_cast<double>(n_img);
    const double gap = t_proc_s - n * moments.mean(f_hz);
    if (!(gap > 0.0)) return 1.0;
    const double batch_var = n * moments.variance(f_hz);
    return batch_var / (batch_var + gap * gap);
}

/// Smallest f whose Cantelli miss bound is at most 1 - rho_th, by the same
/// grid + bisection scheme as optimal_frequency.
inline FrequencyDecision cantelli_frequency(const MomentModel& moments, const LatencyBudget& budget, std::int64_t n_img,
                                            double rho_th, const Platform& platform, const SearchOptions& opts = {}) {
    detail::check_common(budget, n_img, rho_th, platform);
    const double t_proc = budget.t_proc_s();
    auto ok = [&](double f) { return cantelli_miss_bound(moments, f, t_proc, n_img) <= 1.0 - rho_th; };
    const auto c = detail::lowest_feasible(platform.f_min_hz, platform.f_max_hz, opts, ok);
    if (!c.found)
        throw InfeasibleError("cantelli_frequency: bound cannot reach the target even at f_max",
                              1.0 - cantelli_miss_bound(moments, platform.f_max_hz, t_proc, n_img));
    return {c.frequency_hz, c.non_monotone};
}

/// Closed-form Cantelli frequency bound iterated as a fixed point in
/// sigma(f). Cross-check for cantelli_frequency; returns f_min when the bound
/// falls below it.
inline double cantelli_fixed_point_frequency(const MomentModel& moments, const LatencyBudget& budget,
                                             std::int64_t n_img, double rho_th, const Platform& platform,
                                             int max_iterations = 200) {
    detail::check_common(budget, n_img, rho_th, platform);
    const double n = static_cast<double>(n_img);
    const double t = budget.t_proc_s();
    const double k = std::sqrt(n * rho_th / (1.0 - rho_th));
    const double numer = n * moments.mu_c * moments.work_flops / moments.flops_per_cycle;
    double f = platform.f_max_hz;
    for (int i = 0; i < max_iterations; ++i) {
        const double denom = t - n * moments.mu_sync_s - std::sqrt(moments.variance(f)) * k;
        if (!(denom > 0.0)) throw InfeasibleError("cantelli_fixed_point_frequency: bound has no positive solution");
        const double next = std::max(numer / denom, platform.f_min_hz);
        if (next > platform.f_max_hz * (1.0 + 1e-12))
            throw InfeasibleError("cantelli_fixed_point_frequency: bound exceeds f_max");
        if (std::abs(next - f) <= 1e-12 * f) return next;
        f = next;
    }
    return f;
}

enum class Method { gamma, cantelli };

inline const char* to_string(Method m) { return m == Method::gamma ? "gamma" : "cantelli"; }

struct PricedDecision {
    Method method = Method::gamma;
    double frequency_hz = 0.0;
    double energy_j = 0.0;
    /// Reliability of the decision under the ground-truth law.
    double predicted_reliability = 0.0;
    bool non_monotone = false;
};

/// Chooses a frequency with `method` and prices it against `truth`: energy
/// of the true batch law at that frequency and its true reliability.
template <compute::ExecTimeModel Fitted, compute::ExecTimeModel Truth>
PricedDecision select_and_price(Method method, const Fitted& model, const MomentModel& moments, const Truth& truth,
                                const LatencyBudget& budget, std::int64_t n_img, double rho_th,
                                const Platform& platform, const SearchOptions& opts = {}) {
    const FrequencyDecision d = method == Method::gamma
                                    ? optimal_frequency(model, budget, n_img, rho_th, platform, opts)
                                    : cantelli_frequency(moments, budget, n_img, rho_th, platform, opts);
    const GammaLaw batch = compute::batch_law(truth.law_at(d.frequency_hz), n_img);
    PricedDecision out;
    out.method = method;
    out.frequency_hz = d.frequency_hz;
    out.energy_j = compute::energy(d.frequency_hz, platform, batch);
    out.predicted_reliability = batch.cdf(budget.t_proc_s());
    out.non_monotone = d.non_monotone;
    return out;
}

} // namespace satedge::scheduler
