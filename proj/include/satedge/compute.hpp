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

// On-board processing model: cubic DVFS power, bulk-synchronous mean
// execution time, Gamma batch closure and expected processing energy.

#pragma once

#include <cmath>
#include <cstdint>
#include <concepts>
#include <string>
#include <utility>

#include "satedge/errors.hpp"
#include "satedge/numerics/gamma.hpp"

namespace satedge::compute {

using numerics::GammaLaw;

/// Anything that yields the per-image execution-time law at a frequency.
template <class M>
concept ExecTimeModel = requires(const M& m, double f_hz) {
    { m.law_at(f_hz) } -> std::convertible_to<GammaLaw>;
};

/// Hardware constants of one compute node.
struct Platform {
    std::string name;
    double n_cores = 0;
    double n_flops = 0;      // FLOPs per cycle per core
    double f_max_hz = 0;
    double f_min_hz = 0;
    double p_max_w = 0;
    double mu_c = 1;         // mean processing inefficiency, >= 1
    double mu_sync_s = 0;    // mean synchronization overhead
    double work_flops = 0;   // algorithmic work per image

    /// Throughput denominator N_cores * N_FLOPs.
    double flops_per_cycle() const noexcept { return n_cores * n_flops; }

    void validate() const {
        if (!(n_cores > 0 && n_flops > 0 && p_max_w > 0 && work_flops > 0 && mu_sync_s >= 0))
            throw DomainError("Platform " + name + ": cores, FLOPs, power and work must be positive");
        if (!(f_min_hz > 0 && f_min_hz < f_max_hz))
            throw DomainError("Platform " + name + ": need 0 < f_min < f_max");
        if (!(mu_c >= 1.0)) throw DomainError("Platform " + name + ": mu_C must be >= 1");
    }

    bool in_range(double f_hz) const noexcept {
        const double slack = 1e-9 * f_max_hz;
        return f_hz >= f_min_hz - slack && f_hz <= f_max_hz + slack;
    }

    /// Builds a platform whose work W is fixed so that the mean execution
    /// time at f_max equals `mean_exec_at_fmax_s`.
    static Platform calibrated(std::string name, double n_cores, double n_flops, double f_max_hz,
                               double f_min_hz, double p_max_w, double mu_c, double mu_sync_s,
                               double mean_exec_at_fmax_s) {
        Platform p;
        p.name = std::move(name);
        p.n_cores = n_cores;
        p.n_flops = n_flops;
        p.f_max_hz = f_max_hz;
        p.f_min_hz = f_min_hz;
        p.p_max_w = p_max_w;
        p.mu_c = mu_c;
        p.mu_sync_s = mu_sync_s;
        if (!(mean_exec_at_fmax_s > mu_sync_s))
            throw DomainError("Platform " + p.name + ": mean execution time must exceed mu_sync");
        p.work_flops = (mean_exec_at_fmax_s - mu_sync_s) * n_cores * n_flops * f_max_hz / mu_c;
        p.validate();
        return p;
    }
};

/// Jetson Orin Nano: 1024 cores, 1.02 GHz, 25 W, 61.19 ms per image at f_max.
inline Platform jetson_orin_nano(double f_min_ratio = 0.3) {
    return Platform::calibrated("nano", 1024, 2, 1.02e9, f_min_ratio * 1.02e9, 25.0, 1.071, 17.48e-3, 61.19e-3);
}

/// Jetson AGX Orin: 2048 cores, 1.3 GHz, 60 W, 32.63 ms per image at f_max.
inline Platform jetson_agx_orin(double f_min_ratio = 0.3) {
    return Platform::calibrated("agx", 2048, 2, 1.3e9, f_min_ratio * 1.3e9, 60.0, 1.122, 14.14e-3, 32.63e-3);
}

namespace detail {
inline void check_frequency(double f_hz, const Platform& platform, const char* op) {
    if (!platform.in_range(f_hz))
        throw DomainError(std::string(op) + ": frequency outside [f_min, f_max] of platform " + platform.name);
}
} // namespace detail

/// Cubic DVFS power P_max (f / f_max)^3.
inline double power(double f_hz, const Platform& platform) {
    detail::check_frequency(f_hz, platform, "power");
    const double r = f_hz / platform.f_max_hz;
    return platform.p_max_w * r * r * r;
}

/// Mean per-image execution time mu_C W / (N_cores N_FLOPs f) + mu_sync.
inline double mean_exec_time(double f_hz, const Platform& platform) {
    detail::check_frequency(f_hz, platform, "mean_exec_time");
    return platform.mu_c * platform.work_flops / (platform.flops_per_cycle() * f_hz) + platform.mu_sync_s;
}

/// Law of the sum of n_img i.i.d. executions: Gamma(n_img alpha, theta).
inline GammaLaw batch_law(const GammaLaw& per_image, std::int64_t n_img) {
    if (n_img < 1) throw DomainError("batch_law: n_img must be >= 1");
    numerics::check_gamma_params(per_image.shape, per_image.scale);
    return GammaLaw{static_cast<double>(n_img) * per_image.shape, per_image.scale};
}

/// Expected processing energy P(f) E[T] for a batch with law `law`.
inline double energy(double f_hz, const Platform& platform, const GammaLaw& law) {
    return power(f_hz, platform) * law.mean();
}

} // namespace satedge::compute
