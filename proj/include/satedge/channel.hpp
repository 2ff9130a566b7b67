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

// Ground-to-satellite radio link and inter-satellite path latency: free-space
// link budget, finite-blocklength block error probability, ARQ uplink delay
// and the deterministic downlink / ISL delays.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "satedge/errors.hpp"
#include "satedge/numerics/random.hpp"
#include "satedge/numerics/special.hpp"

namespace satedge::channel {

inline constexpr double speed_of_light = 299'792'458.0; // m/s
inline constexpr double earth_radius = 6371e3;          // m

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }
inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

struct LinkGeometry {
    double altitude_m = 600e3;
    double elevation_rad = std::numbers::pi / 2;
    double earth_radius_m = earth_radius;
};

/// UE-to-satellite distance on a spherical Earth.
inline double slant_range(const LinkGeometry& geom) {
    const double el = geom.elevation_rad;
    if (!(el > 0.0) || el > std::numbers::pi / 2 + 1e-12)
        throw DomainError("slant_range: elevation must lie in (0, pi/2]");
    if (!(geom.altitude_m > 0.0) || !(geom.earth_radius_m > 0.0))
        throw DomainError("slant_range: altitude and earth radius must be positive");
    const double r = geom.earth_radius_m;
    const double h = geom.altitude_m;
    const double s = std::sin(el);
    if (el == std::numbers::pi / 2) return h;
    return std::sqrt(r * r * s * s + 2.0 * r * h + h * h) - r * s;
}

struct LinkParams {
    double carrier_hz = 2e9;
    double tx_power_w = 0.2;
    double gain_sat = 1000.0;       // linear
    double gain_ue = 1.0;           // linear
    double pointing_loss = 1.0715;  // linear (>= 1 attenuates)
    double noise_power_w = 0.0;
    double shadow_sigma_db = 4.0;

    void validate() const {
        if (!(carrier_hz > 0 && tx_power_w > 0 && gain_sat > 0 && gain_ue > 0 && pointing_loss > 0 &&
              noise_power_w > 0))
            throw DomainError("LinkParams: powers, gains and losses must be strictly positive");
        if (!(shadow_sigma_db >= 0)) throw DomainError("LinkParams: shadow sigma must be nonnegative");
    }
};

/// Free-space path loss (4 pi d f / c)^2, linear.
inline double path_loss(double distance_m, double carrier_hz) {
    if (!(distance_m > 0.0) || !(carrier_hz > 0.0))
        throw DomainError("path_loss: distance and carrier must be positive");
    const double x = 4.0 * std::numbers::pi * distance_m * carrier_hz / speed_of_light;
    return x * x;
}

/// Linear SNR for a link at `distance_m` with a shadowing realization of
/// `shadow_db` dB (positive attenuates; 0 is the median channel).
inline double snr(const LinkParams& params, double distance_m, double shadow_db) {
    params.validate();
    if (!std::isfinite(shadow_db)) throw DomainError("snr: shadowing must be finite");
    const double psi = db_to_linear(shadow_db);
    return params.tx_power_w * params.gain_sat * params.gain_ue /
           (path_loss(distance_m, params.carrier_hz) * params.pointing_loss * params.noise_power_w * psi);
}

/// One log-normal shadowing draw in dB, N(0, sigma^2).
template <numerics::Generator64 G>
double sample_shadowing_db(const LinkParams& params, G& rng) {
    return params.shadow_sigma_db * numerics::standard_normal(rng);
}

inline double shannon_capacity(double gamma) { return std::log2(1.0 + gamma); }

inline double channel_dispersion(double gamma) {
    const double l2e = std::numbers::log2e;
    return gamma * (gamma + 2.0) / ((1.0 + gamma) * (1.0 + gamma)) * l2e * l2e;
}

/// Normal-approximation block error probability at blocklength n and rate R.
inline double fbl_error_probability(double gamma, double blocklength, double rate) {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) throw DomainError("fbl_error_probability: SNR must be positive");
    if (!(blocklength >= 1.0)) throw DomainError("fbl_error_probability: blocklength must be >= 1");
    if (!(rate > 0.0)) throw DomainError("fbl_error_probability: rate must be positive");
    const double arg = std::sqrt(blocklength / channel_dispersion(gamma)) * (shannon_capacity(gamma) - rate);
    if (arg == 0.0) return 0.5;
    return std::clamp(numerics::q_function(arg), 0.0, 1.0);
}

struct OfdmGrid {
    std::int64_t subcarriers = 12;
    double symbol_time_s = 1.0 / 15e3;
    std::int64_t blocklength = 672;
    double rate_bpcu = 2.23;
    double nack_delay_s = 14.0 / 15e3;

    void validate() const {
        if (subcarriers < 1 || blocklength < 1) throw DomainError("OfdmGrid: subcarriers and blocklength must be >= 1");
        if (!(symbol_time_s > 0.0) || !(rate_bpcu > 0.0)) throw DomainError("OfdmGrid: symbol time and rate must be positive");
        if (!(nack_delay_s >= 0.0)) throw DomainError("OfdmGrid: NACK delay must be nonnegative");
    }

    std::int64_t symbols_per_block() const { return (blocklength + subcarriers - 1) / subcarriers; }

    /// Air time of one block, T_symb * ceil(n / N_SC).
    double airtime_s() const { return symbol_time_s * static_cast<double>(symbols_per_block()); }
};

/// Per-attempt uplink delay including propagation.
inline double attempt_delay(const OfdmGrid& grid, double distance_m) {
    grid.validate();
    if (!(distance_m > 0.0)) throw DomainError("attempt_delay: distance must be positive");
    return grid.airtime_s() + distance_m / speed_of_light;
}

struct DelayAtom {
    double delay_s;
    double probability;
};

struct UplinkDelayPmf {
    std::vector<DelayAtom> atoms;
    /// Probability of more than max_attempts failures.
    double truncated_mass = 0.0;
};

/// Distribution of the ARQ uplink delay: x failures before success has
/// delay T_tx + x (T_tx + T_NACK) and probability (1 - eps) eps^x.
inline UplinkDelayPmf uplink_delay_pmf(const OfdmGrid& grid, double eps, double distance_m,
                                       std::int64_t max_attempts) {
    if (!(eps >= 0.0)) throw DomainError("uplink_delay_pmf: error probability must be >= 0");
    if (!(eps < 1.0)) throw InfeasibleLinkError("uplink_delay_pmf: block error probability is 1, link cannot deliver", eps);
    if (max_attempts < 1) throw DomainError("uplink_delay_pmf: max_attempts must be >= 1");
    const double t_tx = attempt_delay(grid, distance_m);
    UplinkDelayPmf out;
    out.atoms.reserve(static_cast<std::size_t>(max_attempts));
    double eps_pow = 1.0;
    for (std::int64_t x = 0; x < max_attempts; ++x) {
        out.atoms.push_back({t_tx + static_cast<double>(x) * (t_tx + grid.nack_delay_s), (1.0 - eps) * eps_pow});
        eps_pow *= eps;
    }
    out.truncated_mass = eps_pow;
    return out;
}

/// Closed-form mean of the ARQ uplink delay.
inline double expected_uplink_delay(const OfdmGrid& grid, double eps, double distance_m) {
    if (!(eps >= 0.0)) throw DomainError("expected_uplink_delay: error probability must be >= 0");
    if (!(eps < 1.0))
        throw InfeasibleLinkError("expected_uplink_delay: block error probability is 1, expected delay diverges", eps);
    const double t_tx = attempt_delay(grid, distance_m);
    return t_tx + (t_tx + grid.nack_delay_s) * eps / (1.0 - eps);
}

/// One realization of the ARQ uplink delay.
template <numerics::Generator64 G>
double sample_uplink_delay(const OfdmGrid& grid, double eps, double distance_m, G& rng) {
    if (!(eps >= 0.0 && eps < 1.0)) throw InfeasibleLinkError("sample_uplink_delay: error probability must lie in [0, 1)", eps);
    const double t_tx = attempt_delay(grid, distance_m);
    std::int64_t failures = 0;
    while (numerics::uniform01(rng) < eps) ++failures;
    return t_tx + static_cast<double>(failures) * (t_tx + grid.nack_delay_s);
}

/// Downlink delay; block errors are neglected so it is deterministic.
inline double downlink_delay(const OfdmGrid& grid, double distance_m) {
    if (!(distance_m > 0.0)) throw DomainError("downlink_delay: distance must be positive");
    return attempt_delay(grid, distance_m);
}

struct IslPath {
    std::vector<double> hop_distances_m;
    double symbol_time_s = 1e-10;
    std::int64_t subcarriers = 1;
};

/// Round-trip ISL latency over every hop of `path` for a block of n symbols.
inline double isl_round_trip(const IslPath& path, std::int64_t blocklength) {
    if (path.hop_distances_m.empty()) return 0.0;
    if (path.subcarriers < 1 || !(path.symbol_time_s > 0.0))
        throw DomainError("isl_round_trip: ISL grid must have positive symbol time and subcarriers");
    if (blocklength < 1) throw DomainError("isl_round_trip: blocklength must be >= 1");
    const auto symbols = (blocklength + path.subcarriers - 1) / path.subcarriers;
    const double tx = path.symbol_time_s * static_cast<double>(symbols);
    double total = 0.0;
    for (double d : path.hop_distances_m) {
        if (!(d > 0.0)) throw DomainError("isl_round_trip: hop distances must be positive");
        total += 2.0 * tx + 2.0 * d / speed_of_light;
    }
    return total;
}

/// Neighbour distance in an evenly spaced ring of `n_sats` satellites at
/// `altitude_m`: the chord 2 (R + h) sin(pi / n).
inline double ring_chord(std::int64_t n_sats, double altitude_m, double earth_radius_m = earth_radius) {
    if (n_sats < 2) throw DomainError("ring_chord: need at least two satellites");
    return 2.0 * (earth_radius_m + altitude_m) * std::sin(std::numbers::pi / static_cast<double>(n_sats));
}

} // namespace satedge::channel
