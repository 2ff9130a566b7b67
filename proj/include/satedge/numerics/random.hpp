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

// Seedable generator and the samplers the experiments draw from. Samplers are
// written out explicitly (rather than using <random> distributions, whose
// algorithms are implementation-defined) so a seed reproduces bit-identical
// draws on every standard library.

#pragma once

#include <array>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <random>

#include "satedge/errors.hpp"

namespace satedge::numerics {

constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derives an independent stream seed from a root seed and a path of stream
/// ids: each id is folded into a splitmix64 state, so (root, {a, b}) and
/// (root, {b, a}) give unrelated streams.
constexpr std::uint64_t derive_seed(std::uint64_t root,
                                    std::initializer_list<std::uint64_t> path) noexcept {
    std::uint64_t state = root;
    std::uint64_t out = splitmix64(state);
    for (std::uint64_t id : path) {
        state = out ^ (id * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
        out = splitmix64(state);
    }
    return out;
}

/// xoshiro256** 1.0 (Blackman & Vigna), seeded through splitmix64.
class Xoshiro256 {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256(std::uint64_t seed = 0x5eed) noexcept { reseed(seed); }

    void reseed(std::uint64_t seed) noexcept {
        std::uint64_t sm = seed;
        for (auto& s : state_) s = splitmix64(sm);
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    friend bool operator==(const Xoshiro256&, const Xoshiro256&) = default;

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

template <class G>
concept Generator64 = std::uniform_random_bit_generator<G> &&
                      (G::min() == 0) &&
                      (G::max() == std::numeric_limits<std::uint64_t>::max());

/// Uniform double in [0, 1) with 53 random bits.
template <Generator64 G>
double uniform01(G& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in (0, 1); never returns 0 so logs are safe.
template <Generator64 G>
double uniform_open(G& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

namespace detail {
__extension__ using uint128 = unsigned __int128;
} // namespace detail

/// Uniform integer in [0, n) by Lemire's multiply-shift with rejection.
template <Generator64 G>
std::uint64_t uniform_index(G& rng, std::uint64_t n) {
    if (n == 0) throw DomainError("uniform_index: empty range");
    const detail::uint128 wide_n = n;
    detail::uint128 m = static_cast<detail::uint128>(rng()) * wide_n;
    auto low = static_cast<std::uint64_t>(m);
    if (low < n) {
        const std::uint64_t threshold = (0 - n) % n;
        while (low < threshold) {
            m = static_cast<detail::uint128>(rng()) * wide_n;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

/// Standard normal draw by the Marsaglia polar method.
template <Generator64 G>
double standard_normal(G& rng) {
    for (;;) {
        const double u = 2.0 * uniform01(rng) - 1.0;
        const double v = 2.0 * uniform01(rng) - 1.0;
        const double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
    }
}

/// Gamma(shape, scale) draw: Marsaglia-Tsang squeeze for shape >= 1, with
/// the U^(1/shape) boost for shape < 1.
template <Generator64 G>
double sample_gamma(double shape, double scale, G& rng) {
    if (!(shape > 0.0) || !std::isfinite(shape)) throw DomainError("sample_gamma: shape must be positive");
    if (!(scale > 0.0) || !std::isfinite(scale)) throw DomainError("sample_gamma: scale must be positive");

    const bool boost = shape < 1.0;
    const double a = boost ? shape + 1.0 : shape;
    const double d = a - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    double x;
    for (;;) {
        double z;
        double v;
        do {
            z = standard_normal(rng);
            v = 1.0 + c * z;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform_open(rng);
        const double z2 = z * z;
        if (u < 1.0 - 0.0331 * z2 * z2 || std::log(u) < 0.5 * z2 + d * (1.0 - v + std::log(v))) {
            x = d * v;
            break;
        }
    }
    if (boost) x *= std::pow(uniform_open(rng), 1.0 / shape);
    return x * scale;
}

} // namespace satedge::numerics
