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

#include <algorithm>
#include <cmath>
#include <vector>

#include "satedge/compute.hpp"
#include "satedge/numerics/gamma.hpp"
#include "satedge/numerics/random.hpp"

using namespace satedge;
using namespace satedge::compute;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

std::vector<double> grid(const Platform& p, int n) {
    std::vector<double> out;
    for (int i = 0; i < n; ++i) out.push_back(p.f_min_hz + (p.f_max_hz - p.f_min_hz) * i / (n - 1));
    return out;
}

} // namespace

TEST_CASE("built-in platforms reproduce their calibration", "[compute]") {
    const Platform nano = jetson_orin_nano();
    const Platform agx = jetson_agx_orin();
    CHECK_THAT(mean_exec_time(nano.f_max_hz, nano), WithinRel(61.19e-3, 5e-3));
    CHECK_THAT(mean_exec_time(agx.f_max_hz, agx), WithinRel(32.63e-3, 5e-3));

    // W = (T - mu_sync) N_cores N_FLOPs f_max / mu_C.
    CHECK_THAT(nano.work_flops, WithinRel((61.19e-3 - 17.48e-3) * 1024 * 2 * 1.02e9 / 1.071, 1e-12));
    CHECK_THAT(agx.work_flops, WithinRel((32.63e-3 - 14.14e-3) * 2048 * 2 * 1.3e9 / 1.122, 1e-12));
    CHECK_THAT(nano.work_flops, WithinRel(8.5255e10, 1e-4));

    CHECK(nano.f_min_hz == 0.3 * nano.f_max_hz);
    CHECK(jetson_orin_nano(0.5).f_min_hz == 0.5 * nano.f_max_hz);
}

TEST_CASE("platform validation", "[compute]") {
    Platform p = jetson_orin_nano();
    p.mu_c = 0.9;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = jetson_orin_nano();
    p.f_min_hz = p.f_max_hz;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = jetson_orin_nano();
    p.work_flops = 0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    CHECK_THROWS_AS(Platform::calibrated("x", 1, 1, 1e9, 3e8, 1, 1, 0.05, 0.04), DomainError);
}

TEST_CASE("cubic power model", "[compute]") {
    const Platform nano = jetson_orin_nano();
    CHECK_THAT(power(nano.f_max_hz, nano), WithinRel(25.0, 1e-15));
    CHECK_THAT(power(nano.f_max_hz / 2, nano), WithinRel(25.0 / 8, 1e-15));
    CHECK_THROWS_AS(power(nano.f_max_hz * 1.01, nano), DomainError);
    CHECK_THROWS_AS(power(nano.f_min_hz * 0.99, nano), DomainError);
}

TEST_CASE("mean execution time is decreasing and convex", "[compute]") {
    for (const Platform& p : {jetson_orin_nano(), jetson_agx_orin()}) {
        const auto fs = grid(p, 1000);
        for (std::size_t i = 1; i + 1 < fs.size(); ++i) {
            const double a = mean_exec_time(fs[i - 1], p);
            const double b = mean_exec_time(fs[i], p);
            const double c = mean_exec_time(fs[i + 1], p);
            CHECK(b < a);
            CHECK(a + c - 2 * b > 0);
        }
    }
}

TEST_CASE("expected energy is strictly increasing in frequency", "[compute]") {
    for (const Platform& p : {jetson_orin_nano(), jetson_agx_orin()}) {
        double prev = 0;
        for (double f : grid(p, 1000)) {
            const double m = mean_exec_time(f, p);
            const double e = energy(f, p, GammaLaw{100.0, m / 100.0});
            CHECK(e > prev);
            CHECK_THAT(e, WithinRel(power(f, p) * m, 1e-12));
            prev = e;
        }
    }
}

TEST_CASE("batch law is additive in shape", "[compute]") {
    const GammaLaw g{37.5, 0.0029};
    const GammaLaw b = batch_law(g, 6);
    CHECK(b.scale == g.scale);
    CHECK(b.shape == 6 * g.shape);
    for (std::int64_t a : {1, 2, 3, 7})
        for (std::int64_t c : {1, 4, 5}) CHECK(batch_law(batch_law(g, a), c).shape == batch_law(g, a * c).shape);
    CHECK_THROWS_AS(batch_law(g, 0), DomainError);
}

TEST_CASE("sums of per-image draws follow the batch law", "[compute]") {
    const GammaLaw g{25.0, 2.4e-3};
    numerics::Xoshiro256 rng(101);
    for (std::int64_t n : {2, 5}) {
        std::vector<double> sums(50'000);
        for (auto& s : sums) {
            s = 0;
            for (std::int64_t i = 0; i < n; ++i) s += numerics::sample_gamma(g.shape, g.scale, rng);
        }
        CHECK(numerics::ks_statistic(sums, batch_law(g, n)) < 0.01);
    }
}
