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

#include "satedge/numerics/gamma.hpp"
#include "satedge/numerics/random.hpp"

using namespace satedge::numerics;

TEST_CASE("xoshiro256 is deterministic per seed", "[numerics][rng]") {
    Xoshiro256 a(42), b(42), c(43);
    for (int i = 0; i < 100; ++i) {
        const auto x = a();
        CHECK(x == b());
        (void)c();
    }
    CHECK_FALSE(a == c);
    static_assert(Generator64<Xoshiro256>);
}

TEST_CASE("derive_seed separates streams", "[numerics][rng]") {
    CHECK(derive_seed(1, {2, 3}) == derive_seed(1, {2, 3}));
    CHECK(derive_seed(1, {2, 3}) != derive_seed(1, {3, 2}));
    CHECK(derive_seed(1, {2}) != derive_seed(2, {2}));
    CHECK(derive_seed(1, {}) != derive_seed(1, {0}));
}

TEST_CASE("sample_gamma fixed seed gives a fixed sequence", "[numerics][rng]") {
    Xoshiro256 a(7), b(7);
    for (int i = 0; i < 1000; ++i) CHECK(sample_gamma(2.5, 0.3, a) == sample_gamma(2.5, 0.3, b));
}

TEST_CASE("sample_gamma mean over 1e6 draws", "[numerics][rng]") {
    Xoshiro256 rng(2026);
    const int n = 1'000'000;
    for (auto [shape, scale] : {std::pair{4.0, 0.25}, std::pair{0.5, 2.0}, std::pair{150.0, 0.001}}) {
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x = sample_gamma(shape, scale, rng);
            REQUIRE(x >= 0.0);
            sum += x;
        }
        const double mean = sum / n;
        const double se = std::sqrt(shape) * scale / std::sqrt(static_cast<double>(n));
        CAPTURE(shape, scale, mean);
        CHECK(std::abs(mean - shape * scale) < 3.0 * se);
        if (shape == 4.0) CHECK(std::abs(mean - 1.0) < 0.01);
    }
}

TEST_CASE("sample_gamma empirical CDF agrees with gamma_cdf", "[numerics][rng]") {
    Xoshiro256 rng(99);
    for (double shape : {0.7, 4.0, 60.0}) {
        std::vector<double> xs(1'000'000);
        for (auto& x : xs) x = sample_gamma(shape, 1.5, rng);
        CHECK(ks_statistic(xs, GammaLaw{shape, 1.5}) < 0.002);
    }
}

TEST_CASE("uniform_index is unbiased", "[numerics][rng]") {
    Xoshiro256 rng(5);
    std::vector<int> counts(7, 0);
    const int n = 700'000;
    for (int i = 0; i < n; ++i) ++counts[uniform_index(rng, 7)];
    for (int c : counts) CHECK(std::abs(c - n / 7.0) < 4.0 * std::sqrt(n / 7.0 * 6.0 / 7.0));
}

TEST_CASE("sample_gamma rejects bad parameters", "[numerics][rng]") {
    Xoshiro256 rng(1);
    CHECK_THROWS_AS(sample_gamma(0.0, 1.0, rng), satedge::DomainError);
    CHECK_THROWS_AS(sample_gamma(1.0, -1.0, rng), satedge::DomainError);
}
