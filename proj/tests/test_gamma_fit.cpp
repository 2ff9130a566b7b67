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
#include <numeric>
#include <vector>

#include "satedge/numerics/gamma.hpp"
#include "satedge/numerics/random.hpp"

using namespace satedge::numerics;

namespace {
std::vector<double> draws(double shape, double scale, std::size_t n, std::uint64_t seed) {
    Xoshiro256 rng(seed);
    std::vector<double> out(n);
    for (auto& x : out) x = sample_gamma(shape, scale, rng);
    return out;
}
} // namespace

TEST_CASE("fit_gamma_mle recovers Gamma(5, 0.01)", "[numerics][mle]") {
    const auto xs = draws(5.0, 0.01, 100'000, 17);
    const auto fit = fit_gamma_mle(xs);
    CHECK_FALSE(fit.moment_fallback);
    CHECK(fit.law.shape >= 4.9);
    CHECK(fit.law.shape <= 5.1);
    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
    CHECK(std::abs(fit.law.mean() - mean) < 1e-9);
}

TEST_CASE("fit_gamma_mle solves the likelihood equation", "[numerics][mle]") {
    for (double shape : {0.4, 1.0, 30.0, 2000.0}) {
        const auto xs = draws(shape, 2.0, 2000, 23);
        const auto fit = fit_gamma_mle(xs);
        double mean = 0.0, mlog = 0.0;
        for (double x : xs) {
            mean += x;
            mlog += std::log(x);
        }
        mean /= xs.size();
        mlog /= xs.size();
        CAPTURE(shape);
        CHECK(std::abs(std::log(fit.law.shape) - digamma(fit.law.shape) - (std::log(mean) - mlog)) <
              1e-9 * (std::log(mean) - mlog));
        CHECK(fit.iterations <= 100);
    }
}

TEST_CASE("fit_gamma_mle guards against degenerate input", "[numerics][mle]") {
    CHECK_THROWS_AS(fit_gamma_mle(std::vector<double>{1.0, 1.0 + 1e-12}), satedge::EstimationError);
    CHECK_THROWS_AS(fit_gamma_mle(std::vector<double>{2.0, 2.0, 2.0}), satedge::EstimationError);
    CHECK_THROWS_AS(fit_gamma_mle(std::vector<double>{1.0}), satedge::EstimationError);
    CHECK_THROWS_AS(fit_gamma_mle(std::vector<double>{1.0, -1.0}), satedge::DomainError);
    CHECK_THROWS_AS(fit_gamma_mle(std::vector<double>{1.0, 0.0}), satedge::DomainError);
}

TEST_CASE("fit_gamma_mle error shrinks like N^-1/2", "[numerics][mle][property]") {
    // RMS error of the shape estimate over replicates at each N; the log-log
    // slope of RMS vs N must sit near -1/2.
    const double shape = 5.0;
    const std::vector<std::size_t> sizes{100, 1000, 10000, 100000};
    std::vector<double> lx, ly;
    Xoshiro256 rng(4242);
    for (std::size_t n : sizes) {
        const int reps = 60;
        double sse = 0.0;
        std::vector<double> xs(n);
        for (int r = 0; r < reps; ++r) {
            for (auto& x : xs) x = sample_gamma(shape, 0.01, rng);
            const double e = fit_gamma_mle(xs).law.shape - shape;
            sse += e * e;
        }
        lx.push_back(std::log(static_cast<double>(n)));
        ly.push_back(std::log(std::sqrt(sse / reps)));
    }
    const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / lx.size();
    const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / ly.size();
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxy += (lx[i] - mx) * (ly[i] - my);
        sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    const double slope = sxy / sxx;
    CAPTURE(slope);
    CHECK(slope >= -0.65);
    CHECK(slope <= -0.35);
}

TEST_CASE("ks_statistic examples", "[numerics][ks]") {
    const GammaLaw law{5.0, 0.01};
    const int n = 1000;
    std::vector<double> plug;
    for (int i = 1; i <= n; ++i) plug.push_back(law.quantile((i - 0.5) / n));
    CHECK(ks_statistic(plug, law) < 1.0 / n + 1e-6);

    CHECK(ks_statistic(std::vector<double>{law.quantile(0.5)}, law) == Catch::Approx(0.5).margin(1e-12));

    // Exponential with the same mean is far from Gamma(5, .)
    const auto expo = draws(1.0, 0.05, 10'000, 8);
    CHECK(ks_statistic(expo, law) > 0.1);

    CHECK_THROWS_AS(ks_statistic(std::vector<double>{}, law), satedge::DomainError);
}
