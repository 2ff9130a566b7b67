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

#include "oracles.hpp"
#include "satedge/numerics/polynomial.hpp"
#include "satedge/numerics/random.hpp"

using namespace satedge::numerics;

TEST_CASE("polyfit recovers an exact cubic", "[numerics][polyfit]") {
    const Polynomial truth({2.5, -1.0, 0.25, 0.125});
    std::vector<double> xs, ys;
    for (int i = 0; i < 20; ++i) {
        xs.push_back(-3.0 + 0.4 * i);
        ys.push_back(truth(xs.back()));
    }
    const auto fit = polyfit(xs, ys, 3);
    REQUIRE(fit.degree() == 3);
    for (std::size_t i = 0; i < 4; ++i) CHECK(fit.coefficients()[i] == Catch::Approx(truth.coefficients()[i]).margin(1e-10));
    double worst = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) worst = std::max(worst, std::abs(fit(xs[i]) - ys[i]));
    CHECK(worst < 1e-9);
}

TEST_CASE("polyfit reproduces exact polynomials at GHz-scale abscissae", "[numerics][polyfit][property]") {
    Xoshiro256 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const int degree = static_cast<int>(uniform_index(rng, 5));
        // Coefficients chosen so each term is O(1) over [0.3, 1.3] GHz.
        std::vector<double> c(degree + 1);
        for (int i = 0; i <= degree; ++i) c[i] = (2.0 * uniform01(rng) - 1.0) / std::pow(1e9, i);
        const Polynomial truth(c);
        std::vector<double> xs, ys;
        for (int i = 0; i < 15; ++i) {
            xs.push_back(0.3e9 + 1.0e9 * i / 14.0);
            ys.push_back(truth(xs.back()));
        }
        const auto fit = polyfit(xs, ys, degree);
        for (std::size_t i = 0; i < xs.size(); ++i) CHECK(std::abs(fit(xs[i]) - ys[i]) < 1e-12);
    }
}

TEST_CASE("polyfit degree zero is the mean", "[numerics][polyfit]") {
    const std::vector<double> xs{1, 2, 3, 4, 5};
    const std::vector<double> ys{3, 1, 4, 1, 5};
    const auto fit = polyfit(xs, ys, 0);
    CHECK(fit.coefficients()[0] == Catch::Approx(14.0 / 5.0).epsilon(1e-15));
    // A single distinct abscissa is fine for a constant fit.
    const std::vector<double> same{2, 2, 2};
    CHECK(polyfit(same, std::vector<double>{1, 2, 3}, 0)(2.0) == Catch::Approx(2.0));
}

TEST_CASE("polyfit noisy cubic matches the normal-equations oracle", "[numerics][polyfit]") {
    Xoshiro256 rng(3);
    std::vector<double> xs, ys;
    for (int i = 0; i < 100; ++i) {
        const double x = -1.0 + 2.0 * i / 99.0;
        xs.push_back(x);
        ys.push_back(0.5 + x - 2.0 * x * x + 0.7 * x * x * x + 1e-3 * standard_normal(rng));
    }
    const auto fit = polyfit(xs, ys, 3);
    const auto ref = oracle::normal_equations_fit(xs, ys, 3);
    for (int i = 0; i < 4; ++i) CHECK(fit.coefficients()[i] == Catch::Approx(ref[i]).margin(1e-9));
    CHECK(r_squared(fit, xs, ys) > 0.99);

    // Residuals are orthogonal to every column of the design.
    const double sd = std::sqrt(std::accumulate(ys.begin(), ys.end(), 0.0, [](double a, double y) { return a + y * y; }));
    for (int p = 0; p <= 3; ++p) {
        double dot = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) dot += (ys[i] - fit(xs[i])) * std::pow(xs[i], p);
        CHECK(std::abs(dot) / sd < 1e-6);
    }
}

TEST_CASE("polyfit rejects rank-deficient designs", "[numerics][polyfit]") {
    const std::vector<double> same{1.0, 1.0, 1.0, 1.0};
    const std::vector<double> ys{1.0, 2.0, 3.0, 4.0};
    CHECK_THROWS_AS(polyfit(same, ys, 1), satedge::EstimationError);
    const std::vector<double> two{1.0, 2.0};
    CHECK_THROWS_AS(polyfit(two, std::vector<double>{1.0, 2.0}, 3), satedge::EstimationError);
    CHECK_THROWS_AS(polyfit(two, std::vector<double>{1.0}, 1), satedge::DomainError);
    // Two distinct abscissae repeated cannot support a quadratic.
    const std::vector<double> pairs{1.0, 2.0, 1.0, 2.0, 1.0};
    CHECK_THROWS_AS(polyfit(pairs, std::vector<double>{1, 2, 3, 4, 5}, 2), satedge::EstimationError);
}

TEST_CASE("Polynomial rescaling preserves values", "[numerics][polyfit]") {
    const Polynomial p({1.0, 2e-9, -3e-18, 4e-27});
    const auto q = p.rescaled(0.3e9, 1.3e9);
    for (double t : {-1.0, -0.3, 0.0, 0.5, 1.0}) {
        CHECK(q(t) == Catch::Approx(p(0.8e9 + 0.5e9 * t)).epsilon(1e-13));
    }
}
