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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "satedge/errors.hpp"
#include "satedge/numerics/special.hpp"

namespace satedge::numerics {

/// Gamma(shape, scale) distribution of an execution time in seconds.
struct GammaLaw {
    double shape = 1.0;
    double scale = 1.0;

    double mean() const noexcept { return shape * scale; }
    double variance() const noexcept { return shape * scale * scale; }
    double cdf(double t) const { return gamma_cdf(t, shape, scale); }
    double sf(double t) const { return gamma_sf(t, shape, scale); }
    double quantile(double p) const { return gamma_quantile(p, shape, scale); }

    friend bool operator==(const GammaLaw&, const GammaLaw&) = default;
};

/// Result of a maximum-likelihood Gamma fit.
struct GammaFit {
    GammaLaw law;
    int iterations = 0;
    /// Newton did not converge; `law` holds the method-of-moments estimate.
    bool moment_fallback = false;
};

namespace detail {

struct LogMoments {
    double mean = 0.0;
    double variance = 0.0;
    double log_gap = 0.0; // ln(mean) - mean(ln x), always >= 0
};

inline LogMoments log_moments(std::span<const double> samples) {
    LogMoments out;
    const double n = static_cast<double>(samples.size());
    double sum = 0.0;
    for (double x : samples) sum += x;
    out.mean = sum / n;
    double ss = 0.0;
    double log_sum = 0.0;
    for (double x : samples) {
        const double dev = x - out.mean;
        ss += dev * dev;
        // log1p keeps precision near the mean, log far below it.
        const double ratio = x / out.mean;
        log_sum += ratio > 0.5 && ratio < 2.0 ? std::log1p(dev / out.mean) : std::log(ratio);
    }
    out.variance = ss / n;
    out.log_gap = -log_sum / n;
    return out;
}

} // namespace detail

/// Maximum-likelihood Gamma fit. Solves ln(a) - digamma(a) = ln(mean) -
/// mean(ln x) by Newton iteration in log(a); the scale follows as mean / a,
/// so the fitted mean equals the sample mean.
inline GammaFit fit_gamma_mle(std::span<const double> samples) {
    if (samples.size() < 2) throw EstimationError("fit_gamma_mle: need at least two samples");
    for (double x : samples) {
        if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("fit_gamma_mle: samples must be positive and finite");
    }
    const auto mom = detail::log_moments(samples);
    const double s = mom.log_gap;
    // Below this the shape exceeds ~5e11 (cv < 1.5e-6): no usable spread.
    if (!(s > 1e-12) || !(mom.variance > 0.0))
        throw EstimationError("fit_gamma_mle: sample is degenerate (no measurable spread)");

    // Minka's closed-form starting point.
    double shape = (3.0 - s + std::sqrt((s - 3.0) * (s - 3.0) + 24.0 * s)) / (12.0 * s);
    GammaFit fit;
    bool converged = false;
    for (int it = 1; it <= 100; ++it) {
        fit.iterations = it;
        const double resid = log_minus_digamma(shape) - s;
        if (std::abs(resid) <= 1e-12 * s) {
            converged = true;
            break;
        }
        // d/d(ln a) [ln a - digamma(a)] = 1 - a * trigamma(a)
        const double slope = 1.0 - shape * trigamma(shape);
        if (!(slope < 0.0)) break;
        double step = -resid / slope;
        step = std::clamp(step, -2.0, 2.0);
        shape *= std::exp(step);
        if (!std::isfinite(shape) || shape <= 0.0) break;
    }

    if (converged) {
        fit.law = GammaLaw{shape, mom.mean / shape};
    } else {
        const double mm_shape = mom.mean * mom.mean / mom.variance;
        fit.law = GammaLaw{mm_shape, mom.mean / mm_shape};
        fit.moment_fallback = true;
    }
    return fit;
}

/// Kolmogorov-Smirnov distance between the empirical CDF of `samples` and
/// the Gamma law.
inline double ks_statistic(std::span<const double> samples, const GammaLaw& law) {
    if (samples.empty()) throw DomainError("ks_statistic: need at least one sample");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = law.cdf(std::max(0.0, sorted[i]));
        d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
    }
    return std::clamp(d, 0.0, 1.0);
}

} // namespace satedge::numerics
