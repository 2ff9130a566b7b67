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

// Synthetic stand-in for a measured execution-time campaign. The pooled law
// at each frequency is Gamma(1/cv^2, m(f) cv^2) with m(f) the BSP mean;
// images carry fixed work multipliers, and the per-image shape is chosen so
// that the infinite-sample Gamma MLE of the pooled per-image mixture is
// exactly the pooled law.

#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "satedge/compute.hpp"
#include "satedge/errors.hpp"
#include "satedge/estimation.hpp"
#include "satedge/numerics/gamma.hpp"
#include "satedge/numerics/random.hpp"
#include "satedge/numerics/special.hpp"
#include "satedge/scheduler.hpp"

namespace satedge::harness {

using compute::GammaLaw;
using compute::Platform;

/// Coefficient of variation of the pooled execution time, linear in
/// frequency between its values at f_min and f_max.
struct CvProfile {
    double at_f_min = 0.10;
    double at_f_max = 0.10;

    static CvProfile constant(double cv) { return {cv, cv}; }

    double at(double f_hz, const Platform& p) const noexcept {
        const double u = (f_hz - p.f_min_hz) / (p.f_max_hz - p.f_min_hz);
        return at_f_min + (at_f_max - at_f_min) * u;
    }
};

struct GroundTruthOptions {
    CvProfile cv{};
    std::size_t n_images = 56;
    double multiplier_sigma = 0.10; // log-normal sigma of per-image work multipliers
    std::size_t n_frequencies = 8;
    int degree = 3;
};

class GroundTruth {
public:
    /// Exact pooled law at any frequency in range.
    GammaLaw law_at(double f_hz) const {
        const double cv = options_.cv.at(f_hz, platform_);
        const double m = compute::mean_exec_time(f_hz, platform_);
        return GammaLaw{1.0 / (cv * cv), m * cv * cv};
    }

    const Platform& platform() const noexcept { return platform_; }
    const GroundTruthOptions& options() const noexcept { return options_; }
    std::uint64_t seed() const noexcept { return seed_; }

    /// Characterization grid and the pooled laws on it.
    const std::vector<double>& frequencies() const noexcept { return freqs_; }
    const std::map<double, GammaLaw>& table() const noexcept { return table_; }
    /// Degree-L regression of the tabulated laws: the model a full
    /// measurement campaign converges to.
    const estimation::FrequencyModel& model() const noexcept { return model_; }
    /// Moment model for the Cantelli benchmark (BSP mean, regressed variance).
    const scheduler::MomentModel& moments() const noexcept { return moments_; }

    std::size_t n_images() const noexcept { return multipliers_.size(); }
    const std::vector<double>& multipliers() const noexcept { return multipliers_; }
    double image_shape(std::size_t freq_index) const { return image_shape_.at(freq_index); }

    /// One execution of `image` at grid frequency `freq_index`.
    template <numerics::Generator64 G>
    double sample(std::uint32_t image, std::size_t freq_index, G& rng) const {
        const double a = image_shape_[freq_index];
        const double mean = multipliers_[image] * table_means_[freq_index];
        return numerics::sample_gamma(a, mean / a, rng);
    }

    template <numerics::Generator64 G>
    friend GroundTruth synthesize_ground_truth(const Platform& platform, const GroundTruthOptions& options, G& rng);

private:
    Platform platform_;
    GroundTruthOptions options_;
    std::uint64_t seed_ = 0;
    std::vector<double> freqs_;
    std::vector<double> table_means_;
    std::map<double, GammaLaw> table_;
    std::vector<double> multipliers_;
    std::vector<double> image_shape_;
    estimation::FrequencyModel model_;
    scheduler::MomentModel moments_;
};

template <numerics::Generator64 G>
GroundTruth synthesize_ground_truth(const Platform& platform, const GroundTruthOptions& options, G& rng) {
    platform.validate();
    if (!(options.cv.at_f_min > 0.0) || !(options.cv.at_f_max > 0.0))
        throw DomainError("synthesize_ground_truth: cv must be positive");
    if (options.n_images < 1) throw DomainError("synthesize_ground_truth: need at least one image");
    if (!(options.multiplier_sigma >= 0.0)) throw DomainError("synthesize_ground_truth: multiplier sigma must be >= 0");
    if (options.n_frequencies < static_cast<std::size_t>(options.degree) + 1)
        throw DomainError("synthesize_ground_truth: frequency grid smaller than the regression degree");

    GroundTruth gt;
    gt.platform_ = platform;
    gt.options_ = options;
    gt.seed_ = rng();

    numerics::Xoshiro256 own(gt.seed_);
    gt.multipliers_.resize(options.n_images);
    double sum = 0.0;
    for (auto& w : gt.multipliers_) {
        w = std::exp(options.multiplier_sigma * numerics::standard_normal(own));
        sum += w;
    }
    const double mean_w = sum / static_cast<double>(options.n_images);
    double mean_log_w = 0.0;
    for (auto& w : gt.multipliers_) {
        w /= mean_w;
        mean_log_w += std::log(w);
    }
    mean_log_w /= static_cast<double>(options.n_images);

    const std::size_t nf = options.n_frequencies;
    std::vector<double> variances;
    for (std::size_t j = 0; j < nf; ++j) {
        const double f = j + 1 == nf ? platform.f_max_hz
                                     : platform.f_min_hz + (platform.f_max_hz - platform.f_min_hz) *
                                                               static_cast<double>(j) / static_cast<double>(nf - 1);
        const GammaLaw law = gt.law_at(f);
        gt.freqs_.push_back(f);
        gt.table_means_.push_back(law.mean());
        gt.table_[f] = law;
        variances.push_back(law.variance());

        // Per-image shape a with ln a - psi(a) = ln alpha - psi(alpha) + mean(ln w).
        const double target = numerics::log_minus_digamma(law.shape) + mean_log_w;
        if (!(target > 0.0))
            throw DomainError("synthesize_ground_truth: image heterogeneity exceeds the pooled variability");
        double a = 0.5 / target;
        for (int it = 0; it < 100; ++it) {
            const double r = numerics::log_minus_digamma(a) - target;
            const double slope = 1.0 - a * numerics::trigamma(a);
            const double step = std::clamp(-r / slope, -2.0, 2.0);
            a *= std::exp(step);
            if (std::abs(r) <= 1e-14 * target) break;
        }
        gt.image_shape_.push_back(a);
    }

    gt.model_ = estimation::FrequencyModel::from_laws(gt.table_, options.degree, platform.f_min_hz, platform.f_max_hz);
    gt.moments_ = scheduler::MomentModel::from_platform(platform, numerics::polyfit(gt.freqs_, variances, options.degree));
    return gt;
}

/// A full characterization campaign: every image executed `runs_per_image`
/// times at each grid frequency.
template <numerics::Generator64 G>
estimation::SamplesByFrequency simulate_campaign(const GroundTruth& gt, std::size_t runs_per_image, G& rng) {
    estimation::SamplesByFrequency out;
    for (std::size_t j = 0; j < gt.frequencies().size(); ++j) {
        auto& col = out[gt.frequencies()[j]];
        col.reserve(gt.n_images() * runs_per_image);
        for (std::uint32_t i = 0; i < gt.n_images(); ++i)
            for (std::size_t r = 0; r < runs_per_image; ++r) col.push_back(gt.sample(i, j, rng));
    }
    return out;
}

} // namespace satedge::harness
