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

// Learning the execution-time law from samples: BSP moment estimators,
// per-frequency Gamma fits regressed into a frequency model, and the
// subset-size study that measures how estimation error turns into deadline
// misses.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "satedge/compute.hpp"
#include "satedge/errors.hpp"
#include "satedge/numerics/gamma.hpp"
#include "satedge/numerics/polynomial.hpp"
#include "satedge/numerics/random.hpp"
#include "satedge/scheduler.hpp"

namespace satedge::estimation {

using compute::GammaLaw;
using compute::Platform;
using numerics::GammaFit;
using numerics::Polynomial;

struct ExecSample {
    double frequency_hz = 0.0;
    double time_s = 0.0;
    std::string image_id;
};

/// Execution times keyed by the frequency they were measured at.
using SamplesByFrequency = std::map<double, std::vector<double>>;

inline SamplesByFrequency group_by_frequency(std::span<const ExecSample> samples) {
    SamplesByFrequency out;
    for (const auto& s : samples) out[s.frequency_hz].push_back(s.time_s);
    return out;
}

struct BspMoments {
    double mu_c = 0.0;
    double mu_sync_s = 0.0;
};

/// Least-squares estimates of (mu_C, mu_sync) from execution times measured
/// at several frequencies. The regressor is W / (N_cores N_FLOPs f) so the
/// slope is mu_C directly.
inline BspMoments estimate_bsp_moments(std::span<const ExecSample> samples, const Platform& platform) {
    if (samples.size() < 2) throw EstimationError("estimate_bsp_moments: need at least two samples");
    std::set<double> distinct;
    for (const auto& s : samples) {
        if (!(s.time_s > 0.0)) throw DomainError("estimate_bsp_moments: execution times must be positive");
        if (!(s.frequency_hz > 0.0)) throw DomainError("estimate_bsp_moments: frequencies must be positive");
        distinct.insert(s.frequency_hz);
    }
    if (distinct.size() < 2)
        throw EstimationError("estimate_bsp_moments: samples cover a single frequency, slope is not identifiable");

    const double n = static_cast<double>(samples.size());
    const double k = platform.work_flops / platform.flops_per_cycle();
    double sum_t = 0.0, sum_x = 0.0, sum_tx = 0.0, sum_xx = 0.0;
    for (const auto& s : samples) {
        const double x = k / s.frequency_hz;
        sum_t += s.time_s;
        sum_x += x;
        sum_tx += s.time_s * x;
        sum_xx += x * x;
    }
    const double mu_c = (sum_t * sum_x / n - sum_tx) / (sum_x * sum_x / n - sum_xx);
    const double mu_sync = sum_t / n - mu_c * sum_x / n;
    return {mu_c, mu_sync};
}

/// Shape and scale as polynomials in frequency, plus the per-frequency fits
/// they were regressed from.
class FrequencyModel {
public:
    /// Regresses the fitted shapes and scales on frequency. Throws
    /// EstimationError if either polynomial is non-positive anywhere on
    /// [f_lo, f_hi] (checked on a 1000-point grid).
    static FrequencyModel from_fits(std::map<double, GammaFit> fits, int degree, double f_lo, double f_hi) {
        if (fits.size() < static_cast<std::size_t>(degree) + 1)
            throw EstimationError("fit_frequency_model: need at least degree + 1 distinct frequencies");
        std::vector<double> fs, alphas, thetas;
        for (const auto& [f, fit] : fits) {
            fs.push_back(f);
            alphas.push_back(fit.law.shape);
            thetas.push_back(fit.law.scale);
        }
        FrequencyModel m;
        m.alpha_ = numerics::polyfit(fs, alphas, degree);
        m.theta_ = numerics::polyfit(fs, thetas, degree);
        m.r2_alpha_ = numerics::r_squared(m.alpha_, fs, alphas);
        m.r2_theta_ = numerics::r_squared(m.theta_, fs, thetas);
        m.degree_ = degree;
        m.f_lo_ = f_lo;
        m.f_hi_ = f_hi;
        m.fits_ = std::move(fits);
        m.check_positive();
        return m;
    }

    /// Same regression applied to known laws (e.g. an exact ground truth).
    static FrequencyModel from_laws(const std::map<double, GammaLaw>& laws, int degree, double f_lo, double f_hi) {
        std::map<double, GammaFit> fits;
        for (const auto& [f, law] : laws) fits[f] = GammaFit{law, 0, false};
        return from_fits(std::move(fits), degree, f_lo, f_hi);
    }

    GammaLaw law_at(double f_hz) const {
        const double a = alpha_(f_hz);
        const double t = theta_(f_hz);
        if (!(a > 0.0) || !(t > 0.0)) throw DomainError("FrequencyModel: non-positive shape or scale at requested frequency");
        return GammaLaw{a, t};
    }

    const Polynomial& alpha_poly() const noexcept { return alpha_; }
    const Polynomial& theta_poly() const noexcept { return theta_; }
    const std::map<double, GammaFit>& per_frequency_fits() const noexcept { return fits_; }
    int degree() const noexcept { return degree_; }
    double r2_alpha() const noexcept { return r2_alpha_; }
    double r2_theta() const noexcept { return r2_theta_; }
    double f_lo() const noexcept { return f_lo_; }
    double f_hi() const noexcept { return f_hi_; }

private:
    void check_positive() const {
        constexpr int n = 1000;
        for (int i = 0; i < n; ++i) {
            const double f = f_lo_ + (f_hi_ - f_lo_) * i / (n - 1);
            if (!(alpha_(f) > 0.0) || !(theta_(f) > 0.0)) {
                std::ostringstream os;
                os << "fit_frequency_model: regressed shape/scale not positive at f = " << f << " Hz";
                throw EstimationError(os.str());
            }
        }
    }

    Polynomial alpha_;
    Polynomial theta_;
    std::map<double, GammaFit> fits_;
    int degree_ = 0;
    double r2_alpha_ = 0.0;
    double r2_theta_ = 0.0;
    double f_lo_ = 0.0;
    double f_hi_ = 0.0;
};

/// Per-frequency MLE followed by degree-L regression. The positivity range
/// defaults to the span of the sampled frequencies.
inline FrequencyModel fit_frequency_model(const SamplesByFrequency& samples, int degree, double f_lo = 0.0,
                                          double f_hi = 0.0) {
    if (samples.empty()) throw EstimationError("fit_frequency_model: no samples");
    if (!(f_hi > f_lo)) {
        f_lo = samples.begin()->first;
        f_hi = samples.rbegin()->first;
    }
    std::map<double, GammaFit> fits;
    for (const auto& [f, times] : samples) {
        try {
            fits[f] = numerics::fit_gamma_mle(times);
        } catch (const std::exception& e) {
            std::ostringstream os;
            os << "fit_frequency_model at f = " << f << " Hz: " << e.what();
            throw EstimationError(os.str());
        }
    }
    return FrequencyModel::from_fits(std::move(fits), degree, f_lo, f_hi);
}

/// N_s uniform draws with replacement from `dataset`.
template <class T, numerics::Generator64 G>
std::vector<T> draw_subset(std::span<const T> dataset, std::size_t n_s, G& rng) {
    if (dataset.empty()) throw DomainError("draw_subset: dataset is empty");
    std::vector<T> out;
    out.reserve(n_s);
    for (std::size_t i = 0; i < n_s; ++i) out.push_back(dataset[numerics::uniform_index(rng, dataset.size())]);
    return out;
}

/// Probability that a batch scheduled at f_hat misses t_proc under the
/// ground-truth execution-time law.
template <compute::ExecTimeModel Truth>
double miss_probability(double f_hat_hz, const Truth& ground_truth, double t_proc_s, std::int64_t n_img) {
    if (!(t_proc_s > 0.0)) throw DomainError("miss_probability: t_proc must be positive");
    return compute::batch_law(ground_truth.law_at(f_hat_hz), n_img).sf(t_proc_s);
}

/// Source of synthetic executions: a fixed frequency grid and per-image
/// draws at each grid frequency.
template <class S>
concept WorkloadSimulator = requires(const S& s, std::uint32_t image, std::size_t freq_index,
                                     numerics::Xoshiro256& rng) {
    { s.frequencies() } -> std::convertible_to<const std::vector<double>&>;
    { s.n_images() } -> std::convertible_to<std::size_t>;
    { s.sample(image, freq_index, rng) } -> std::convertible_to<double>;
};

struct ReplicateRecord {
    std::int64_t sample_size = 0;
    int replicate = 0;
    double f_hat_hz = 0.0;
    double p_miss = 0.0;
    /// The subset model could not meet rho_th anywhere, or could not be fit;
    /// f_max was used.
    bool infeasible = false;
};

struct Summary {
    double mean = 0.0;
    double p05 = 0.0;
    double p25 = 0.0;
    double p75 = 0.0;
    double p95 = 0.0;
    double min = 0.0;
    double max = 0.0;

    double iqr() const noexcept { return p75 - p25; }
};

/// Linear-interpolation percentile (type 7) of an unsorted sample.
inline double percentile(std::vector<double> v, double q) {
    if (v.empty()) throw DomainError("percentile: empty sample");
    std::sort(v.begin(), v.end());
    const double pos = q * static_cast<double>(v.size() - 1);
    const auto i = static_cast<std::size_t>(std::floor(pos));
    if (i + 1 >= v.size()) return v.back();
    return v[i] + (pos - static_cast<double>(i)) * (v[i + 1] - v[i]);
}

inline Summary summarize(const std::vector<double>& v) {
    Summary s;
    double sum = 0.0;
    for (double x : v) sum += x;
    s.mean = sum / static_cast<double>(v.size());
    s.p05 = percentile(v, 0.05);
    s.p25 = percentile(v, 0.25);
    s.p75 = percentile(v, 0.75);
    s.p95 = percentile(v, 0.95);
    s.min = *std::min_element(v.begin(), v.end());
    s.max = *std::max_element(v.begin(), v.end());
    return s;
}

struct SubsetStudyResult {
    std::int64_t sample_size = 0;
    std::vector<ReplicateRecord> replicates;
    Summary p_miss;
    int infeasible_count = 0;
};

struct StudyOptions {
    std::vector<std::int64_t> sample_sizes{10, 30, 100, 300, 1000, 3000, 10000};
    int replicates = 100;
    double t_proc_s = 0.5;
    std::int64_t n_img = 1;
    double rho_th = 0.95;
    int degree = 3;
    std::uint64_t root_seed = 1;
    scheduler::SearchOptions search{};
};

/// Generator of replicate k at sample size n_s. Depends only on the root
/// seed and (n_s, k), so results do not depend on evaluation order.
inline numerics::Xoshiro256 replicate_rng(std::uint64_t root_seed, std::int64_t n_s, int k) {
    return numerics::Xoshiro256(
        numerics::derive_seed(root_seed, {static_cast<std::uint64_t>(n_s), static_cast<std::uint64_t>(k)}));
}

/// One replicate: draw N_s images, execute each once per grid frequency,
/// fit a subset model, choose f under it, and score that choice under the
/// ground truth.
template <compute::ExecTimeModel Truth, WorkloadSimulator Sim>
ReplicateRecord run_replicate(const Truth& ground_truth, const Sim& sim, const Platform& platform,
                              const StudyOptions& opts, std::int64_t n_s, int k) {
    if (n_s < 2) throw DomainError("sample_size_study: each sample size must be >= 2 for the MLE");
    auto rng = replicate_rng(opts.root_seed, n_s, k);
    std::vector<std::uint32_t> ids(sim.n_images());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<std::uint32_t>(i);
    const auto subset = draw_subset<std::uint32_t>(ids, static_cast<std::size_t>(n_s), rng);

    const auto& freqs = sim.frequencies();
    SamplesByFrequency samples;
    for (std::size_t j = 0; j < freqs.size(); ++j) {
        auto& column = samples[freqs[j]];
        column.reserve(subset.size());
        for (std::uint32_t image : subset) column.push_back(sim.sample(image, j, rng));
    }

    const scheduler::LatencyBudget budget{opts.t_proc_s, 0.0, 0.0, 0.0};
    ReplicateRecord rec;
    rec.sample_size = n_s;
    rec.replicate = k;
    try {
        const auto model = fit_frequency_model(samples, opts.degree, platform.f_min_hz, platform.f_max_hz);
        rec.f_hat_hz = scheduler::optimal_frequency(model, budget, opts.n_img, opts.rho_th, platform, opts.search)
                           .frequency_hz;
    } catch (const InfeasibleError&) {
        rec.f_hat_hz = platform.f_max_hz;
        rec.infeasible = true;
    } catch (const EstimationError&) {
        rec.f_hat_hz = platform.f_max_hz;
        rec.infeasible = true;
    }
    rec.p_miss = std::clamp(miss_probability(rec.f_hat_hz, ground_truth, opts.t_proc_s, opts.n_img), 0.0, 1.0);
    return rec;
}

/// Deadline-miss probability of subset-trained schedulers across sample sizes.
template <compute::ExecTimeModel Truth, WorkloadSimulator Sim>
std::vector<SubsetStudyResult> sample_size_study(const Truth& ground_truth, const Sim& sim, const Platform& platform,
                                                 const StudyOptions& opts) {
    if (opts.replicates < 1) throw DomainError("sample_size_study: K must be >= 1");
    std::vector<SubsetStudyResult> out;
    for (std::int64_t n_s : opts.sample_sizes) {
        SubsetStudyResult res;
        res.sample_size = n_s;
        std::vector<double> p;
        for (int k = 0; k < opts.replicates; ++k) {
            res.replicates.push_back(run_replicate(ground_truth, sim, platform, opts, n_s, k));
            p.push_back(res.replicates.back().p_miss);
            res.infeasible_count += res.replicates.back().infeasible ? 1 : 0;
        }
        res.p_miss = summarize(p);
        out.push_back(std::move(res));
    }
    return out;
}

} // namespace satedge::estimation
