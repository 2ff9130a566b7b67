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
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "satedge/errors.hpp"

namespace satedge::numerics {

/// Polynomial in power basis; coefficient i multiplies x^i.
class Polynomial {
public:
    Polynomial() : coeffs_{0.0} {}
    explicit Polynomial(std::vector<double> coefficients) : coeffs_(std::move(coefficients)) {
        if (coeffs_.empty()) coeffs_.push_back(0.0);
    }

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const std::vector<double>& coefficients() const noexcept { return coeffs_; }

    double operator()(double x) const noexcept {
        double acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// The same polynomial expressed in t = (x - center) / half_width, i.e.
    /// q(t) = p(center + half_width * t). Used to inspect coefficients on
    /// the normalized interval [-1, 1].
    Polynomial rescaled(double lo, double hi) const {
        const double center = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        return compose_affine(center, half);
    }

    /// p(offset + factor * t) as a polynomial in t.
    Polynomial compose_affine(double offset, double factor) const {
        const std::size_t n = coeffs_.size();
        std::vector<double> out(n, 0.0);
        // Horner over polynomials: acc <- acc * (offset + factor t) + c_k
        for (std::size_t k = n; k-- > 0;) {
            std::vector<double> next(n, 0.0);
            for (std::size_t j = 0; j < n; ++j) {
                if (out[j] == 0.0) continue;
                next[j] += out[j] * offset;
                if (j + 1 < n) next[j + 1] += out[j] * factor;
            }
            next[0] += coeffs_[k];
            out = std::move(next);
        }
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<double> coeffs_;
};

/// Coefficient of determination of `fit` against (xs, ys). Returns 1 when
/// ys is constant and reproduced exactly.
inline double r_squared(const Polynomial& fit, std::span<const double> xs, std::span<const double> ys) {
    const double mean = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
    double ss_res = 0.0;
    double ss_tot = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - fit(xs[i]);
        ss_res += r * r;
        ss_tot += (ys[i] - mean) * (ys[i] - mean);
    }
    const double scale = std::max(1.0, mean * mean) * static_cast<double>(ys.size());
    if (ss_tot <= 1e-28 * scale) return ss_res <= 1e-24 * scale ? 1.0 : 0.0;
    return 1.0 - ss_res / ss_tot;
}

/// Least-squares polynomial of the given degree. The abscissae are mapped
/// affinely onto [-1, 1], the Vandermonde system is solved by Householder QR,
/// and the coefficients are mapped back to the original variable.
inline Polynomial polyfit(std::span<const double> xs, std::span<const double> ys, int degree) {
    if (degree < 0) throw DomainError("polyfit: degree must be nonnegative");
    if (xs.size() != ys.size()) throw DomainError("polyfit: xs and ys differ in length");
    const std::size_t n = xs.size();
    const std::size_t m = static_cast<std::size_t>(degree) + 1;
    if (n < m) throw EstimationError("polyfit: fewer points than coefficients");

    const auto [min_it, max_it] = std::minmax_element(xs.begin(), xs.end());
    const double lo = *min_it;
    const double hi = *max_it;
    double center = 0.5 * (lo + hi);
    double half = 0.5 * (hi - lo);
    if (!(half > 0.0)) {
        if (degree > 0) throw EstimationError("polyfit: all abscissae identical, design is rank-deficient");
        half = 1.0;
    }

    // Column-major design matrix A (n x m) and right-hand side b.
    std::vector<double> a(n * m);
    std::vector<double> b(ys.begin(), ys.end());
    for (std::size_t i = 0; i < n; ++i) {
        const double t = (xs[i] - center) / half;
        double p = 1.0;
        for (std::size_t j = 0; j < m; ++j) {
            a[j * n + i] = p;
            p *= t;
        }
    }

    std::vector<double> rdiag(m);
    double rmax = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        double* col = &a[k * n];
        double norm = 0.0;
        for (std::size_t i = k; i < n; ++i) norm = std::hypot(norm, col[i]);
        if (norm == 0.0) throw EstimationError("polyfit: design matrix is rank-deficient");
        if (col[k] > 0.0) norm = -norm;
        for (std::size_t i = k; i < n; ++i) col[i] /= -norm;
        col[k] += 1.0;
        for (std::size_t j = k + 1; j < m; ++j) {
            double* cj = &a[j * n];
            double s = 0.0;
            for (std::size_t i = k; i < n; ++i) s += col[i] * cj[i];
            s = -s / col[k];
            for (std::size_t i = k; i < n; ++i) cj[i] += s * col[i];
        }
        double s = 0.0;
        for (std::size_t i = k; i < n; ++i) s += col[i] * b[i];
        s = -s / col[k];
        for (std::size_t i = k; i < n; ++i) b[i] += s * col[i];
        rdiag[k] = norm;
        rmax = std::max(rmax, std::abs(norm));
    }
    for (std::size_t k = 0; k < m; ++k) {
        if (std::abs(rdiag[k]) <= 1e-12 * rmax)
            throw EstimationError("polyfit: design matrix is rank-deficient");
    }

    // Back substitution R c = Q^T b; R's strict upper part sits above the diagonal of a.
    std::vector<double> c(m);
    for (std::size_t k = m; k-- > 0;) {
        double s = b[k];
        for (std::size_t j = k + 1; j < m; ++j) s -= a[j * n + k] * c[j];
        c[k] = s / rdiag[k];
    }

    // q(t) with t = (x - center) / half  ->  p(x) = q(-center/half + x/half)
    return Polynomial(std::move(c)).compose_affine(-center / half, 1.0 / half);
}

} // namespace satedge::numerics
