// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace renewal_ks {

/// Neumaier-compensated accumulator. Parity queries are discontinuous in the
/// arrival times, so long prefix sums must stay accurate to a few ulps.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) noexcept {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }

    double value() const noexcept { return sum + comp; }
};

/// floor(n * t) for t >= 0, with the boundary decided on the exact product.
/// A plainly rounded n*t can land on the wrong side of an integer; the fused
/// multiply-add gives the sign of n*t - k without intermediate rounding.
inline std::int64_t floor_scaled(std::int64_t n, double t) {
    const double nd = static_cast<double>(n);
    const double prod = nd * t;
    auto k = static_cast<std::int64_t>(std::floor(prod));
    while (std::fma(nd, t, -static_cast<double>(k + 1)) >= 0.0) ++k;
    while (std::fma(nd, t, -static_cast<double>(k)) < 0.0) --k;
    return k;
}

/// floor(n * i / g) for grid rationals t = i/g, in exact integer arithmetic.
inline std::int64_t floor_scaled(std::int64_t n, std::int64_t i, std::int64_t g) {
    return (n * i) / g;
}

/// Uniform evaluation grid t_i = i/size, i = 0..size.
struct Grid {
    std::int64_t size;

    explicit Grid(std::int64_t size_) : size(size_) {
        if (size < 1) throw std::invalid_argument("grid size must be >= 1");
    }

    std::int64_t points() const noexcept { return size + 1; }

    double t(std::int64_t i) const noexcept {
        return static_cast<double>(i) / static_cast<double>(size);
    }

    std::vector<double> times() const {
        std::vector<double> out;
        out.reserve(static_cast<std::size_t>(points()));
        for (std::int64_t i = 0; i <= size; ++i) out.push_back(t(i));
        return out;
    }
};

/// Linear-interpolation quantile (R type 7) of an unsorted sample.
inline double quantile(std::vector<double> values, double q) {
    if (values.empty()) throw std::invalid_argument("quantile of empty sample");
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("quantile level outside [0,1]");
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= values.size()) return values.back();
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[lo + 1] - values[lo]);
}

}  // namespace renewal_ks
