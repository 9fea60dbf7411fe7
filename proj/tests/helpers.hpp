#pragma once

#include <functional>
#include <random>
#include <vector>

#include "landau/maps.hpp"
#include "landau/series.hpp"

namespace landau::testing {

// Every randomized test runs from a fixed seed so failures replay exactly.
inline std::mt19937_64 rng(0x5eed5eedULL);

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline cplx random_point(double rmax) {
    const double r = rmax * std::sqrt(uniform(0.0, 1.0));
    return std::polar(r, uniform(0.0, 2.0 * std::numbers::pi));
}

inline cplx random_coeff(double scale = 1.0) {
    return cplx(uniform(-scale, scale), uniform(-scale, scale));
}

inline AnalyticSeries random_series(int order, double scale = 1.0) {
    std::vector<cplx> c(static_cast<size_t>(order) + 1);
    for (auto& v : c) v = random_coeff(scale);
    return AnalyticSeries(std::move(c));
}

/// Independent Wirtinger oracle: central differences along the two real axes,
///   f_z = (f_x - i f_y)/2,  f_zbar = (f_x + i f_y)/2.
inline Wirtinger fd_wirtinger(const std::function<cplx(cplx)>& f, cplx z, double h = 1e-5) {
    const cplx fx = (f(z + h) - f(z - h)) / (2.0 * h);
    const cplx fy = (f(z + cplx(0.0, h)) - f(z - cplx(0.0, h))) / (2.0 * h);
    const cplx i(0.0, 1.0);
    return {0.5 * (fx - i * fy), 0.5 * (fx + i * fy)};
}

inline double rel_err(cplx got, cplx want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

} // namespace landau::testing
