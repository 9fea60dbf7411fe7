#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "landau/maps.hpp"

namespace landau::verify {

/// Polar sample of the closed disk |z| <= r: `n` rings at equal-area radii
/// r sqrt(k/n) times `n` angles.  Equal-area spacing keeps the innermost
/// rings from bunching up where cubic-flat maps (|z|^2 g composites) squeeze
/// image distances below the collision tolerance.
inline std::vector<cplx> polar_grid(double r, int n) {
    std::vector<cplx> pts;
    pts.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const double ri = r * std::sqrt(static_cast<double>(i) / n);
        for (int j = 0; j < n; ++j)
            pts.push_back(std::polar(ri, 2.0 * std::numbers::pi * j / n));
    }
    return pts;
}

inline constexpr double kImageCollisionTol = 1e-10;
inline constexpr double kDomainSeparationFloor = 1e-6;

struct InjectivityReport {
    double radius = 0.0;
    int grid_n = 0;
    bool pass = false;
    std::optional<std::pair<cplx, cplx>> witness; // domain points, images collide
    std::optional<double> min_separation_ratio;   // |dF|/|dz| over hashed near-pairs
    long pairs_tested = 0;
};

/// Grid falsifier for injectivity of F on |z| <= r.  Images are bucketed on a
/// uniform hash grid of cell width kImageCollisionTol; only pairs landing in
/// the same 3x3 neighborhood are compared, so any two images within the
/// tolerance are necessarily examined.  Passing is evidence, not proof.
inline InjectivityReport injectivity_scan(const std::function<cplx(cplx)>& F,
                                          double r,
                                          int grid_n) {
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("injectivity_scan: r must lie in (0, 1)");
    if (grid_n < 2)
        throw std::invalid_argument("injectivity_scan: grid_n must be >= 2");

    InjectivityReport rep;
    rep.radius = r;
    rep.grid_n = grid_n;
    rep.pass = true;

    const auto pts = polar_grid(r, grid_n);
    std::vector<cplx> img(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) img[i] = F(pts[i]);

    const double w = kImageCollisionTol;
    auto cell_of = [w](double x) { return static_cast<std::int64_t>(std::floor(x / w)); };
    // two odd multipliers plus an avalanche finalizer: a bare xor fold is
    // symmetric under coordinate negation, which a mirror-symmetric grid
    // exercises constantly
    auto key_of = [](std::int64_t cx, std::int64_t cy) {
        std::uint64_t k = static_cast<std::uint64_t>(cx) * 0x9e3779b97f4a7c15ull
                          + static_cast<std::uint64_t>(cy) * 0xc2b2ae3d27d4eb4full;
        k ^= k >> 33;
        k *= 0xff51afd7ed558ccdull;
        k ^= k >> 33;
        return k;
    };

    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
    buckets.reserve(pts.size() * 2);

    double min_ratio = std::numeric_limits<double>::infinity();
    for (std::uint32_t i = 0; i < img.size(); ++i) {
        const std::int64_t cx = cell_of(img[i].real());
        const std::int64_t cy = cell_of(img[i].imag());
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                auto it = buckets.find(key_of(cx + dx, cy + dy));
                if (it == buckets.end()) continue;
                for (std::uint32_t j : it->second) {
                    ++rep.pairs_tested;
                    const double dimg = std::abs(img[i] - img[j]);
                    const double ddom = std::abs(pts[i] - pts[j]);
                    if (ddom > 0.0) min_ratio = std::min(min_ratio, dimg / ddom);
                    if (dimg <= kImageCollisionTol && ddom > kDomainSeparationFloor
                        && rep.pass) {
                        rep.pass = false;
                        rep.witness = std::make_pair(pts[j], pts[i]);
                    }
                }
            }
        }
        buckets[key_of(cx, cy)].push_back(i);
    }
    if (rep.pairs_tested > 0) rep.min_separation_ratio = min_ratio;
    return rep;
}

struct CoverageReport {
    double radius = 0.0;
    double sigma = 0.0;
    int n_targets = 0;
    std::vector<cplx> uncovered;     // winding differs from the consensus +-1
    std::vector<cplx> indeterminate; // curve approached the target too closely
    double max_winding_deviation = 0.0;
    int consensus_winding = 0; // +1 sense-preserving, -1 sense-reversing
    bool pass = false;
};

namespace detail {

// Winding of the closed curve th -> F(r e^{i th}) around w: sum principal
// angle increments, recursively bisecting any segment with an increment of
// pi/4 or more.  Returns nullopt if the curve comes within `near_tol` of w
// or refinement bottoms out.
struct WindingAccum {
    double total = 0.0;
    bool indeterminate = false;
};

inline void winding_segment(const std::function<cplx(double)>& curve,
                            cplx w,
                            double ta, cplx va,
                            double tb, cplx vb,
                            int depth,
                            WindingAccum& acc) {
    if (acc.indeterminate) return;
    const double near_tol = 1e-9;
    if (std::abs(va - w) < near_tol || std::abs(vb - w) < near_tol) {
        acc.indeterminate = true;
        return;
    }
    const double inc = std::arg((vb - w) / (va - w));
    if (std::abs(inc) < std::numbers::pi / 4.0) {
        acc.total += inc;
        return;
    }
    if (depth >= 40) {
        acc.indeterminate = true;
        return;
    }
    const double tm = 0.5 * (ta + tb);
    const cplx vm = curve(tm);
    winding_segment(curve, w, ta, va, tm, vm, depth + 1, acc);
    winding_segment(curve, w, tm, vm, tb, vb, depth + 1, acc);
}

} // namespace detail

/// Winding-number coverage scan: checks that F(|z| = r) winds exactly once
/// (all +1 or all -1) around targets on the rings |w| = {0.3, 0.6, 0.9} sigma.
/// `n_targets` counts per ring.  Valid as a coverage certificate only where
/// injectivity of F inside the curve is already established.
inline CoverageReport schlicht_scan(const std::function<cplx(cplx)>& F,
                                    double r,
                                    double sigma,
                                    int n_boundary = 1024,
                                    int n_targets = 20) {
    if (!(r > 0.0 && r <= 1.0))
        throw std::domain_error("schlicht_scan: r must lie in (0, 1]");
    if (!(sigma > 0.0))
        throw std::domain_error("schlicht_scan: sigma must be positive");
    if (n_boundary < 8 || n_targets < 1)
        throw std::invalid_argument("schlicht_scan: degenerate sampling parameters");

    CoverageReport rep;
    rep.radius = r;
    rep.sigma = sigma;
    rep.n_targets = 3 * n_targets;

    auto curve = std::function<cplx(double)>(
        [&F, r](double th) { return F(std::polar(r, th)); });

    std::vector<double> ths(static_cast<size_t>(n_boundary) + 1);
    std::vector<cplx> vals(static_cast<size_t>(n_boundary) + 1);
    for (int i = 0; i <= n_boundary; ++i) {
        ths[static_cast<size_t>(i)] = 2.0 * std::numbers::pi * i / n_boundary;
        vals[static_cast<size_t>(i)] =
            i == n_boundary ? vals[0] : curve(ths[static_cast<size_t>(i)]);
    }

    std::vector<std::pair<cplx, int>> windings;
    for (int ring = 0; ring < 3; ++ring) {
        const double rw = (0.3 + 0.3 * ring) * sigma;
        for (int k = 0; k < n_targets; ++k) {
            // stagger rings so targets don't line up across rings
            const cplx w = std::polar(rw, 2.0 * std::numbers::pi * (k + 0.5 * ring) / n_targets);
            detail::WindingAccum acc;
            for (int i = 0; i < n_boundary && !acc.indeterminate; ++i)
                detail::winding_segment(curve, w, ths[static_cast<size_t>(i)],
                                        vals[static_cast<size_t>(i)],
                                        ths[static_cast<size_t>(i) + 1],
                                        vals[static_cast<size_t>(i) + 1], 0, acc);
            if (acc.indeterminate) {
                rep.indeterminate.push_back(w);
                continue;
            }
            const double turns = acc.total / (2.0 * std::numbers::pi);
            const double nearest = std::round(turns);
            rep.max_winding_deviation =
                std::max(rep.max_winding_deviation, std::abs(turns - nearest));
            windings.emplace_back(w, static_cast<int>(nearest));
        }
    }

    // Pass iff every determinate winding is +1 (sense-preserving) or every
    // one is -1 (sense-reversing); indeterminate targets don't count against.
    long plus = 0, minus = 0;
    for (const auto& [w, v] : windings) {
        if (v == 1) ++plus;
        if (v == -1) ++minus;
    }
    rep.consensus_winding = plus >= minus ? 1 : -1;
    for (const auto& [w, v] : windings)
        if (v != rep.consensus_winding) rep.uncovered.push_back(w);
    rep.pass = !windings.empty() && rep.uncovered.empty()
               && rep.max_winding_deviation <= 1e-6;
    return rep;
}

/// Minimum Jacobian of F over the equal-area polar grid in |z| <= r; a
/// heuristic sense/degeneracy probe, not a univalence certificate.
inline double min_jacobian(const std::function<Wirtinger(cplx)>& wirt, double r, int grid_n) {
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("min_jacobian: r must lie in (0, 1)");
    if (grid_n < 2)
        throw std::invalid_argument("min_jacobian: grid_n must be >= 2");
    double mn = std::numeric_limits<double>::infinity();
    for (cplx z : polar_grid(r, grid_n))
        mn = std::min(mn, local_distortion(wirt(z)).jac);
    return mn;
}

} // namespace landau::verify
