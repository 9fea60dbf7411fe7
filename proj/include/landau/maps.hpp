#pragma once

#include <cmath>

#include "landau/series.hpp"

namespace landau {

/// Planar harmonic map f = h(z) + conj(g(z)) with analytic h, g.
struct HarmonicMap {
    AnalyticSeries h_part;
    AnalyticSeries g_part;

    static HarmonicMap zero() { return {AnalyticSeries::zero(), AnalyticSeries::zero()}; }

    cplx operator()(cplx z) const { return h_part(z) + std::conj(g_part(z)); }
};

/// Biharmonic map F(z) = |z|^2 g(z) + h(z) with harmonic g, h.
struct BiharmonicMap {
    HarmonicMap g_map;
    HarmonicMap h_map;

    cplx operator()(cplx z) const { return std::norm(z) * g_map(z) + h_map(z); }
};

/// Wirtinger derivatives (f_z, f_zbar) at a point.
struct Wirtinger {
    cplx fz;
    cplx fzbar;
};

inline Wirtinger harmonic_wirtinger(const HarmonicMap& f, cplx z) {
    return {f.h_part.derivative()(z), std::conj(f.g_part.derivative()(z))};
}

/// For F = |z|^2 (g1 + conj g2) + h1 + conj h2:
///   F_z    = conj(z) g(z) + |z|^2 g1'(z) + h1'(z)
///   F_zbar = z g(z) + |z|^2 conj(g2'(z)) + conj(h2'(z))
inline Wirtinger biharmonic_wirtinger(const BiharmonicMap& F, cplx z) {
    const double r2 = std::norm(z);
    const cplx g = F.g_map(z);
    const cplx fz = std::conj(z) * g + r2 * F.g_map.h_part.derivative()(z)
                    + F.h_map.h_part.derivative()(z);
    const cplx fzbar = z * g + r2 * std::conj(F.g_map.g_part.derivative()(z))
                       + std::conj(F.h_map.g_part.derivative()(z));
    return {fz, fzbar};
}

/// lam = | |f_z| - |f_zbar| |,  Lam = |f_z| + |f_zbar|,  jac = |f_z|^2 - |f_zbar|^2.
/// jac is computed as the product (|f_z|+|f_zbar|)(|f_z|-|f_zbar|), so the
/// identity |jac| = Lam * lam holds to the last ulp even when the two moduli
/// nearly cancel.
struct DistortionTriple {
    double lam;
    double Lam;
    double jac;
};

inline DistortionTriple local_distortion(cplx fz, cplx fzbar) {
    const double p = std::abs(fz);
    const double q = std::abs(fzbar);
    return {std::abs(p - q), p + q, (p + q) * (p - q)};
}

inline DistortionTriple local_distortion(const Wirtinger& w) {
    return local_distortion(w.fz, w.fzbar);
}

} // namespace landau
