#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "landau/bounds.hpp"
#include "landau/maps.hpp"

namespace landau::verify {

enum class MapKind { analytic, harmonic, biharmonic };

inline std::string_view kind_name(MapKind k) {
    switch (k) {
        case MapKind::analytic: return "analytic";
        case MapKind::harmonic: return "harmonic";
        case MapKind::biharmonic: return "biharmonic";
    }
    return "?";
}

/// One coefficient-bound check a corpus entry is subject to: `eval` is the
/// (harmonic) part the bound speaks about, `M` its modulus bound, `mode`
/// which bound applies.  All sum-mode parts in this corpus are analytic, so
/// |h| + |g| reduces to |eval|.
struct PartAudit {
    std::string part; // "f", "g" or "h"
    std::function<cplx(cplx)> eval;
    double M = 0.0;
    bounds::BoundMode mode = bounds::BoundMode::bounded_modulus;
};

/// A named test map with closed-form value and Wirtinger evaluators.  Every
/// factory runs a hypothesis audit at construction: modulus bound on a
/// 512-point boundary/interior sample and the declared normalization at 0,
/// both to 1e-10.  A corpus entry that fails its own hypothesis throws.
struct CorpusEntry {
    std::string name;
    MapKind kind = MapKind::analytic;
    std::map<std::string, double> params; // ordered => deterministic reports
    std::function<cplx(cplx)> eval;
    std::function<Wirtinger(cplx)> wirtinger;
    std::vector<PartAudit> audits;
};

namespace detail {

inline constexpr double kHypTol = 1e-10;

// f_{a,n}(z) = M z (a - M z^{n-1}) / (M - a z^{n-1}), 0 <= a <= M, n >= 2.
// At a = M the factor cancels and the map is exactly M z.
inline cplx f_an_eval(double M, double a, int n, cplx z) {
    if (a == M) return M * z;
    const cplx w = ipow(z, n - 1);
    return M * z * (a - M * w) / (M - a * w);
}

// Derivative of f_{a,n}: M [ (a - Mw)(M - aw) + z w' (a^2 - M^2) ] / (M - aw)^2
// with w = z^{n-1}, w' = (n-1) z^{n-2}.
inline cplx f_an_deriv(double M, double a, int n, cplx z) {
    if (a == M) return cplx(M);
    const cplx w = ipow(z, n - 1);
    const cplx wp = static_cast<double>(n - 1) * ipow(z, n - 2);
    const cplx den = M - a * w;
    return M * ((a - M * w) * den + z * wp * (a * a - M * M)) / (den * den);
}

// The vertical-strip extremal: (2M/pi) Im log((1+z)/(1-z)), real-valued,
// = h + conj(g) with h = g = -(2Mi/pi)(z + z^3/3 + z^5/5 + ...).
inline cplx vstrip_eval(double M, cplx z) {
    const cplx w = (1.0 + z) / (1.0 - z);
    return cplx(2.0 * M / std::numbers::pi * std::arg(w), 0.0);
}

inline cplx vstrip_h_deriv(double M, cplx z) {
    return cplx(0.0, -2.0 * M / std::numbers::pi) / (1.0 - z * z);
}

// 512-point sample: 256 boundary points offset half a step (avoids the
// poles of the strip map at +-1) plus 4 interior rings of 64.
inline std::vector<cplx> hypothesis_sample() {
    std::vector<cplx> pts;
    pts.reserve(512);
    for (int k = 0; k < 256; ++k)
        pts.push_back(std::polar(1.0, 2.0 * std::numbers::pi * (k + 0.5) / 256.0));
    for (double r : {0.35, 0.65, 0.9, 0.99})
        for (int k = 0; k < 64; ++k)
            pts.push_back(std::polar(r, 2.0 * std::numbers::pi * (k + 0.25) / 64.0));
    return pts;
}

inline void check_modulus_bound(const CorpusEntry& e) {
    const auto pts = hypothesis_sample();
    for (const PartAudit& audit : e.audits) {
        for (cplx z : pts) {
            const double v = std::abs(audit.eval(z));
            if (!(v <= audit.M + kHypTol))
                throw std::logic_error("corpus " + e.name + ": part '" + audit.part
                                       + "' violates its modulus bound");
        }
    }
}

inline void check_value_at_origin(const CorpusEntry& e) {
    if (std::abs(e.eval(cplx(0.0))) > kHypTol)
        throw std::logic_error("corpus " + e.name + ": map does not vanish at 0");
}

inline void check_lam0(const CorpusEntry& e, double expected) {
    const auto w = e.wirtinger(cplx(0.0));
    const double lam = local_distortion(w).lam;
    if (std::abs(lam - expected) > kHypTol)
        throw std::logic_error("corpus " + e.name + ": lambda(0) normalization fails");
}

inline void check_jac0(const CorpusEntry& e) {
    const auto w = e.wirtinger(cplx(0.0));
    if (std::abs(local_distortion(w).jac - 1.0) > kHypTol)
        throw std::logic_error("corpus " + e.name + ": J(0) = 1 normalization fails");
}

} // namespace detail

/// Classical bounded extremal M z (1 - M z)/(M - z); the a = 1, n = 2 member
/// of the f_{a,n} family.  J(0) = 1, |f| <= M; univalence radius
/// r0 = M - sqrt(M^2-1) with |f'| vanishing at z = r0.
inline CorpusEntry make_landau_classic(double M) {
    if (!(M >= 1.0))
        throw std::domain_error("landau_classic: requires M >= 1");
    CorpusEntry e;
    e.name = "landau_classic";
    e.kind = MapKind::analytic;
    e.params = {{"M", M}};
    e.eval = [M](cplx z) { return detail::f_an_eval(M, 1.0, 2, z); };
    e.wirtinger = [M](cplx z) { return Wirtinger{detail::f_an_deriv(M, 1.0, 2, z), cplx(0.0)}; };
    e.audits = {{"f", e.eval, M, bounds::BoundMode::sum_modulus}};
    detail::check_modulus_bound(e);
    detail::check_value_at_origin(e);
    detail::check_jac0(e);
    return e;
}

/// Harmonic map of the disk onto the vertical strip |Re w| < M... in fact
/// onto the segment (-M, M): real part is zero, so it is nowhere locally
/// univalent, but it is the sharpness witness for the 4M/pi coefficient cap.
inline CorpusEntry make_vstrip(double M) {
    if (!(M > 0.0))
        throw std::domain_error("vstrip: requires M > 0");
    CorpusEntry e;
    e.name = "vstrip";
    e.kind = MapKind::harmonic;
    e.params = {{"M", M}};
    e.eval = [M](cplx z) { return detail::vstrip_eval(M, z); };
    e.wirtinger = [M](cplx z) {
        const cplx hp = detail::vstrip_h_deriv(M, z);
        return Wirtinger{hp, std::conj(hp)}; // g = h
    };
    e.audits = {{"f", e.eval, M, bounds::BoundMode::bounded_modulus}};
    detail::check_modulus_bound(e);
    detail::check_value_at_origin(e);
    return e;
}

/// The strip map precomposed with z^m: moves the sharp coefficient row from
/// n = 1 to n = m.
inline CorpusEntry make_vstrip_m(double M, int m) {
    if (!(M > 0.0))
        throw std::domain_error("vstrip_m: requires M > 0");
    if (m < 1)
        throw std::domain_error("vstrip_m: requires m >= 1");
    CorpusEntry e;
    e.name = "vstrip_m";
    e.kind = MapKind::harmonic;
    e.params = {{"M", M}, {"m", static_cast<double>(m)}};
    e.eval = [M, m](cplx z) { return detail::vstrip_eval(M, ipow(z, m)); };
    e.wirtinger = [M, m](cplx z) {
        const cplx zm = ipow(z, m);
        const cplx hp = cplx(0.0, -2.0 * M / std::numbers::pi) * static_cast<double>(m)
                        * ipow(z, m - 1) / (1.0 - zm * zm);
        return Wirtinger{hp, std::conj(hp)};
    };
    e.audits = {{"f", e.eval, M, bounds::BoundMode::bounded_modulus}};
    detail::check_modulus_bound(e);
    detail::check_value_at_origin(e);
    return e;
}

/// f_{a,n}(z) = M z (a - M z^{n-1})/(M - a z^{n-1}) = a z - (M - a^2/M) z^n - ...
/// Sharp for the sum-normalized bound at row n: |a_n| = M - a^2/M.
inline CorpusEntry make_f_an(double M, double a, int n) {
    if (!(M > 0.0))
        throw std::domain_error("f_an: requires M > 0");
    if (!(a >= 0.0 && a <= M))
        throw std::domain_error("f_an: requires 0 <= a <= M");
    if (n < 2)
        throw std::domain_error("f_an: requires n >= 2");
    CorpusEntry e;
    e.name = "f_an";
    e.kind = MapKind::analytic;
    e.params = {{"M", M}, {"a", a}, {"n", static_cast<double>(n)}};
    e.eval = [M, a, n](cplx z) { return detail::f_an_eval(M, a, n, z); };
    e.wirtinger = [M, a, n](cplx z) {
        return Wirtinger{detail::f_an_deriv(M, a, n, z), cplx(0.0)};
    };
    e.audits = {{"f", e.eval, M, bounds::BoundMode::sum_modulus}};
    detail::check_modulus_bound(e);
    detail::check_value_at_origin(e);
    detail::check_lam0(e, a);
    return e;
}

/// conj(f_{a,n}(z)): the sense-reversing twin; h = 0, g = f_{a,n}.
inline CorpusEntry make_f_an_conj(double M, double a, int n) {
    CorpusEntry e = make_f_an(M, a, n); // validates parameters + hypothesis
    e.name = "f_an_conj";
    e.eval = [M, a, n](cplx z) { return std::conj(detail::f_an_eval(M, a, n, z)); };
    e.wirtinger = [M, a, n](cplx z) {
        return Wirtinger{cplx(0.0), std::conj(detail::f_an_deriv(M, a, n, z))};
    };
    e.audits = {{"f", e.eval, M, bounds::BoundMode::sum_modulus}};
    detail::check_value_at_origin(e);
    detail::check_lam0(e, a);
    return e;
}

/// Biharmonic F(z) = |z|^2 f_{1,2}(z; M): the g-only composite matching the
/// hypotheses of every |z|^2 g theorem row (lambda_g(0) = 1, J_g(0) = 1,
/// |g| <= M).
inline CorpusEntry make_bi_g_only(double M) {
    if (!(M >= 1.0))
        throw std::domain_error("bi_g_only: requires M >= 1");
    CorpusEntry e;
    e.name = "bi_g_only";
    e.kind = MapKind::biharmonic;
    e.params = {{"M", M}};
    auto g = [M](cplx z) { return detail::f_an_eval(M, 1.0, 2, z); };
    auto gp = [M](cplx z) { return detail::f_an_deriv(M, 1.0, 2, z); };
    e.eval = [g](cplx z) { return std::norm(z) * g(z); };
    e.wirtinger = [g, gp](cplx z) {
        const cplx gv = g(z);
        return Wirtinger{std::conj(z) * gv + std::norm(z) * gp(z), z * gv};
    };
    e.audits = {{"g", g, M, bounds::BoundMode::sum_modulus}};
    detail::check_modulus_bound(e);
    detail::check_value_at_origin(e);
    return e;
}

/// Biharmonic F(z) = |z|^2 (M1 z) + f_{1,2}(z; M2): the two-part composite
/// matching the |z|^2 g + h rows (|g| <= M1, |h| <= M2, lambda_h(0) = J_h(0) = 1).
inline CorpusEntry make_bi_gh(double M1, double M2) {
    if (!(M1 >= 0.0))
        throw std::domain_error("bi_gh: requires M1 >= 0");
    if (!(M2 >= 1.0))
        throw std::domain_error("bi_gh: requires M2 >= 1");
    CorpusEntry e;
    e.name = "bi_gh";
    e.kind = MapKind::biharmonic;
    e.params = {{"M1", M1}, {"M2", M2}};
    auto g = [M1](cplx z) { return M1 * z; };
    auto h = [M2](cplx z) { return detail::f_an_eval(M2, 1.0, 2, z); };
    auto hp = [M2](cplx z) { return detail::f_an_deriv(M2, 1.0, 2, z); };
    e.eval = [g, h](cplx z) { return std::norm(z) * g(z) + h(z); };
    e.wirtinger = [g, hp, M1](cplx z) {
        return Wirtinger{std::conj(z) * g(z) + std::norm(z) * M1 + hp(z), z * g(z)};
    };
    e.audits = {{"g", g, M1, bounds::BoundMode::bounded_modulus},
                {"h", h, M2, bounds::BoundMode::sum_modulus}};
    detail::check_modulus_bound(e);
    detail::check_value_at_origin(e);
    // h carries both normalizations: lambda_h(0) = 1 and J_h(0) = 1.
    if (std::abs(hp(cplx(0.0)) - cplx(1.0)) > detail::kHypTol)
        throw std::logic_error("corpus bi_gh: h normalization fails");
    return e;
}

/// Name-driven factory for the CLI.  Unknown names or missing parameters
/// throw std::domain_error.
inline CorpusEntry corpus(const std::string& name, const std::map<std::string, double>& params) {
    auto get = [&](const char* key) -> double {
        auto it = params.find(key);
        if (it == params.end())
            throw std::domain_error("corpus " + name + ": missing parameter " + key);
        return it->second;
    };
    if (name == "landau_classic") return make_landau_classic(get("M"));
    if (name == "vstrip") return make_vstrip(get("M"));
    if (name == "vstrip_m") return make_vstrip_m(get("M"), static_cast<int>(get("m")));
    if (name == "f_an") return make_f_an(get("M"), get("a"), static_cast<int>(get("n")));
    if (name == "f_an_conj")
        return make_f_an_conj(get("M"), get("a"), static_cast<int>(get("n")));
    if (name == "bi_g_only") return make_bi_g_only(get("M"));
    if (name == "bi_gh") return make_bi_gh(get("M1"), get("M2"));
    throw std::domain_error("corpus: unknown map '" + name
                            + "' (valid: landau_classic, vstrip, vstrip_m, f_an, "
                              "f_an_conj, bi_g_only, bi_gh)");
}

struct CorpusSignature {
    std::string name;
    MapKind kind;
    std::vector<std::string> params;
    std::string hypothesis;
};

inline std::vector<CorpusSignature> corpus_signatures() {
    return {
        {"landau_classic", MapKind::analytic, {"M"}, "|f| <= M, J(0) = 1"},
        {"vstrip", MapKind::harmonic, {"M"}, "|f| <= M"},
        {"vstrip_m", MapKind::harmonic, {"M", "m"}, "|f| <= M"},
        {"f_an", MapKind::analytic, {"M", "a", "n"}, "|f| <= M, lambda(0) = a"},
        {"f_an_conj", MapKind::analytic, {"M", "a", "n"}, "|f| <= M, lambda(0) = a"},
        {"bi_g_only", MapKind::biharmonic, {"M"}, "F = |z|^2 g, |g| <= M, lambda_g(0) = J_g(0) = 1"},
        {"bi_gh", MapKind::biharmonic, {"M1", "M2"},
         "F = |z|^2 g + h, |g| <= M1, |h| <= M2, lambda_h(0) = J_h(0) = 1"},
    };
}

/// The fixed parameter set exercised by the test-suite-wide sweeps
/// (derivative cross-checks, coefficient audits).
inline std::vector<CorpusEntry> standard_corpus() {
    std::vector<CorpusEntry> out;
    out.push_back(make_landau_classic(1.5));
    out.push_back(make_landau_classic(2.0));
    out.push_back(make_landau_classic(4.0));
    out.push_back(make_vstrip(1.0));
    out.push_back(make_vstrip(2.0));
    out.push_back(make_vstrip(5.0));
    out.push_back(make_vstrip_m(2.0, 3));
    out.push_back(make_f_an(2.0, 1.0, 3));
    out.push_back(make_f_an(3.0, 2.0, 2));
    out.push_back(make_f_an_conj(2.0, 1.0, 3));
    out.push_back(make_bi_g_only(1.5));
    out.push_back(make_bi_g_only(3.0));
    out.push_back(make_bi_gh(1.0, 2.0));
    out.push_back(make_bi_gh(0.5, 3.0));
    return out;
}

} // namespace landau::verify
