#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "landau/bounds.hpp"

namespace landau::radii {

/// Family I: rho is the unique root in (0,1) of
///   phi(r) = lam - 2 m1 r - c1 r^2/(1-r)^2 - c2 (2r - r^2)/(1-r)^2,
/// and sigma = lam rho - c1 rho^3/(1-rho) - c2 rho^2/(1-rho).
///
/// Family II: rho is the smaller root of (a+3b) r^2 - (2a+4b) r + a = 0,
/// i.e. rho = a / (a + 2b + sqrt(ab + 4b^2)), and sigma = a rho^3 - b rho^4/(1-rho).
enum class Family { I, II };

struct RadiusSpec {
    Family family = Family::I;
    double lam_or_alpha = 1.0; // lam (I) or alpha (II)
    double m1 = 0.0;           // I only: linear coefficient
    double c1 = 0.0;           // I only: r^2/(1-r)^2 coefficient
    double c2_or_beta = 0.0;   // c2 (I) or beta (II)
};

struct RadiusResult {
    double rho = 0.0;
    double sigma = 0.0;
    double residual = 0.0; // |phi(rho)| (I) or |quadratic(rho)| (II)
    int iterations = 0;
    bool unconstrained = false;  // family I: phi stayed positive on (0, 1)
    bool sigma_positive = true;  // sigma <= 0 is a warning, not an error
};

inline double family1_phi(const RadiusSpec& s, double r) {
    const double om = 1.0 - r;
    return s.lam_or_alpha - 2.0 * s.m1 * r - s.c1 * r * r / (om * om)
           - s.c2_or_beta * (2.0 * r - r * r) / (om * om);
}

namespace detail {

inline void check_family1(const RadiusSpec& s) {
    if (s.family != Family::I)
        throw std::invalid_argument("family1: spec is not family I");
    if (!(s.lam_or_alpha > 0.0))
        throw std::domain_error("family1: lam must be positive");
    if (s.m1 < 0.0 || s.c1 < 0.0 || s.c2_or_beta < 0.0)
        throw std::domain_error("family1: coefficients must be >= 0");
}

inline void check_family2(const RadiusSpec& s) {
    if (s.family != Family::II)
        throw std::invalid_argument("family2: spec is not family II");
    if (!(s.lam_or_alpha > 0.0))
        throw std::domain_error("family2: alpha must be positive");
    if (s.c2_or_beta < 0.0)
        throw std::domain_error("family2: beta must be >= 0");
}

} // namespace detail

/// sigma for a family-I spec at a solved rho.  rho = 1 is only meaningful in
/// the degenerate linear case c1 = c2 = 0, where sigma = lam * rho.
inline double family1_schlicht(const RadiusSpec& s, double rho) {
    detail::check_family1(s);
    if (!(rho > 0.0) || rho > 1.0)
        throw std::domain_error("family1_schlicht: rho must lie in (0, 1]");
    if (rho == 1.0) {
        if (s.c1 == 0.0 && s.c2_or_beta == 0.0) return s.lam_or_alpha;
        throw std::domain_error("family1_schlicht: sigma undefined at rho = 1");
    }
    const double om = 1.0 - rho;
    return s.lam_or_alpha * rho - s.c1 * rho * rho * rho / om - s.c2_or_beta * rho * rho / om;
}

/// Bisection on (0, 1 - 1e-12].  phi(0) = lam > 0 and phi is strictly
/// decreasing whenever any coefficient is positive, so the sign change
/// brackets the unique root.  If phi never goes negative the whole disk
/// works: rho = 1 with the unconstrained flag set.
inline RadiusResult family1_solve(const RadiusSpec& s, double tol = 1e-13) {
    detail::check_family1(s);
    if (!(tol > 0.0))
        throw std::domain_error("family1_solve: tol must be positive");

    RadiusResult res;
    const double hi0 = 1.0 - 1e-12;
    if (family1_phi(s, hi0) > 0.0) {
        res.rho = 1.0;
        res.unconstrained = true;
        res.sigma = family1_schlicht(s, 1.0); // only reachable with c1 = c2 = 0
        res.sigma_positive = res.sigma > 0.0;
        return res;
    }
    double lo = 0.0, hi = hi0;
    int it = 0;
    while (hi - lo > tol && it < 200) {
        const double mid = 0.5 * (lo + hi);
        (family1_phi(s, mid) > 0.0 ? lo : hi) = mid;
        ++it;
    }
    res.rho = 0.5 * (lo + hi);
    res.iterations = it;
    res.residual = std::abs(family1_phi(s, res.rho));
    res.sigma = family1_schlicht(s, res.rho);
    res.sigma_positive = res.sigma > 0.0;
    return res;
}

/// sigma for a family-II spec at a solved rho; at the sharp point rho = 1
/// (beta = 0) sigma = alpha.
inline double family2_schlicht(const RadiusSpec& s, double rho) {
    detail::check_family2(s);
    if (!(rho > 0.0) || rho > 1.0)
        throw std::domain_error("family2_schlicht: rho must lie in (0, 1]");
    if (rho == 1.0) {
        if (s.c2_or_beta == 0.0) return s.lam_or_alpha;
        throw std::domain_error("family2_schlicht: sigma undefined at rho = 1");
    }
    const double r3 = rho * rho * rho;
    return s.lam_or_alpha * r3 - s.c2_or_beta * r3 * rho / (1.0 - rho);
}

/// Closed form for the smaller root; beta = 0 degenerates to rho = 1 exactly.
inline RadiusResult family2_solve(const RadiusSpec& s) {
    detail::check_family2(s);
    const double a = s.lam_or_alpha;
    const double b = s.c2_or_beta;

    RadiusResult res;
    res.rho = a / (a + 2.0 * b + std::sqrt(a * b + 4.0 * b * b));
    res.residual = std::abs((a + 3.0 * b) * res.rho * res.rho - (2.0 * a + 4.0 * b) * res.rho + a);
    res.sigma = family2_schlicht(s, res.rho);
    res.sigma_positive = res.sigma > 0.0;
    return res;
}

/// The fourteen tabulated radius variants.  A-G follow the original results;
/// T/C rows are the refined ones, with "p" marking the primed sharpenings.
enum class Theorem { A, B, D, E, F, G, T26, T26p, T28, T28p, T210, T210p, C212, C212p };

inline constexpr std::array<Theorem, 14> kAllTheorems = {
    Theorem::A,    Theorem::B,    Theorem::D,    Theorem::E,   Theorem::F,
    Theorem::G,    Theorem::T26,  Theorem::T26p, Theorem::T28, Theorem::T28p,
    Theorem::T210, Theorem::T210p, Theorem::C212, Theorem::C212p};

inline std::string_view theorem_name(Theorem t) {
    switch (t) {
        case Theorem::A: return "A";
        case Theorem::B: return "B";
        case Theorem::D: return "D";
        case Theorem::E: return "E";
        case Theorem::F: return "F";
        case Theorem::G: return "G";
        case Theorem::T26: return "T26";
        case Theorem::T26p: return "T26p";
        case Theorem::T28: return "T28";
        case Theorem::T28p: return "T28p";
        case Theorem::T210: return "T210";
        case Theorem::T210p: return "T210p";
        case Theorem::C212: return "C212";
        case Theorem::C212p: return "C212p";
    }
    return "?";
}

inline std::optional<Theorem> theorem_from_name(std::string_view name) {
    for (Theorem t : kAllTheorems)
        if (theorem_name(t) == name) return t;
    return std::nullopt;
}

/// Parameters a theorem row may consume.  Single-parameter rows use M; the
/// two-parameter family-I rows use M1 (bound on |g|) and M2 (bound on h).
struct TheoremParams {
    std::optional<double> M;
    std::optional<double> M1;
    std::optional<double> M2;
};

namespace detail {

inline double need(const std::optional<double>& v, Theorem t, const char* what) {
    if (!v)
        throw std::domain_error(std::string("theorem ") + std::string(theorem_name(t))
                                + ": missing parameter " + what);
    return *v;
}

inline void require(bool ok, Theorem t, const char* what) {
    if (!ok)
        throw std::domain_error(std::string("theorem ") + std::string(theorem_name(t))
                                + ": requires " + what);
}

} // namespace detail

/// Build the RadiusSpec for one theorem row.
inline RadiusSpec theorem_spec(Theorem t, const TheoremParams& p) {
    using detail::need;
    using detail::require;
    using landau::bounds::bigK;
    using landau::bounds::lambda0;
    const double pi = std::numbers::pi;

    switch (t) {
        case Theorem::A: {
            const double M = need(p.M, t, "M");
            require(M > 0.0, t, "M > 0");
            return {Family::I, pi / (4.0 * M), M, 2.0 * M, 2.0 * M};
        }
        case Theorem::B: {
            const double M = need(p.M, t, "M");
            require(M > 0.0, t, "M > 0");
            return {Family::II, pi / (4.0 * M), 0.0, 0.0, 2.0 * M};
        }
        case Theorem::D: {
            const double M1 = need(p.M1, t, "M1");
            const double M2 = need(p.M2, t, "M2");
            require(M1 >= 0.0, t, "M1 >= 0");
            require(M2 >= 1.0, t, "M2 >= 1");
            return {Family::I, 1.0, M1, 2.0 * M1, std::sqrt(2.0 * M2 * M2 - 2.0)};
        }
        case Theorem::E: {
            const double M1 = need(p.M1, t, "M1");
            const double M2 = need(p.M2, t, "M2");
            require(M1 >= 0.0, t, "M1 >= 0");
            require(M2 >= 1.0, t, "M2 >= 1");
            return {Family::I, lambda0(M2), M1, 2.0 * M1, std::sqrt(2.0 * M2 * M2 - 2.0)};
        }
        case Theorem::F: {
            const double M = need(p.M, t, "M");
            require(M >= 1.0, t, "M >= 1");
            return {Family::II, 1.0, 0.0, 0.0, std::sqrt(2.0 * M * M - 2.0)};
        }
        case Theorem::G: {
            const double M = need(p.M, t, "M");
            require(M >= 1.0, t, "M >= 1");
            return {Family::II, lambda0(M), 0.0, 0.0, std::sqrt(2.0 * M * M - 2.0)};
        }
        case Theorem::T26: {
            const double M1 = need(p.M1, t, "M1");
            const double M2 = need(p.M2, t, "M2");
            require(M1 >= 0.0, t, "M1 >= 0");
            require(M2 >= 1.0, t, "M2 >= 1");
            return {Family::I, 1.0, M1, 4.0 * M1 / pi, bigK(M2)};
        }
        case Theorem::T26p: {
            const double M1 = need(p.M1, t, "M1");
            const double M2 = need(p.M2, t, "M2");
            require(M1 >= 0.0, t, "M1 >= 0");
            require(M2 >= 1.0, t, "M2 >= 1");
            return {Family::I, 1.0, M1, 4.0 * M1 / pi, M2 - 1.0 / M2};
        }
        case Theorem::T28: {
            const double M1 = need(p.M1, t, "M1");
            const double M2 = need(p.M2, t, "M2");
            require(M1 >= 0.0, t, "M1 >= 0");
            require(M2 >= 1.0, t, "M2 >= 1");
            return {Family::I, lambda0(M2), M1, 4.0 * M1 / pi, bigK(M2)};
        }
        case Theorem::T28p: {
            const double M1 = need(p.M1, t, "M1");
            const double M2 = need(p.M2, t, "M2");
            require(M1 >= 0.0, t, "M1 >= 0");
            require(M2 >= 1.0, t, "M2 >= 1");
            const double l0 = lambda0(M2);
            return {Family::I, l0, M1, 4.0 * M1 / pi, M2 - l0 * l0 / M2};
        }
        case Theorem::T210: {
            const double M = need(p.M, t, "M");
            require(M >= 1.0, t, "M >= 1");
            return {Family::II, 1.0, 0.0, 0.0, bigK(M)};
        }
        case Theorem::T210p: {
            const double M = need(p.M, t, "M");
            require(M >= 1.0, t, "M >= 1");
            return {Family::II, 1.0, 0.0, 0.0, M - 1.0 / M};
        }
        case Theorem::C212: {
            const double M = need(p.M, t, "M");
            require(M >= 1.0, t, "M >= 1");
            return {Family::II, lambda0(M), 0.0, 0.0, bigK(M)};
        }
        case Theorem::C212p: {
            const double M = need(p.M, t, "M");
            require(M >= 1.0, t, "M >= 1");
            const double l0 = lambda0(M);
            return {Family::II, l0, 0.0, 0.0, M - l0 * l0 / M};
        }
    }
    throw std::invalid_argument("theorem_spec: unknown theorem");
}

inline RadiusResult theorem_radius(Theorem t, const TheoremParams& p, double tol = 1e-13) {
    const RadiusSpec s = theorem_spec(t, p);
    return s.family == Family::I ? family1_solve(s, tol) : family2_solve(s);
}

/// The four comparison chains between primed / refined / original radii.
enum class Remark { R27, R29, R211, R213 };

inline std::string_view remark_name(Remark r) {
    switch (r) {
        case Remark::R27: return "R27";
        case Remark::R29: return "R29";
        case Remark::R211: return "R211";
        case Remark::R213: return "R213";
    }
    return "?";
}

inline std::optional<Remark> remark_from_name(std::string_view name) {
    for (Remark r : {Remark::R27, Remark::R29, Remark::R211, Remark::R213})
        if (remark_name(r) == name) return r;
    return std::nullopt;
}

struct ChainPoint {
    double param = 0.0;          // M2 for R27/R29, M for R211/R213
    std::vector<double> radii;   // ordered largest-claimed first
    std::vector<double> sigmas;
    bool in_regime = false;      // claim asserted here
    bool holds = false;          // stated inequalities, radii and sigmas
    bool equality = false;       // R211 only: refined == original (branch tie)
};

struct ChainReport {
    Remark remark = Remark::R27;
    double m1 = 1.0;                 // only meaningful for R27 / R29
    std::vector<std::string> labels; // radius column labels, largest first
    std::vector<ChainPoint> points;
    bool pass = true;        // every in-regime point holds
    bool exploratory = false; // some point was outside the stated regime
};

/// Evaluate one remark chain over a parameter grid.  R27/R29 grids range over
/// M2 with m1 fixed; R211/R213 grids range over M.  Points outside the stated
/// regime are evaluated and reported but never counted against `pass`.
inline ChainReport remark_chain(Remark rk, std::span<const double> grid, double m1 = 1.0) {
    ChainReport rep;
    rep.remark = rk;
    rep.m1 = m1;

    struct Row {
        Theorem t;
        bool strict_after; // inequality to the NEXT radius is strict
    };
    std::vector<Row> rows;
    bool two_param = false;
    switch (rk) {
        case Remark::R27:
            rows = {{Theorem::T26p, true}, {Theorem::T26, true}, {Theorem::D, false}};
            rep.labels = {"r1p", "r1", "rho3"};
            two_param = true;
            break;
        case Remark::R29:
            rows = {{Theorem::T28p, true}, {Theorem::T28, true}, {Theorem::E, false}};
            rep.labels = {"r2p", "r2", "rho4"};
            two_param = true;
            break;
        case Remark::R211:
            // r3p > r3 >= rho5; equality exactly while both branches of bigK tie.
            rows = {{Theorem::T210p, true}, {Theorem::T210, false}, {Theorem::F, false}};
            rep.labels = {"r3p", "r3", "rho5"};
            break;
        case Remark::R213:
            rows = {{Theorem::C212p, true}, {Theorem::C212, true}, {Theorem::G, true},
                    {Theorem::B, false}};
            rep.labels = {"r4p", "r4", "rho6", "rho2"};
            break;
    }

    const double m0p = landau::bounds::crossover_m0_prime();
    for (double v : grid) {
        ChainPoint pt;
        pt.param = v;
        TheoremParams params;
        if (two_param) {
            params.M1 = m1;
            params.M2 = v;
        } else {
            params.M = v;
        }
        for (const Row& row : rows) {
            const RadiusResult r = theorem_radius(row.t, params);
            pt.radii.push_back(r.rho);
            pt.sigmas.push_back(r.sigma);
        }
        switch (rk) {
            case Remark::R27:
            case Remark::R29: pt.in_regime = v >= m0p; break;
            case Remark::R211: pt.in_regime = v > 1.0; break;
            case Remark::R213: pt.in_regime = v > m0p; break;
        }
        pt.holds = true;
        for (size_t i = 0; i + 1 < pt.radii.size(); ++i) {
            const bool strict = rows[i].strict_after;
            const bool r_ok = strict ? pt.radii[i] > pt.radii[i + 1]
                                     : pt.radii[i] >= pt.radii[i + 1];
            const bool s_ok = strict ? pt.sigmas[i] > pt.sigmas[i + 1]
                                     : pt.sigmas[i] >= pt.sigmas[i + 1];
            pt.holds = pt.holds && r_ok && s_ok;
        }
        if (rk == Remark::R211)
            pt.equality = std::abs(pt.radii[1] - pt.radii[2])
                          <= 1e-14 * std::max(1.0, pt.radii[1]);
        if (pt.in_regime) {
            if (!pt.holds) rep.pass = false;
        } else {
            rep.exploratory = true;
        }
        rep.points.push_back(std::move(pt));
    }
    return rep;
}

} // namespace landau::radii
