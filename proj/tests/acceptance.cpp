// End-to-end acceptance battery.  Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any line fails.  Tolerances are part of the
// contract and are asserted, never widened at runtime.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "landau/bounds.hpp"
#include "landau/corpus.hpp"
#include "landau/maps.hpp"
#include "landau/radii.hpp"
#include "landau/scan.hpp"

using namespace landau;
using namespace landau::radii;

namespace {

bool g_all_ok = true;

void report(int k, const std::string& what, bool ok) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", k, what.c_str());
    g_all_ok = g_all_ok && ok;
}

std::mt19937_64 rng(0xacce97edULL);

double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// independent root for the family II quadratic, written as a(1-r)^2 = b(4r-3r^2)
double bisect_family2(double a, double b) {
    auto q = [&](double r) { return a * (1.0 - r) * (1.0 - r) - b * (4.0 * r - 3.0 * r * r); };
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-15) {
        const double mid = 0.5 * (lo + hi);
        (q(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

Wirtinger fd(const std::function<cplx(cplx)>& f, cplx z) {
    const double h = 1e-5;
    const cplx fx = (f(z + h) - f(z - h)) / (2.0 * h);
    const cplx fy = (f(z + cplx(0.0, h)) - f(z - cplx(0.0, h))) / (2.0 * h);
    const cplx i(0.0, 1.0);
    return {0.5 * (fx - i * fy), 0.5 * (fx + i * fy)};
}

void criterion1_constants() {
    const bool ok = std::abs(bounds::crossover_m0() - 1.1296) < 5e-5
                    && std::abs(bounds::crossover_m0_prime() - 2.2976) < 5e-5;
    report(1, "branch crossover constants match 1.1296 and 2.2976 to 4 decimals", ok);
}

void criterion2_sharp_cases() {
    bool ok = true;
    for (Theorem t : {Theorem::F, Theorem::G, Theorem::T210, Theorem::T210p, Theorem::C212,
                      Theorem::C212p}) {
        const RadiusResult res = theorem_radius(t, {.M = 1.0});
        ok = ok && res.rho == 1.0 && res.sigma == 1.0;
    }
    report(2, "all six single-parameter rows give rho = sigma = 1 exactly at M = 1", ok);
}

void criterion3_family_consistency() {
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        const double a = std::pow(10.0, uniform(-2.0, 2.0));
        const double b = std::pow(10.0, uniform(-2.0, 2.0));
        const double closed = family2_solve({Family::II, a, 0.0, 0.0, b}).rho;
        ok = ok && std::abs(closed - bisect_family2(a, b)) <= 1e-10;
    }
    for (double M : {1.0, 2.0, 5.0, 10.0}) {
        const double pi = std::numbers::pi;
        const double lit = pi / (pi + 16.0 * M * M + 2.0 * M * std::sqrt(2.0 * pi + 64.0 * M * M));
        ok = ok && std::abs(theorem_radius(Theorem::B, {.M = M}).rho - lit) <= 1e-12;
    }
    report(3, "closed form vs bisection within 1e-10 on 200 pairs; printed formula within 1e-12",
           ok);
}

void criterion4_root_quality() {
    const std::vector<double> grid = {1.0, 1.5, 2.2976, 3.0, 5.0, 10.0};
    bool ok = true;
    for (double M : grid)
        ok = ok && theorem_radius(Theorem::A, {.M = M}).residual <= 1e-10;
    for (Theorem t : {Theorem::D, Theorem::E, Theorem::T26, Theorem::T26p, Theorem::T28,
                      Theorem::T28p})
        for (double m1 : grid)
            for (double m2 : grid)
                ok = ok && theorem_radius(t, {.M1 = m1, .M2 = m2}).residual <= 1e-10;
    report(4, "every bisected row keeps |phi(rho)| <= 1e-10 across the parameter grid", ok);
}

void criterion5_chains() {
    bool ok = true;

    std::vector<double> m2_grid;
    for (int k = 0; 2.2976 + 0.1 * k <= 10.0; ++k) m2_grid.push_back(2.2976 + 0.1 * k);
    for (double m1 : {0.5, 1.0, 2.0}) {
        for (Remark rk : {Remark::R27, Remark::R29}) {
            const ChainReport rep = remark_chain(rk, m2_grid, m1);
            ok = ok && rep.pass;
            for (const auto& pt : rep.points) ok = ok && pt.holds;
        }
    }

    std::vector<double> m_grid;
    for (int k = 0; 1.1 + 0.1 * k <= 10.0; ++k) m_grid.push_back(1.1 + 0.1 * k);
    const ChainReport r211 = remark_chain(Remark::R211, m_grid);
    ok = ok && r211.pass;
    const double m0p = bounds::crossover_m0_prime();
    for (const auto& pt : r211.points) {
        ok = ok && pt.holds;
        ok = ok && pt.equality == (pt.param <= m0p);
    }

    std::vector<double> m_grid2;
    for (int k = 0; 2.3976 + 0.1 * k <= 10.0; ++k) m_grid2.push_back(2.3976 + 0.1 * k);
    const ChainReport r213 = remark_chain(Remark::R213, m_grid2);
    ok = ok && r213.pass && !r213.exploratory;
    for (const auto& pt : r213.points) ok = ok && pt.holds;

    report(5, "refinement chains hold over their grids, with the branch tie detected", ok);
}

void criterion6_sharpness() {
    bool ok = true;
    for (double M : {1.0, 2.0, 5.0}) {
        const auto strip = verify::make_vstrip(M);
        const auto p1 = bounds::extract_coefficients(strip.eval, 1);
        ok = ok && std::abs(std::abs(p1[0].a) + std::abs(p1[0].b)
                            - bounds::bound_bounded(M)) <= 1e-8;

        const auto strip3 = verify::make_vstrip_m(M, 3);
        const auto p3 = bounds::extract_coefficients(strip3.eval, 3);
        ok = ok && std::abs(std::abs(p3[2].a) + std::abs(p3[2].b)
                            - bounds::bound_bounded(M)) <= 1e-8;
    }
    const auto fan = verify::make_f_an(2.0, 1.0, 3);
    const auto pf = bounds::extract_coefficients(fan.eval, 3);
    ok = ok && std::abs(pf[0].a - cplx(1.0)) <= 1e-8;
    ok = ok && std::abs(std::abs(pf[2].a) - 1.5) <= 1e-8;
    report(6, "extremal maps land on their coefficient caps to 1e-8", ok);
}

void criterion7_audits() {
    bool ok = true;
    for (const auto& entry : verify::standard_corpus())
        for (const auto& part : entry.audits) {
            const auto audit = bounds::audit_bounds(part.eval, entry.name, part.M, part.mode, 16);
            ok = ok && audit.pass;
        }
    report(7, "coefficient audits pass corpus-wide with slack >= -1e-8 up to row 16", ok);
}

void criterion8_scans() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;

    for (double M : {1.5, 3.0}) {
        const RadiusResult res = theorem_radius(Theorem::T210, {.M = M});
        const auto F = verify::make_bi_g_only(M);
        const double rt = 0.999 * res.rho;
        ok = ok && verify::injectivity_scan(F.eval, rt, 128).pass;
        ok = ok && verify::schlicht_scan(F.eval, rt, 0.99 * res.sigma).pass;
    }

    const double M = 2.0;
    const auto classic = verify::make_landau_classic(M);
    const double r0 = M - std::sqrt(M * M - 1.0);
    const double R0 = M * r0 * r0;
    ok = ok && verify::injectivity_scan(classic.eval, 0.99 * r0, 128).pass;
    ok = ok && verify::schlicht_scan(classic.eval, r0, 0.99 * R0).pass;

    double min_deriv = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 4096; ++k) {
        const cplx z = std::polar(r0, 2.0 * std::numbers::pi * k / 4096.0);
        min_deriv = std::min(min_deriv, local_distortion(classic.wirtinger(z)).Lam);
    }
    ok = ok && min_deriv <= 1e-8;

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                            .count();
    ok = ok && secs < 30.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "injectivity and coverage scans pass at the solved radii (%.1f s)", secs);
    report(8, buf, ok);
}

void criterion9_wirtinger() {
    bool ok = true;
    for (const auto& entry : verify::standard_corpus()) {
        for (int trial = 0; trial < 100; ++trial) {
            const double r = 0.7 * std::sqrt(uniform(0.0, 1.0));
            const cplx z = std::polar(r, uniform(0.0, 2.0 * std::numbers::pi));
            const Wirtinger got = entry.wirtinger(z);
            const Wirtinger want = fd(entry.eval, z);
            ok = ok && std::abs(got.fz - want.fz) <= 1e-6 * std::max(1.0, std::abs(want.fz));
            ok = ok
                 && std::abs(got.fzbar - want.fzbar) <= 1e-6 * std::max(1.0, std::abs(want.fzbar));
            const DistortionTriple d = local_distortion(got);
            ok = ok && std::abs(std::abs(d.jac) - d.Lam * d.lam)
                           <= 1e-14 * std::max(1.0, d.Lam * d.lam);
        }
    }
    report(9, "derivative evaluators agree with finite differences; |J| = Lam*lam holds", ok);
}

} // namespace

int main() {
    criterion1_constants();
    criterion2_sharp_cases();
    criterion3_family_consistency();
    criterion4_root_quality();
    criterion5_chains();
    criterion6_sharpness();
    criterion7_audits();
    criterion8_scans();
    criterion9_wirtinger();
    return g_all_ok ? 0 : 1;
}
