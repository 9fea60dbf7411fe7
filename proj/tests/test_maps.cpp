#include <catch2/catch_amalgamated.hpp>

#include "landau/maps.hpp"

#include "helpers.hpp"

using namespace landau;
using landau::testing::fd_wirtinger;
using landau::testing::random_point;
using landau::testing::random_series;
using landau::testing::rel_err;

TEST_CASE("harmonic map evaluates h + conj(g)", "[maps]") {
    const HarmonicMap f{random_series(8), random_series(8)};
    for (int trial = 0; trial < 10; ++trial) {
        const cplx z = random_point(0.9);
        CHECK(f(z) == f.h_part(z) + std::conj(f.g_part(z)));
    }
    CHECK(HarmonicMap::zero()(cplx(0.3, 0.4)) == cplx(0.0));
}

TEST_CASE("swapping the parts conjugates the map", "[maps]") {
    const HarmonicMap f{random_series(10), random_series(10)};
    const HarmonicMap swapped{f.g_part, f.h_part};
    for (int trial = 0; trial < 20; ++trial) {
        const cplx z = random_point(0.95);
        CHECK(std::abs(swapped(z) - std::conj(f(z))) < 1e-13);
    }
}

TEST_CASE("with real coefficients the swapped map is the reflection", "[maps]") {
    std::vector<cplx> hc, gc;
    for (int k = 0; k <= 9; ++k) {
        hc.push_back(cplx(testing::uniform(-1.0, 1.0)));
        gc.push_back(cplx(testing::uniform(-1.0, 1.0)));
    }
    const HarmonicMap f{AnalyticSeries(hc), AnalyticSeries(gc)};
    const HarmonicMap swapped{f.g_part, f.h_part};
    for (int trial = 0; trial < 20; ++trial) {
        const cplx z = random_point(0.95);
        CHECK(std::abs(swapped(z) - f(std::conj(z))) < 1e-13);
    }
}

TEST_CASE("harmonic Wirtinger derivatives match finite differences", "[maps]") {
    for (int trial = 0; trial < 10; ++trial) {
        const HarmonicMap f{random_series(9), random_series(9)};
        const cplx z = random_point(0.8);
        const Wirtinger got = harmonic_wirtinger(f, z);
        const Wirtinger want = fd_wirtinger([&](cplx w) { return f(w); }, z);
        CHECK(rel_err(got.fz, want.fz) < 1e-7);
        CHECK(rel_err(got.fzbar, want.fzbar) < 1e-7);
    }
}

TEST_CASE("biharmonic evaluation and Wirtinger derivatives are consistent", "[maps]") {
    for (int trial = 0; trial < 10; ++trial) {
        const BiharmonicMap F{{random_series(7), random_series(7)},
                              {random_series(7), random_series(7)}};
        const cplx z = random_point(0.8);
        CHECK(F(z) == std::norm(z) * F.g_map(z) + F.h_map(z));
        const Wirtinger got = biharmonic_wirtinger(F, z);
        const Wirtinger want = fd_wirtinger([&](cplx w) { return F(w); }, z);
        CHECK(rel_err(got.fz, want.fz) < 1e-7);
        CHECK(rel_err(got.fzbar, want.fzbar) < 1e-7);
    }
}

TEST_CASE("distortion triple satisfies |J| = Lam * lam exactly", "[maps]") {
    for (int trial = 0; trial < 200; ++trial) {
        const cplx fz = testing::random_coeff(2.0);
        // mix in near-cancelling pairs, where a naive difference of squares
        // loses the identity
        const cplx fzbar = trial % 3 == 0 ? fz * std::polar(1.0 + 1e-14, 1e-9)
                                          : testing::random_coeff(2.0);
        const DistortionTriple d = local_distortion(fz, fzbar);
        CHECK(d.lam == std::abs(std::abs(fz) - std::abs(fzbar)));
        CHECK(d.Lam == std::abs(fz) + std::abs(fzbar));
        CHECK(std::abs(d.jac) == d.Lam * d.lam);
    }
}

TEST_CASE("jacobian sign tracks orientation", "[maps]") {
    CHECK(local_distortion(cplx(2.0), cplx(0.5)).jac > 0.0); // sense-preserving
    CHECK(local_distortion(cplx(0.5), cplx(2.0)).jac < 0.0); // sense-reversing
    CHECK(local_distortion(cplx(1.0), cplx(0.0, 1.0)).jac == 0.0);
}

TEST_CASE("wirtinger overload of local_distortion matches the pair form", "[maps]") {
    const Wirtinger w{cplx(1.25, -0.5), cplx(0.25, 0.75)};
    const DistortionTriple a = local_distortion(w);
    const DistortionTriple b = local_distortion(w.fz, w.fzbar);
    CHECK(a.lam == b.lam);
    CHECK(a.Lam == b.Lam);
    CHECK(a.jac == b.jac);
}
