#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "landau/maps.hpp"

namespace landau::bounds {

/// Crossover where the two branches of lambda0 meet: pi / (2 (2 pi^2 - 16)^{1/4}).
inline double crossover_m0() {
    const double pi = std::numbers::pi;
    return pi / (2.0 * std::pow(2.0 * pi * pi - 16.0, 0.25));
}

/// Crossover where sqrt(2M^2-2) overtakes 4M/pi: pi / sqrt(pi^2 - 8).
inline double crossover_m0_prime() {
    const double pi = std::numbers::pi;
    return pi / std::sqrt(pi * pi - 8.0);
}

/// Sharp lower bound for lambda_f(0) over J-normalized bounded harmonic maps:
///   sqrt(2) / (sqrt(M^2-1) + sqrt(M^2+1))   for 1 <= M <= crossover_m0(),
///   pi / (4M)                               beyond.
/// At M = 1 this is exactly 1.
inline double lambda0(double M) {
    if (!(M >= 1.0))
        throw std::domain_error("lambda0: requires M >= 1");
    if (M <= crossover_m0())
        return std::sqrt(2.0) / (std::sqrt(M * M - 1.0) + std::sqrt(M * M + 1.0));
    return std::numbers::pi / (4.0 * M);
}

/// Coefficient cap for n >= 2: min(sqrt(2M^2-2), 4M/pi).  The first branch
/// wins for M <= crossover_m0_prime(), the second beyond.
inline double bigK(double M) {
    if (!(M >= 1.0))
        throw std::domain_error("bigK: requires M >= 1");
    return std::min(std::sqrt(2.0 * M * M - 2.0), 4.0 * M / std::numbers::pi);
}

/// |a_n| + |b_n| <= 4M/pi for every n >= 1 when |f| <= M.
inline double bound_bounded(double M) {
    if (!(M > 0.0))
        throw std::domain_error("bound_bounded: requires M > 0");
    return 4.0 * M / std::numbers::pi;
}

/// |a_n| + |b_n| <= sqrt(2M^2-2) for n >= 2 when J_f(0) = 1 and |f| <= M.
inline double bound_jacobian_normalized(double M) {
    if (!(M >= 1.0))
        throw std::domain_error("bound_jacobian_normalized: requires M >= 1");
    return std::sqrt(2.0 * M * M - 2.0);
}

/// |a_n| + |b_n| <= M - lam^2/M for n >= 2 when |h| + |g| <= M and
/// lam = lambda_f(0).  Requires 0 <= lam <= M.
inline double bound_sum_normalized(double M, double lam) {
    if (!(M > 0.0))
        throw std::domain_error("bound_sum_normalized: requires M > 0");
    if (!(lam >= 0.0 && lam <= M))
        throw std::domain_error("bound_sum_normalized: requires 0 <= lam <= M");
    return M - lam * lam / M;
}

/// One coefficient pair of f = sum a_n z^n + conj(sum b_n z^n).
struct CoeffPair {
    int n;
    cplx a;
    cplx b;
};

namespace detail {

// Compensated (Kahan) accumulator for complex sums; keeps the circle-average
// error near eps * |sum| instead of eps * sum of |terms|.
struct KahanCplx {
    cplx sum{0.0};
    cplx comp{0.0};
    void add(cplx v) {
        const cplx y = v - comp;
        const cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

} // namespace detail

/// Recover (a_n, b_n), n = 1..n_max, from samples of f on the circle |z| = r:
///   a_n       = r^{-n} (1/N) sum_k f(r e^{i th_k}) e^{-i n th_k}
///   conj(b_n) = r^{-n} (1/N) sum_k f(r e^{i th_k}) e^{+i n th_k}
/// th_k = 2 pi k / N.  Twiddles come from one table of N exact roots of unity,
/// indexed mod N, so phase error does not grow with n*k.
inline std::vector<CoeffPair> extract_coefficients(const std::function<cplx(cplx)>& f,
                                                   int n_max,
                                                   double r = 0.5,
                                                   int samples = 4096) {
    if (n_max < 1)
        throw std::invalid_argument("extract_coefficients: n_max must be >= 1");
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("extract_coefficients: r must lie in (0, 1)");
    if (samples < 4 * (n_max + 1))
        throw std::invalid_argument("extract_coefficients: too few samples for requested n_max");

    const int N = samples;
    std::vector<cplx> twiddle(static_cast<size_t>(N));
    std::vector<cplx> vals(static_cast<size_t>(N));
    for (int k = 0; k < N; ++k) {
        twiddle[static_cast<size_t>(k)] =
            std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / N);
        vals[static_cast<size_t>(k)] = f(r * twiddle[static_cast<size_t>(k)]);
    }

    std::vector<CoeffPair> out;
    out.reserve(static_cast<size_t>(n_max));
    double rn = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        rn *= r;
        detail::KahanCplx plus, minus; // e^{+i n th}, e^{-i n th} moments
        for (int k = 0; k < N; ++k) {
            const int m = static_cast<int>((static_cast<long long>(n) * k) % N);
            const cplx w = twiddle[static_cast<size_t>(m)];
            plus.add(vals[static_cast<size_t>(k)] * w);
            minus.add(vals[static_cast<size_t>(k)] * std::conj(w));
        }
        const double scale = 1.0 / (static_cast<double>(N) * rn);
        out.push_back({n, minus.sum * scale, std::conj(plus.sum * scale)});
    }
    return out;
}

enum class BoundMode {
    bounded_modulus, // |f| <= M, rows n >= 1 against 4M/pi
    sum_modulus,     // |h| + |g| <= M, rows n >= 2 against M - lam^2/M
};

struct AuditRow {
    int n;
    double sum;   // |a_n| + |b_n|
    double bound;
    double slack; // bound - sum; sharp rows sit at ~0
};

struct BoundsAudit {
    std::string map_name;
    double M = 0.0;
    BoundMode mode = BoundMode::bounded_modulus;
    double lam0 = 0.0; // | |a_1| - |b_1| |, used by sum_modulus
    std::vector<AuditRow> rows;
    double worst_slack = 0.0;
    bool pass = false;
};

inline constexpr double kSlackTol = 1e-8;

/// Extract coefficients of f and check them against the bound the declared
/// hypothesis implies.  The caller asserts the hypothesis itself; a slack
/// below -kSlackTol therefore falsifies the bound, not the map.
inline BoundsAudit audit_bounds(const std::function<cplx(cplx)>& f,
                                std::string map_name,
                                double M,
                                BoundMode mode,
                                int n_max,
                                double r = 0.5,
                                int samples = 4096) {
    BoundsAudit audit;
    audit.map_name = std::move(map_name);
    audit.M = M;
    audit.mode = mode;

    const auto pairs = extract_coefficients(f, std::max(n_max, 1), r, samples);
    audit.lam0 = std::abs(std::abs(pairs[0].a) - std::abs(pairs[0].b));

    double bound = 0.0;
    int n_lo = 1;
    if (mode == BoundMode::bounded_modulus) {
        bound = bound_bounded(M);
    } else {
        // Clamp the extracted lam0 into [0, M]: the hypothesis guarantees it
        // mathematically, extraction noise may poke a hair past M.
        bound = bound_sum_normalized(M, std::min(audit.lam0, M));
        n_lo = 2;
    }

    audit.worst_slack = std::numeric_limits<double>::infinity();
    for (const auto& p : pairs) {
        if (p.n < n_lo) continue;
        const double sum = std::abs(p.a) + std::abs(p.b);
        const double slack = bound - sum;
        audit.rows.push_back({p.n, sum, bound, slack});
        audit.worst_slack = std::min(audit.worst_slack, slack);
    }
    if (audit.rows.empty()) audit.worst_slack = 0.0;
    audit.pass = audit.worst_slack >= -kSlackTol;
    return audit;
}

} // namespace landau::bounds
