#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace landau {

using cplx = std::complex<double>;

/// Default truncation order for series built from rational maps.  With every
/// map we expand, coefficient growth is geometric with ratio < 1, so the tail
/// beyond z^64 is far below 1e-12 anywhere we evaluate (|z| <= 0.9).
inline constexpr int kDefaultOrder = 64;

/// Finite power series sum_{k=0}^{N} c_k z^k, evaluated by Horner's rule.
/// Immutable value type; the coefficient vector always holds order()+1 entries.
class AnalyticSeries {
public:
    explicit AnalyticSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("AnalyticSeries: coefficient list must be non-empty");
    }

    static AnalyticSeries zero() { return AnalyticSeries({cplx(0.0)}); }

    /// Expand num(z)/den(z) to the given truncation order by the standard
    /// long-division recurrence  q_k = (num_k - sum_{j>=1} den_j q_{k-j}) / den_0.
    /// Requires den[0] != 0.
    static AnalyticSeries from_rational(std::span<const cplx> num,
                                        std::span<const cplx> den,
                                        int order) {
        if (order < 0)
            throw std::invalid_argument("from_rational: order must be >= 0");
        if (den.empty() || den[0] == cplx(0.0))
            throw std::invalid_argument("from_rational: den[0] must be nonzero");
        std::vector<cplx> q(static_cast<size_t>(order) + 1, cplx(0.0));
        for (int k = 0; k <= order; ++k) {
            cplx s = k < static_cast<int>(num.size()) ? num[k] : cplx(0.0);
            const int jmax = std::min<int>(k, static_cast<int>(den.size()) - 1);
            for (int j = 1; j <= jmax; ++j)
                s -= den[j] * q[static_cast<size_t>(k - j)];
            q[static_cast<size_t>(k)] = s / den[0];
        }
        return AnalyticSeries(std::move(q));
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    std::span<const cplx> coeffs() const { return coeffs_; }

    /// c_k, or 0 beyond the truncation order.
    cplx coeff(int k) const {
        return (k >= 0 && k <= order()) ? coeffs_[static_cast<size_t>(k)] : cplx(0.0);
    }

    cplx operator()(cplx z) const {
        cplx acc = coeffs_.back();
        for (int k = order() - 1; k >= 0; --k)
            acc = acc * z + coeffs_[static_cast<size_t>(k)];
        return acc;
    }

    /// Term-by-term derivative; order drops by one (constant -> zero series).
    AnalyticSeries derivative() const {
        if (order() == 0) return zero();
        std::vector<cplx> d(coeffs_.size() - 1);
        for (size_t k = 1; k < coeffs_.size(); ++k)
            d[k - 1] = static_cast<double>(k) * coeffs_[k];
        return AnalyticSeries(std::move(d));
    }

private:
    std::vector<cplx> coeffs_;
};

/// z^n by repeated multiplication (n >= 0); exact enough for the small
/// exponents used throughout and avoids pow's log/exp detour.
inline cplx ipow(cplx z, int n) {
    cplx acc(1.0);
    for (int k = 0; k < n; ++k) acc *= z;
    return acc;
}

} // namespace landau
