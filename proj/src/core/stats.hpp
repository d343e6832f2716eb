#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace cw {

using cplx = std::complex<double>;

struct MomentEstimate {
    cplx value{};
    double std_error = 0.0;
    std::size_t n_samples = 0;
};

/// Compensated (Kahan) accumulator; million-sample sums of exponentials
/// lose ~5 digits with naive summation.
class KahanSum {
public:
    void add(double x);
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double c_ = 0.0;
};

class KahanSumC {
public:
    void add(cplx z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    cplx value() const { return {re_.value(), im_.value()}; }

private:
    KahanSum re_, im_;
};

/// Sample mean with standard error (per-component sample std deviations
/// combined in quadrature, divided by sqrt(n)).
MomentEstimate mc_mean(std::span<const cplx> values);

/// Empirical characteristic function (1/n) sum exp(i Re(w conj(z_k))).
MomentEstimate empirical_cf(std::span<const cplx> samples, cplx w);

struct CrossCov {
    MomentEstimate cov;   // E[(a - mean a) conj(b - mean b)]
    MomentEstimate pcov;  // E[(a - mean a) (b - mean b)]
};

CrossCov cross_cov(std::span<const cplx> a, std::span<const cplx> b);

struct FactorizationGap {
    double gap = 0.0;       // max over probes of |joint CF - product of marginals|
    double mc_error = 0.0;  // worst-case std error bound for the gap statistic
};

/// Independence probe of Example-2.15 type: the joint CF of independent
/// inputs factorises, so the gap is statistically zero.
FactorizationGap cf_factorization_gap(std::span<const cplx> a, std::span<const cplx> b,
                                      std::span<const std::pair<cplx, cplx>> probes);

} // namespace cw
