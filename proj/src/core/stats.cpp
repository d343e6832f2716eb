#include "stats.hpp"

#include <cmath>
#include <stdexcept>

namespace cw {

void KahanSum::add(double x) {
    const double y = x - c_;
    const double t = sum_ + y;
    c_ = (t - sum_) - y;
    sum_ = t;
}

MomentEstimate mc_mean(std::span<const cplx> values) {
    if (values.empty()) throw std::invalid_argument("mc_mean: empty input");
    const std::size_t n = values.size();

    KahanSumC sum;
    for (cplx z : values) sum.add(z);
    const cplx mean = sum.value() / static_cast<double>(n);

    if (n == 1) return {mean, 0.0, 1};

    KahanSum sq;
    for (cplx z : values) {
        const cplx d = z - mean;
        sq.add(std::norm(d));
    }
    // |z - mean|^2 sums Re and Im squared deviations, so this is already
    // the quadrature combination of the two component variances.
    const double var = sq.value() / static_cast<double>(n - 1);
    return {mean, std::sqrt(var / static_cast<double>(n)), n};
}

MomentEstimate empirical_cf(std::span<const cplx> samples, cplx w) {
    if (samples.empty()) throw std::invalid_argument("empirical_cf: empty input");
    std::vector<cplx> phases(samples.size());
    for (std::size_t k = 0; k < samples.size(); ++k) {
        // paper convention: w . z = w conj(z)
        const double arg = std::real(w * std::conj(samples[k]));
        phases[k] = {std::cos(arg), std::sin(arg)};
    }
    return mc_mean(phases);
}

CrossCov cross_cov(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) throw std::invalid_argument("cross_cov: length mismatch");
    if (a.size() < 2) throw std::invalid_argument("cross_cov: need at least 2 samples");
    const std::size_t n = a.size();

    KahanSumC sa, sb;
    for (std::size_t k = 0; k < n; ++k) {
        sa.add(a[k]);
        sb.add(b[k]);
    }
    const cplx ma = sa.value() / static_cast<double>(n);
    const cplx mb = sb.value() / static_cast<double>(n);

    std::vector<cplx> prod_cov(n), prod_pcov(n);
    for (std::size_t k = 0; k < n; ++k) {
        const cplx da = a[k] - ma;
        const cplx db = b[k] - mb;
        prod_cov[k] = da * std::conj(db);
        prod_pcov[k] = da * db;
    }
    // Means of the centred products; rescale by n/(n-1) for the unbiased
    // normalization. Standard errors come straight from the product samples.
    auto est_cov = mc_mean(prod_cov);
    auto est_pcov = mc_mean(prod_pcov);
    const double corr = static_cast<double>(n) / static_cast<double>(n - 1);
    est_cov.value *= corr;
    est_pcov.value *= corr;
    return {est_cov, est_pcov};
}

FactorizationGap cf_factorization_gap(std::span<const cplx> a, std::span<const cplx> b,
                                      std::span<const std::pair<cplx, cplx>> probes) {
    if (a.size() != b.size())
        throw std::invalid_argument("cf_factorization_gap: length mismatch");
    if (a.empty()) throw std::invalid_argument("cf_factorization_gap: empty input");

    FactorizationGap out;
    std::vector<cplx> joint(a.size());
    for (const auto& [w1, w2] : probes) {
        for (std::size_t k = 0; k < a.size(); ++k) {
            const double arg =
                std::real(w1 * std::conj(a[k])) + std::real(w2 * std::conj(b[k]));
            joint[k] = {std::cos(arg), std::sin(arg)};
        }
        const auto phi_joint = mc_mean(joint);
        const auto phi_a = empirical_cf(a, w1);
        const auto phi_b = empirical_cf(b, w2);
        const double gap = std::abs(phi_joint.value - phi_a.value * phi_b.value);
        // |phi_a|, |phi_b| <= 1, so marginal errors propagate with factor <= 1.
        const double err = phi_joint.std_error + phi_a.std_error + phi_b.std_error;
        if (gap > out.gap) out.gap = gap;
        if (err > out.mc_error) out.mc_error = err;
    }
    return out;
}

} // namespace cw
