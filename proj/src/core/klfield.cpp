#include "klfield.hpp"

#include <cmath>
#include <stdexcept>

namespace cw {

double FieldSample::norm() const {
    KahanSum sq;
    for (cplx c : coeffs) sq.add(std::norm(c));
    return std::sqrt(sq.value());
}

FieldSample kl_sample(const SpectralOperator& op, int m, ScalarField field,
                      RandomStream& rng) {
    if (m < 0 || m > op.size())
        throw std::out_of_range("kl_sample: truncation out of range");

    FieldSample out;
    out.basis = op.basis_ptr();
    out.scalar_field = field;
    out.coeffs.resize(m);
    const auto& alphas = op.alphas();
    for (int n = 0; n < m; ++n) {
        const double root = std::sqrt(alphas[n]);
        if (field == ScalarField::Complex) {
            rng.seek(4ULL * n);
            out.coeffs[n] = root * rng.standard_complex();
        } else {
            rng.seek(2ULL * n);
            out.coeffs[n] = root * rng.normal();
        }
    }
    return out;
}

cplx covariance_oracle(const SpectralOperator& op, std::span<const cplx> f,
                       std::span<const cplx> g) {
    if (f.size() != g.size() || static_cast<int>(f.size()) > op.size())
        throw std::invalid_argument("covariance_oracle: sequence length mismatch");
    KahanSumC acc;
    const auto& alphas = op.alphas();
    for (std::size_t n = 0; n < f.size(); ++n)
        acc.add(alphas[n] * f[n] * std::conj(g[n]));
    return acc.value();
}

TraceCheck trace_identity_check(const SpectralOperator& op,
                                std::span<const FieldSample> samples) {
    TraceCheck out;
    out.trace = op.trace();
    std::vector<cplx> sq(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double nrm = samples[i].norm();
        sq[i] = nrm * nrm;
    }
    out.empirical_sq_norm = mc_mean(sq);
    const double se = out.empirical_sq_norm.std_error;
    out.gap_sigma = se > 0.0
                        ? std::abs(out.empirical_sq_norm.value.real() - out.trace) / se
                        : 0.0;
    return out;
}

double truncation_tail(const SpectralOperator& op, int k, int m) {
    if (k < 0 || k >= m || m > op.size())
        throw std::out_of_range("truncation_tail: bad range");
    KahanSum acc;
    for (int n = k; n < m; ++n) acc.add(op.alphas()[n]);
    return acc.value();
}

NullSetDiagnostic null_set_diagnostic(ScalarField field, std::span<const int> m_values,
                                      int n_samples, std::uint64_t seed) {
    if (m_values.empty() || n_samples < 1)
        throw std::invalid_argument("null_set_diagnostic: empty configuration");
    int m_max = 0;
    for (std::size_t i = 0; i < m_values.size(); ++i) {
        if (m_values[i] < 1 || (i > 0 && m_values[i] <= m_values[i - 1]))
            throw std::invalid_argument("null_set_diagnostic: m values must be increasing");
        m_max = std::max(m_max, m_values[i]);
    }

    // Mean of the partial sum sum_{n<=m} |zeta_n|^2 at each requested m,
    // plus the exp(-|zeta|^2) moment over every coefficient drawn.
    std::vector<KahanSum> level(m_values.size());
    std::vector<cplx> exp_vals;
    exp_vals.reserve(static_cast<std::size_t>(n_samples) * m_max);

    for (int i = 0; i < n_samples; ++i) {
        RandomStream rng(seed, "nullset", static_cast<std::uint64_t>(i));
        KahanSum partial;
        std::size_t next_level = 0;
        for (int n = 1; n <= m_max; ++n) {
            cplx zeta;
            if (field == ScalarField::Complex) {
                zeta = rng.standard_complex();
            } else {
                zeta = rng.normal();
            }
            partial.add(std::norm(zeta));
            exp_vals.push_back(std::exp(-std::norm(zeta)));
            while (next_level < m_values.size() && m_values[next_level] == n) {
                level[next_level].add(partial.value());
                ++next_level;
            }
        }
    }

    // Least-squares slope of mean partial sum against m.
    const std::size_t k = m_values.size();
    double mx = 0.0, my = 0.0;
    std::vector<double> ys(k);
    for (std::size_t i = 0; i < k; ++i) {
        ys[i] = level[i].value() / n_samples;
        mx += m_values[i];
        my += ys[i];
    }
    mx /= k;
    my /= k;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        num += (m_values[i] - mx) * (ys[i] - my);
        den += (m_values[i] - mx) * (m_values[i] - mx);
    }

    NullSetDiagnostic out;
    out.slope = den > 0.0 ? num / den : 0.0;
    out.exp_moment = mc_mean(exp_vals);
    return out;
}

} // namespace cw
