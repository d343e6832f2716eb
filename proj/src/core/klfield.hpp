#pragma once

#include "crv.hpp"
#include "rng.hpp"
#include "spectral.hpp"
#include "stats.hpp"

#include <vector>

namespace cw {

/// Truncated coefficient sequence of a field in a fixed real eigenbasis.
struct FieldSample {
    std::shared_ptr<const SpectralBasis> basis;
    std::vector<cplx> coeffs;
    ScalarField scalar_field = ScalarField::Complex;

    int truncation() const { return static_cast<int>(coeffs.size()); }

    /// l2 norm of the coefficient vector.
    double norm() const;
};

/// Karhunen-Loeve draw S_m = sum_{n<m} sqrt(alpha_n) xi_n x_n with xi_n
/// i.i.d. standard (CN(0,1,0) complex or N(0,1) real).
///
/// Coefficient n reads the stream at fixed offsets (4 uniforms per complex
/// coefficient, 2 per real), so truncations of the same stream share their
/// leading coefficients exactly.
FieldSample kl_sample(const SpectralOperator& op, int m, ScalarField field,
                      RandomStream& rng);

/// Covariance (Af, g) = sum alpha_n f_n conj(g_n) for functionals given by
/// dual-basis coefficient sequences.
cplx covariance_oracle(const SpectralOperator& op, std::span<const cplx> f,
                       std::span<const cplx> g);

struct TraceCheck {
    double trace = 0.0;
    MomentEstimate empirical_sq_norm;
    double gap_sigma = 0.0;  // |trace - empirical| in std-error units
};

/// trace A = E ||S||^2 for full-truncation samples.
TraceCheck trace_identity_check(const SpectralOperator& op,
                                std::span<const FieldSample> samples);

/// Exact tail sum alpha_{k+1} + ... + alpha_m (0-based k, m as counts:
/// modes k..m-1); equals E||S_m - S_k||^2.
double truncation_tail(const SpectralOperator& op, int k, int m);

struct NullSetDiagnostic {
    double slope = 0.0;                 // fitted slope of sum_{n<=m} |zeta_n|^2 vs m
    MomentEstimate exp_moment;          // E exp(-|zeta|^2): 1/2 complex, 1/sqrt(3) real
};

/// Divergence witness for the Cameron-Martin norm of a standard field:
/// coefficient partial sums grow linearly (slope 1 per mode).
NullSetDiagnostic null_set_diagnostic(ScalarField field, std::span<const int> m_values,
                                      int n_samples, std::uint64_t seed);

} // namespace cw
