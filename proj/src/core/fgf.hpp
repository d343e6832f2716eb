#pragma once

#include "klfield.hpp"
#include "spectral.hpp"

#include <functional>

namespace cw {

/// Smooth test function with cached eigenbasis projections
/// p_n = (phi, w_n)_{L2}, computed by composite Simpson quadrature.
struct TestFunctionRep {
    std::shared_ptr<const SpectralBasis> basis;
    std::vector<cplx> projections;

    /// 1-d: phi on [0, L]. `panels` Simpson panels (default 2048).
    static TestFunctionRep project_1d(std::shared_ptr<const SpectralBasis> basis,
                                      const std::function<cplx(double)>& phi,
                                      int panels = 2048);

    /// 2-d rectangle; separable contraction over the tensor sine modes.
    static TestFunctionRep project_2d(std::shared_ptr<const SpectralBasis> basis,
                                      const std::function<cplx(double, double)>& phi,
                                      int panels = 2048);
};

/// Coefficientwise (-Delta)^s: multiply coefficient n by lambda_n^s.
std::vector<cplx> frac_laplacian_apply(std::span<const cplx> coeffs, double s,
                                       const SpectralBasis& basis);

/// Truncated L_s inner product sum lambda_n^{2s} p_n conj(q_n).
cplx ls_inner(const TestFunctionRep& phi, const TestFunctionRep& psi, double s);

/// Complex fractional Gaussian field of order s: coefficients
/// lambda_n^s xi_n with xi_n i.i.d. CN(0,1,0), so that <Z, phi> has law
/// CN(0, ||phi||^2_{L_s}, 0).
FieldSample sample_fgf(double s, std::shared_ptr<const SpectralBasis> basis, int m,
                       RandomStream& rng);

/// Distribution pairing <Z, phi> = sum c_n (int w_n phi); no conjugation
/// on phi.
cplx pair(const FieldSample& field, const TestFunctionRep& phi);

struct RegularityPoint {
    double t = 0.0;
    double partial_sum = 0.0;   // sum_{n<=N} lambda_n^{2(s-t)}
    double block_ratio = 0.0;   // (S(N)-S(N/2)) / (S(N/2)-S(N/4)); >= 1 iff divergent
    double tail_ratio = 0.0;    // last-quarter contribution / total
    bool divergent = false;
};

/// E||Z||^2_{L_{-t}} truncation diagnostic across a grid of t; the series
/// converges iff t > s + d/4 (Weyl growth of lambda_n).
std::vector<RegularityPoint> regularity_profile(double s, const SpectralBasis& basis,
                                                std::span<const double> t_grid);

} // namespace cw
