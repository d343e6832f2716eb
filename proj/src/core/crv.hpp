#pragma once

#include "rng.hpp"
#include "stats.hpp"

#include <complex>

namespace cw {

enum class ScalarField { Real, Complex };

/// First and second moments of a scalar complex Gaussian law.
///
/// The Real tag embeds a real Gaussian as a complex one: pseudo-variance
/// equals variance and the mean is real, so every draw has zero imaginary
/// part. "Standard complex" throughout means (0, 1, 0): Re and Im i.i.d.
/// N(0, 1/2).
struct GaussianSpec {
    cplx mean{};
    double variance = 1.0;
    cplx pseudo_variance{};
    ScalarField scalar_field = ScalarField::Complex;

    static GaussianSpec standard_complex() { return {0.0, 1.0, 0.0, ScalarField::Complex}; }
    static GaussianSpec standard_real() { return {0.0, 1.0, 1.0, ScalarField::Real}; }

    /// Throws std::invalid_argument on an unrealizable law.
    void validate() const;
};

/// One draw. Consumes exactly 2 uniforms (one Box-Muller pair); the 2x2
/// real covariance of (Re, Im) is applied via its closed-form Cholesky
/// factor, so the degenerate case |pvar| = var produces an exact
/// zero-variance imaginary direction rather than an error.
cplx sample_gaussian(const GaussianSpec& spec, RandomStream& rng);

/// Analytic characteristic function
///   exp( i Re(w . mean) - 1/4 [ |w|^2 Var + Re(w^2 . PVar) ] )
/// with the dot product x . y = x conj(y).
cplx cf_analytic(const GaussianSpec& spec, cplx w);

struct Moments {
    MomentEstimate mean;
    MomentEstimate variance;         // value is real-valued by construction
    MomentEstimate pseudo_variance;
};

/// Unbiased sample moments about the sample mean; requires >= 2 samples.
Moments estimate_moments(std::span<const cplx> samples);

} // namespace cw
