#include "crv.hpp"

#include <cmath>
#include <stdexcept>

namespace cw {

void GaussianSpec::validate() const {
    if (!(variance >= 0.0))
        throw std::invalid_argument("GaussianSpec: variance must be >= 0");
    if (std::abs(pseudo_variance) > variance * (1.0 + 1e-12))
        throw std::invalid_argument("GaussianSpec: |pseudo_variance| exceeds variance");
    if (scalar_field == ScalarField::Real) {
        if (pseudo_variance != cplx(variance) || mean.imag() != 0.0)
            throw std::invalid_argument(
                "GaussianSpec: Real tag requires pvar = var and real mean");
    }
}

cplx sample_gaussian(const GaussianSpec& spec, RandomStream& rng) {
    spec.validate();
    // Covariance of (Re, Im) in terms of (variance v, pseudo-variance p):
    //   [ (v + Re p)/2   Im p / 2    ]
    //   [ Im p / 2       (v - Re p)/2 ]
    const double v = spec.variance;
    const cplx p = spec.pseudo_variance;
    const double c11 = 0.5 * (v + p.real());
    const double c12 = 0.5 * p.imag();
    const double c22 = 0.5 * (v - p.real());

    const double l11 = std::sqrt(std::max(c11, 0.0));
    const double l21 = l11 > 0.0 ? c12 / l11 : 0.0;
    const double l22 = std::sqrt(std::max(c22 - l21 * l21, 0.0));

    const auto [x, y] = rng.normal_pair();
    return spec.mean + cplx(l11 * x, l21 * x + l22 * y);
}

cplx cf_analytic(const GaussianSpec& spec, cplx w) {
    spec.validate();
    const double lin = std::real(w * std::conj(spec.mean));
    const double quad = std::norm(w) * spec.variance +
                        std::real(w * w * std::conj(spec.pseudo_variance));
    return std::exp(cplx(-0.25 * quad, lin));
}

Moments estimate_moments(std::span<const cplx> samples) {
    if (samples.size() < 2)
        throw std::invalid_argument("estimate_moments: need at least 2 samples");
    const std::size_t n = samples.size();
    const auto mean = mc_mean(samples);

    std::vector<cplx> sq(n), psq(n);
    for (std::size_t k = 0; k < n; ++k) {
        const cplx d = samples[k] - mean.value;
        sq[k] = std::norm(d);
        psq[k] = d * d;
    }
    auto var = mc_mean(sq);
    auto pvar = mc_mean(psq);
    const double corr = static_cast<double>(n) / static_cast<double>(n - 1);
    var.value *= corr;
    pvar.value *= corr;
    return {mean, var, pvar};
}

} // namespace cw
