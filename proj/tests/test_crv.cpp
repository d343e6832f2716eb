#include <doctest.h>

#include "core/crv.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace cw;

namespace {

std::vector<cplx> draws(const GaussianSpec& spec, int n, const char* tag) {
    RandomStream rng(42, tag, 0);
    std::vector<cplx> out(n);
    for (auto& z : out) z = sample_gaussian(spec, rng);
    return out;
}

} // namespace

TEST_CASE("spec validation rejects unrealizable laws") {
    GaussianSpec bad = GaussianSpec::standard_complex();
    bad.variance = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = GaussianSpec::standard_complex();
    bad.pseudo_variance = 2.0;  // |pvar| > var
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = GaussianSpec::standard_real();
    bad.pseudo_variance = 0.5;  // real law needs pvar = var
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = GaussianSpec::standard_real();
    bad.mean = cplx(0.0, 1.0);
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("zero-variance law returns the mean exactly") {
    GaussianSpec spec;
    spec.mean = cplx(2.0, -3.0);
    spec.variance = 0.0;
    spec.pseudo_variance = 0.0;
    RandomStream rng(1, "crv.const", 0);
    for (int i = 0; i < 100; ++i) CHECK(sample_gaussian(spec, rng) == spec.mean);
}

TEST_CASE("pvar = var forces real draws") {
    GaussianSpec spec;
    spec.variance = 1.0;
    spec.pseudo_variance = 1.0;
    RandomStream rng(1, "crv.deg", 0);
    for (int i = 0; i < 1000; ++i) CHECK(sample_gaussian(spec, rng).imag() == 0.0);
}

TEST_CASE("Real-tagged draws have exactly zero imaginary part") {
    const auto spec = GaussianSpec::standard_real();
    RandomStream rng(1, "crv.real", 0);
    for (int i = 0; i < 1000; ++i) CHECK(sample_gaussian(spec, rng).imag() == 0.0);
}

TEST_CASE("standard proper law: variance splits evenly over Re and Im") {
    const auto z = draws(GaussianSpec::standard_complex(), 200000, "crv.split");
    const auto m = estimate_moments(z);
    CHECK(std::abs(m.mean.value) <= 4.0 * m.mean.std_error);
    CHECK(std::abs(m.variance.value.real() - 1.0) <= 4.0 * m.variance.std_error);
    CHECK(std::abs(m.pseudo_variance.value) <= 4.0 * m.pseudo_variance.std_error);

    double vre = 0.0, vim = 0.0, cross = 0.0;
    for (cplx v : z) {
        vre += v.real() * v.real();
        vim += v.imag() * v.imag();
        cross += v.real() * v.imag();
    }
    const double n = static_cast<double>(z.size());
    const double band = 4.0 * std::sqrt(2.0 / n);  // ~4 sigma for a chi^2 mean
    CHECK(std::abs(vre / n - 0.5) <= band);
    CHECK(std::abs(vim / n - 0.5) <= band);
    CHECK(std::abs(cross / n) <= band);
}

TEST_CASE("cf_analytic closed-form values") {
    CHECK(cf_analytic(GaussianSpec::standard_complex(), 0.0) == cplx(1.0, 0.0));
    CHECK(cf_analytic(GaussianSpec::standard_complex(), 1.0).real() ==
          doctest::Approx(std::exp(-0.25)));
    CHECK(cf_analytic(GaussianSpec::standard_complex(), 1.0).imag() == 0.0);
    // embedded real N(0,1) at w = i: Re(i conj(Z)) = Im Z = 0 pointwise
    CHECK(cf_analytic(GaussianSpec::standard_real(), cplx(0.0, 1.0)) ==
          cplx(1.0, 0.0));
}

TEST_CASE("cf_analytic modulus is at most one") {
    GaussianSpec spec;
    spec.mean = cplx(0.3, -0.2);
    spec.variance = 1.7;
    spec.pseudo_variance = cplx(0.4, 0.9);
    spec.validate();
    const cplx probes[] = {{0, 0}, {1, 0}, {0, 2}, {-1.5, 0.5}, {3, 3}};
    for (cplx w : probes) CHECK(std::abs(cf_analytic(spec, w)) <= 1.0 + 1e-15);
    CHECK(std::abs(cf_analytic(spec, 0.0)) == 1.0);
}

TEST_CASE("empirical CF matches cf_analytic for a skewed law") {
    GaussianSpec spec;
    spec.mean = cplx(0.5, -1.0);
    spec.variance = 2.0;
    spec.pseudo_variance = cplx(0.8, -0.6);
    spec.validate();
    const auto z = draws(spec, 200000, "crv.skew");
    const cplx probes[] = {{1, 0}, {0, 1}, {1, -1}, {-0.5, 2}};
    for (cplx w : probes) {
        const auto emp = empirical_cf(z, w);
        CHECK(std::abs(emp.value - cf_analytic(spec, w)) <= 4.0 * emp.std_error);
    }
}

TEST_CASE("estimate_moments on a constant sequence") {
    const std::vector<cplx> z(10, cplx(1.5, -2.5));
    const auto m = estimate_moments(z);
    CHECK(m.mean.value == cplx(1.5, -2.5));
    CHECK(m.variance.value == cplx(0.0, 0.0));
    CHECK(m.pseudo_variance.value == cplx(0.0, 0.0));
}

TEST_CASE("estimate_moments on a conjugate pair has real second moments") {
    // {z, conj z}: mean Re z; the centred residuals are +/- i Im z, so the
    // variance is 2 (Im z)^2 (n-1 normalization) and the pseudo-variance is
    // its negative -- both exactly real.
    const cplx z(0.7, 1.3);
    const std::vector<cplx> pairv = {z, std::conj(z)};
    const auto m = estimate_moments(pairv);
    const double im2 = z.imag() * z.imag();
    CHECK(m.mean.value == cplx(z.real(), 0.0));
    CHECK(m.variance.value.real() == doctest::Approx(2.0 * im2));
    CHECK(m.variance.value.imag() == 0.0);
    CHECK(m.pseudo_variance.value.real() == doctest::Approx(-2.0 * im2));
    CHECK(m.pseudo_variance.value.imag() == 0.0);
}

TEST_CASE("estimate_moments recovers a skewed law") {
    GaussianSpec spec;
    spec.mean = cplx(1.0, 2.0);
    spec.variance = 1.5;
    spec.pseudo_variance = cplx(-0.5, 0.25);
    spec.validate();
    const auto z = draws(spec, 200000, "crv.mom");
    const auto m = estimate_moments(z);
    CHECK(std::abs(m.mean.value - spec.mean) <= 4.0 * m.mean.std_error);
    CHECK(std::abs(m.variance.value.real() - spec.variance) <=
          4.0 * m.variance.std_error);
    CHECK(std::abs(m.pseudo_variance.value - spec.pseudo_variance) <=
          4.0 * m.pseudo_variance.std_error);
}
