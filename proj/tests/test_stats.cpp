#include <doctest.h>

#include "core/crv.hpp"
#include "core/rng.hpp"
#include "core/stats.hpp"

#include <cmath>
#include <vector>

using namespace cw;

namespace {

std::vector<cplx> standard_draws(int n, const char* tag) {
    RandomStream rng(42, tag, 0);
    std::vector<cplx> out(n);
    const auto spec = GaussianSpec::standard_complex();
    for (auto& z : out) z = sample_gaussian(spec, rng);
    return out;
}

const std::vector<std::pair<cplx, cplx>> kPairs = {
    {{1, 0}, {-1, 0}}, {{0, 1}, {0, -1}}, {{1, 1}, {1, -1}}, {{2, 0}, {0, 2}}};

} // namespace

TEST_CASE("mc_mean on constants has zero error") {
    const std::vector<cplx> v(4, cplx(1.0, 0.0));
    const auto est = mc_mean(v);
    CHECK(est.value == cplx(1.0, 0.0));
    CHECK(est.std_error == 0.0);
    CHECK(est.n_samples == 4);
}

TEST_CASE("mc_mean two-point case") {
    const std::vector<cplx> v = {0.0, 2.0};
    const auto est = mc_mean(v);
    CHECK(est.value.real() == doctest::Approx(1.0));
    // sample std = sqrt(2), std error = sqrt(2)/sqrt(2) = 1
    CHECK(est.std_error == doctest::Approx(1.0));
}

TEST_CASE("mc_mean CLT self-check on standard draws") {
    const auto draws = standard_draws(100000, "stats.clt");
    const auto est = mc_mean(draws);
    CHECK(std::abs(est.value) <= 4.0 * est.std_error);
}

TEST_CASE("empirical_cf trivial probes") {
    const std::vector<cplx> v = {cplx(0.3, -0.7), cplx(0.3, -0.7)};
    const auto at0 = empirical_cf(v, 0.0);
    CHECK(at0.value == cplx(1.0, 0.0));
    CHECK(at0.std_error == 0.0);

    const auto at1 = empirical_cf(v, 1.0);
    // all samples equal z0: CF is exp(i Re(conj(z0)))
    CHECK(at1.value.real() == doctest::Approx(std::cos(0.3)));
    CHECK(at1.value.imag() == doctest::Approx(std::sin(0.3)));
}

TEST_CASE("empirical_cf matches the analytic CF of the standard law") {
    const auto draws = standard_draws(200000, "stats.cf");
    const auto est = empirical_cf(draws, 1.0);
    const double target = std::exp(-0.25);
    CHECK(std::abs(est.value - cplx(target, 0.0)) <= 4.0 * est.std_error);
}

TEST_CASE("cross_cov of a sequence with itself") {
    const auto a = standard_draws(100000, "stats.cc");
    const auto cc = cross_cov(a, a);
    CHECK(std::abs(cc.cov.value.real() - 1.0) <= 4.0 * cc.cov.std_error);
    CHECK(std::abs(cc.cov.value.imag()) <= 1e-12 * std::abs(cc.cov.value.real()));
    CHECK(std::abs(cc.pcov.value) <= 4.0 * cc.pcov.std_error);
}

TEST_CASE("cross_cov against a constant is exactly zero") {
    const auto a = standard_draws(100, "stats.const");
    const std::vector<cplx> b(a.size(), cplx(2.0, 1.0));
    const auto cc = cross_cov(a, b);
    CHECK(cc.cov.value == cplx(0.0, 0.0));
    CHECK(cc.pcov.value == cplx(0.0, 0.0));
}

TEST_CASE("cross_cov of embedded real draws has cov = pcov") {
    RandomStream rng(42, "stats.real", 0);
    const auto spec = GaussianSpec::standard_real();
    std::vector<cplx> a(100000);
    for (auto& z : a) z = sample_gaussian(spec, rng);
    const auto cc = cross_cov(a, a);
    CHECK(std::abs(cc.cov.value.real() - 1.0) <= 4.0 * cc.cov.std_error);
    CHECK(std::abs(cc.pcov.value - cplx(1.0, 0.0)) <= 4.0 * cc.pcov.std_error);
}

TEST_CASE("factorization gap vanishes for independent inputs") {
    const auto a = standard_draws(100000, "stats.ind.a");
    const auto b = standard_draws(100000, "stats.ind.b");
    const auto gap = cf_factorization_gap(a, b, kPairs);
    CHECK(gap.gap <= 4.0 * gap.mc_error);
}

TEST_CASE("factorization gap detects perfect dependence") {
    // At probe (1, -1) the joint CF of (a, a) is 1 while the marginals give
    // e^{-1/4} each, so the gap approaches 1 - e^{-1/2}.
    const auto a = standard_draws(100000, "stats.dep");
    const std::vector<std::pair<cplx, cplx>> probe = {{{1, 0}, {-1, 0}}};
    const auto gap = cf_factorization_gap(a, a, probe);
    const double expected = 1.0 - std::exp(-0.5);
    CHECK(gap.gap == doctest::Approx(expected).epsilon(0.02));
}

TEST_CASE("factorization gap against a constant is exactly zero") {
    const auto a = standard_draws(1000, "stats.depc");
    const std::vector<cplx> b(a.size(), cplx(0.5, 0.5));
    const auto gap = cf_factorization_gap(a, b, kPairs);
    CHECK(gap.gap <= 1e-15);
}

TEST_CASE("std error shrinks like 1/sqrt(n)") {
    const auto big = standard_draws(40000, "stats.scaling");
    const std::vector<cplx> small(big.begin(), big.begin() + 10000);
    const double ratio = mc_mean(small).std_error / mc_mean(big).std_error;
    CHECK(ratio >= 1.6);
    CHECK(ratio <= 2.4);
}
