#include <doctest.h>

#include "core/klfield.hpp"
#include "core/stats.hpp"

#include <cmath>
#include <vector>

using namespace cw;

namespace {

SpectralOperator make_op(std::vector<double> alphas) {
    auto basis =
        SpectralBasis::dirichlet(Domain::interval(1.0), (int)alphas.size());
    return SpectralOperator(basis, std::move(alphas));
}

} // namespace

TEST_CASE("zero operator gives the zero field") {
    const auto op = make_op(std::vector<double>(8, 0.0));
    RandomStream rng(1, "kl.zero", 0);
    const auto s = kl_sample(op, 8, ScalarField::Complex, rng);
    for (cplx c : s.coeffs) CHECK(c == cplx(0.0, 0.0));
}

TEST_CASE("rank-one operator produces one proper mode") {
    const auto op = make_op({1.0, 0.0, 0.0});
    std::vector<cplx> first(100000);
    for (std::size_t i = 0; i < first.size(); ++i) {
        RandomStream rng(42, "kl.rank1", i);
        const auto s = kl_sample(op, 3, ScalarField::Complex, rng);
        CHECK(s.coeffs[1] == cplx(0.0, 0.0));
        CHECK(s.coeffs[2] == cplx(0.0, 0.0));
        first[i] = s.coeffs[0];
    }
    const auto m = estimate_moments(first);
    CHECK(std::abs(m.variance.value.real() - 1.0) <= 4.0 * m.variance.std_error);
    CHECK(std::abs(m.pseudo_variance.value) <= 4.0 * m.pseudo_variance.std_error);
}

TEST_CASE("coupled truncations share leading coefficients exactly") {
    std::vector<double> alphas(32);
    for (int i = 0; i < 32; ++i) alphas[i] = 1.0 / ((i + 1.0) * (i + 1.0));
    const auto op = make_op(alphas);
    for (int trial = 0; trial < 50; ++trial) {
        RandomStream a(7, "kl.couple", (std::uint64_t)trial);
        RandomStream b(7, "kl.couple", (std::uint64_t)trial);
        const auto full = kl_sample(op, 32, ScalarField::Complex, a);
        const auto part = kl_sample(op, 12, ScalarField::Complex, b);
        for (int k = 0; k < 12; ++k) CHECK(full.coeffs[k] == part.coeffs[k]);
    }
}

TEST_CASE("real fields have real coefficients") {
    const auto op = make_op({1.0, 0.5, 0.25});
    RandomStream rng(3, "kl.real", 0);
    const auto s = kl_sample(op, 3, ScalarField::Real, rng);
    for (cplx c : s.coeffs) CHECK(c.imag() == 0.0);
}

TEST_CASE("trace identity, alpha_n = 1/n^2") {
    std::vector<double> alphas(100);
    double basel = 0.0;
    for (int i = 0; i < 100; ++i) {
        alphas[i] = 1.0 / ((i + 1.0) * (i + 1.0));
        basel += alphas[i];
    }
    const auto op = make_op(alphas);
    CHECK(op.trace() == doctest::Approx(basel));

    std::vector<FieldSample> samples(50000);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        RandomStream rng(42, "kl.trace", i);
        samples[i] = kl_sample(op, 100, ScalarField::Complex, rng);
    }
    const auto check = trace_identity_check(op, samples);
    CHECK(check.gap_sigma <= 4.0);
}

TEST_CASE("truncation tail closed forms") {
    std::vector<double> alphas(20);
    for (int i = 0; i < 20; ++i) alphas[i] = std::pow(2.0, -(i + 1.0));
    const auto op = make_op(alphas);
    CHECK(truncation_tail(op, 9, 10) == doctest::Approx(std::pow(2.0, -10.0)));
    CHECK(truncation_tail(op, 5, 10) ==
          doctest::Approx(std::pow(2.0, -5.0) - std::pow(2.0, -10.0)));
    CHECK_THROWS(truncation_tail(op, 10, 5));
}

TEST_CASE("covariance oracle matches empirical cross covariance") {
    const auto op = make_op({1.0, 0.7, 0.4, 0.2});
    const std::vector<cplx> f = {{0.5, 0.1}, {-0.3, 0.2}, {0.0, 1.0}, {0.8, 0.0}};
    const std::vector<cplx> g = {{1.0, 0.0}, {0.2, -0.4}, {0.5, 0.5}, {-0.1, 0.3}};

    const int n = 100000;
    std::vector<cplx> fs(n), gs(n);
    for (int i = 0; i < n; ++i) {
        RandomStream rng(42, "kl.cov", (std::uint64_t)i);
        const auto s = kl_sample(op, 4, ScalarField::Complex, rng);
        cplx af = 0.0, ag = 0.0;
        for (int k = 0; k < 4; ++k) {
            af += f[k] * std::conj(s.coeffs[k]);
            ag += g[k] * std::conj(s.coeffs[k]);
        }
        fs[i] = af;
        gs[i] = ag;
    }
    const auto cc = cross_cov(fs, gs);
    const cplx target = covariance_oracle(op, f, g);
    CHECK(std::abs(cc.cov.value - target) <= 4.0 * cc.cov.std_error);
}

TEST_CASE("null-set diagnostic slope and exponential moment") {
    const std::vector<int> ms = {100, 200, 300, 400, 500};
    const auto diag = null_set_diagnostic(ScalarField::Complex, ms, 400,
                                          RandomStream::derive_base(42, "kl.ns", 0));
    CHECK(std::abs(diag.slope - 1.0) <= 0.05);
    CHECK(std::abs(diag.exp_moment.value.real() - 0.5) <=
          4.0 * diag.exp_moment.std_error);

    const auto real_diag = null_set_diagnostic(
        ScalarField::Real, ms, 400, RandomStream::derive_base(42, "kl.nsr", 0));
    CHECK(std::abs(real_diag.exp_moment.value.real() - 1.0 / std::sqrt(3.0)) <=
          4.0 * real_diag.exp_moment.std_error);
}

TEST_CASE("CF of a fixed functional is stable in the truncation level") {
    std::vector<double> alphas(200);
    for (int i = 0; i < 200; ++i) alphas[i] = std::pow(i + 1.0, -2.0);
    const auto op = make_op(alphas);

    const int n = 50000;
    std::vector<cplx> at50(n), at200(n);
    for (int i = 0; i < n; ++i) {
        RandomStream a(42, "kl.cfconv", (std::uint64_t)i);
        const auto s200 = kl_sample(op, 200, ScalarField::Complex, a);
        KahanSumC f50, f200;
        for (int k = 0; k < 200; ++k) {
            f200.add(s200.coeffs[k]);
            if (k < 50) f50.add(s200.coeffs[k]);
        }
        at50[i] = f50.value();
        at200[i] = f200.value();
    }
    const auto cf50 = empirical_cf(at50, 1.0);
    const auto cf200 = empirical_cf(at200, 1.0);
    // tail variance sum_{51..200} 1/n^2 ~ 0.015 barely moves the CF
    CHECK(std::abs(cf50.value - cf200.value) <=
          4.0 * (cf50.std_error + cf200.std_error) + 0.01);
}
