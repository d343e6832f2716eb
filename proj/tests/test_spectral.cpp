#include <doctest.h>

#include "core/quad.hpp"
#include "core/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace cw;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("domain parse round-trips") {
    const auto iv = Domain::parse("interval:2.5");
    CHECK(iv.kind == Domain::Kind::Interval);
    CHECK(iv.lx == 2.5);
    const auto rc = Domain::parse("rect:1.5,0.5");
    CHECK(rc.kind == Domain::Kind::Rectangle);
    CHECK(rc.lx == 1.5);
    CHECK(rc.ly == 0.5);
    CHECK_THROWS_AS(Domain::parse("disc:1"), std::invalid_argument);
    CHECK_THROWS_AS(Domain::parse("interval:-1"), std::invalid_argument);
}

TEST_CASE("interval eigenvalues are (n pi / L)^2") {
    auto basis = SpectralBasis::dirichlet(Domain::interval(1.0), 3);
    CHECK(basis->eigenvalue(0) == doctest::Approx(kPi * kPi));
    CHECK(basis->eigenvalue(1) == doctest::Approx(4 * kPi * kPi));
    CHECK(basis->eigenvalue(2) == doctest::Approx(9 * kPi * kPi));
}

TEST_CASE("unit-square eigenvalues with deterministic tie-break") {
    auto basis = SpectralBasis::dirichlet(Domain::rectangle(1.0, 1.0), 4);
    CHECK(basis->eigenvalue(0) == doctest::Approx(2 * kPi * kPi));
    CHECK(basis->eigenvalue(1) == doctest::Approx(5 * kPi * kPi));
    CHECK(basis->eigenvalue(2) == doctest::Approx(5 * kPi * kPi));
    CHECK(basis->eigenvalue(3) == doctest::Approx(8 * kPi * kPi));
    CHECK(basis->mode(1) == std::pair<int, int>(1, 2));
    CHECK(basis->mode(2) == std::pair<int, int>(2, 1));
}

TEST_CASE("interval eigenfunctions are orthonormal under Simpson quadrature") {
    const int n_modes = 50;
    auto basis = SpectralBasis::dirichlet(Domain::interval(1.0), n_modes);
    const SimpsonRule rule(0.0, 1.0, 2048);
    double worst = 0.0;
    for (int a = 0; a < n_modes; ++a)
        for (int b = a; b < n_modes; ++b) {
            double acc = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                acc += rule.weights[i] * basis->eval(a, rule.nodes[i]) *
                       basis->eval(b, rule.nodes[i]);
            worst = std::max(worst, std::abs(acc - (a == b ? 1.0 : 0.0)));
        }
    CHECK(worst < 1e-8);
}

TEST_CASE("weyl ratio closed forms") {
    auto unit = SpectralBasis::dirichlet(Domain::interval(1.0), 20);
    for (int n = 1; n <= 20; ++n)
        CHECK(unit->weyl_ratio(n) == doctest::Approx(1.0 / (kPi * kPi)).epsilon(1e-15));

    auto two = SpectralBasis::dirichlet(Domain::interval(2.0), 20);
    for (int n = 1; n <= 20; ++n)
        CHECK(two->weyl_ratio(n) == doctest::Approx(4.0 / (kPi * kPi)).epsilon(1e-15));
}

TEST_CASE("unit-square weyl ratio approaches 1/(16 pi^2)") {
    auto basis = SpectralBasis::dirichlet(Domain::rectangle(1.0, 1.0), 5000);
    const double target = 1.0 / (16.0 * kPi * kPi);
    CHECK(basis->weyl_ratio(5000) == doctest::Approx(target).epsilon(0.10));
}

TEST_CASE("operator trace and HS norm on a finite geometric law") {
    auto basis = SpectralBasis::dirichlet(Domain::interval(1.0), 3);
    SpectralOperator op(basis, {1.0, 0.5, 0.25});
    CHECK(op.trace() == doctest::Approx(1.75));
    CHECK(op.hs_norm() == doctest::Approx(std::sqrt(21.0) / 4.0));
}

TEST_CASE("fractional powers compose and zero power is the identity") {
    auto basis = SpectralBasis::dirichlet(Domain::interval(1.0), 64);
    const auto op = SpectralOperator::from_eigenvalue_power(basis, -0.6);

    const auto ident = op.frac_power(0.0);
    for (double a : ident.alphas()) CHECK(a == 1.0);

    const auto ab = op.frac_power(0.7).frac_power(1.3);
    const auto direct = op.frac_power(0.7 * 1.3);
    for (int i = 0; i < op.size(); ++i)
        CHECK(ab.alphas()[i] == doctest::Approx(direct.alphas()[i]).epsilon(1e-12));

    SpectralOperator zero(basis, std::vector<double>(64, 0.0));
    CHECK_THROWS_AS(zero.frac_power(-1.0), std::domain_error);
}

TEST_CASE("hs_norm^2 against direct summation, alpha_n = lambda_n^{-0.6}") {
    const int n_modes = 10000;
    auto basis = SpectralBasis::dirichlet(Domain::interval(1.0), n_modes);
    const auto op = SpectralOperator::from_eigenvalue_power(basis, -0.6);

    long double acc = 0.0L;
    for (int n = 1; n <= n_modes; ++n) {
        const long double lam = (long double)(n)*kPi * n * kPi;
        acc += std::pow(lam, -1.2L);
    }
    const double hs2 = op.hs_norm() * op.hs_norm();
    CHECK(hs2 == doctest::Approx((double)acc).epsilon(1e-12));
    CHECK(hs2 <= op.trace() * op.alphas()[0] * (1 + 1e-12));
}

TEST_CASE("basis serialization carries the eigenvalues") {
    auto basis = SpectralBasis::dirichlet(Domain::interval(1.0), 5);
    const auto j = basis->to_json();
    CHECK(j.at("N").get<int>() == 5);
    CHECK(j.at("eigenvalues").size() == 5);
}
