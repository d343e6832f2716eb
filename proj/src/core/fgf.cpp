#include "fgf.hpp"

#include "quad.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cw {

namespace {
constexpr double kPi = std::numbers::pi;
}

TestFunctionRep TestFunctionRep::project_1d(std::shared_ptr<const SpectralBasis> basis,
                                            const std::function<cplx(double)>& phi,
                                            int panels) {
    if (!basis || basis->domain().kind != Domain::Kind::Interval)
        throw std::invalid_argument("project_1d: interval basis required");
    const double length = basis->domain().lx;
    const SimpsonRule rule(0.0, length, panels);

    TestFunctionRep rep;
    rep.basis = basis;
    rep.projections.resize(basis->size());

    std::vector<cplx> phi_vals(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        phi_vals[i] = phi(rule.nodes[i]) * rule.weights[i];

    const double scale = std::sqrt(2.0 / length);
    for (int n = 0; n < basis->size(); ++n) {
        const int j = basis->mode(n).first;
        KahanSumC acc;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            acc.add(phi_vals[i] * (scale * std::sin(j * kPi * rule.nodes[i] / length)));
        rep.projections[n] = acc.value();
    }
    return rep;
}

TestFunctionRep TestFunctionRep::project_2d(std::shared_ptr<const SpectralBasis> basis,
                                            const std::function<cplx(double, double)>& phi,
                                            int panels) {
    if (!basis || basis->domain().kind != Domain::Kind::Rectangle)
        throw std::invalid_argument("project_2d: rectangle basis required");
    const double lx = basis->domain().lx;
    const double ly = basis->domain().ly;
    const SimpsonRule rx(0.0, lx, panels);
    const SimpsonRule ry(0.0, ly, panels);

    int j_max = 1, k_max = 1;
    for (int n = 0; n < basis->size(); ++n) {
        j_max = std::max(j_max, basis->mode(n).first);
        k_max = std::max(k_max, basis->mode(n).second);
    }

    // phi sampled once; the per-mode double sum factorizes, so contract
    // over x for every j first, then over y per (j, k).
    const std::size_t nx = rx.nodes.size();
    const std::size_t ny = ry.nodes.size();
    std::vector<cplx> phi_w(nx * ny);
    for (std::size_t a = 0; a < nx; ++a)
        for (std::size_t b = 0; b < ny; ++b)
            phi_w[a * ny + b] =
                phi(rx.nodes[a], ry.nodes[b]) * rx.weights[a] * ry.weights[b];

    const double sx = std::sqrt(2.0 / lx);
    const double sy = std::sqrt(2.0 / ly);
    std::vector<double> sinx(static_cast<std::size_t>(j_max) * nx);
    for (int j = 1; j <= j_max; ++j)
        for (std::size_t a = 0; a < nx; ++a)
            sinx[static_cast<std::size_t>(j - 1) * nx + a] =
                sx * std::sin(j * kPi * rx.nodes[a] / lx);
    std::vector<double> siny(static_cast<std::size_t>(k_max) * ny);
    for (int k = 1; k <= k_max; ++k)
        for (std::size_t b = 0; b < ny; ++b)
            siny[static_cast<std::size_t>(k - 1) * ny + b] =
                sy * std::sin(k * kPi * ry.nodes[b] / ly);

    std::vector<cplx> contracted(static_cast<std::size_t>(j_max) * ny);
    for (int j = 1; j <= j_max; ++j) {
        const double* sj = &sinx[static_cast<std::size_t>(j - 1) * nx];
        for (std::size_t b = 0; b < ny; ++b) {
            KahanSumC acc;
            for (std::size_t a = 0; a < nx; ++a) acc.add(phi_w[a * ny + b] * sj[a]);
            contracted[static_cast<std::size_t>(j - 1) * ny + b] = acc.value();
        }
    }

    TestFunctionRep rep;
    rep.basis = basis;
    rep.projections.resize(basis->size());
    for (int n = 0; n < basis->size(); ++n) {
        const auto [j, k] = basis->mode(n);
        const cplx* cj = &contracted[static_cast<std::size_t>(j - 1) * ny];
        const double* sk = &siny[static_cast<std::size_t>(k - 1) * ny];
        KahanSumC acc;
        for (std::size_t b = 0; b < ny; ++b) acc.add(cj[b] * sk[b]);
        rep.projections[n] = acc.value();
    }
    return rep;
}

std::vector<cplx> frac_laplacian_apply(std::span<const cplx> coeffs, double s,
                                       const SpectralBasis& basis) {
    if (static_cast<int>(coeffs.size()) > basis.size())
        throw std::invalid_argument("frac_laplacian_apply: more coefficients than modes");
    std::vector<cplx> out(coeffs.size());
    for (std::size_t n = 0; n < coeffs.size(); ++n)
        out[n] = coeffs[n] * std::pow(basis.eigenvalue(static_cast<int>(n)), s);
    return out;
}

cplx ls_inner(const TestFunctionRep& phi, const TestFunctionRep& psi, double s) {
    if (phi.basis != psi.basis)
        throw std::invalid_argument("ls_inner: different bases");
    KahanSumC acc;
    for (std::size_t n = 0; n < phi.projections.size(); ++n)
        acc.add(std::pow(phi.basis->eigenvalue(static_cast<int>(n)), 2.0 * s) *
                phi.projections[n] * std::conj(psi.projections[n]));
    return acc.value();
}

FieldSample sample_fgf(double s, std::shared_ptr<const SpectralBasis> basis, int m,
                       RandomStream& rng) {
    // Standard field on L_{-s} expanded in w_n: coefficient lambda_n^s xi_n,
    // i.e. the KL sample of the diagonal operator alpha_n = lambda_n^{2s}.
    auto op = SpectralOperator::from_eigenvalue_power(std::move(basis), 2.0 * s);
    return kl_sample(op, m, ScalarField::Complex, rng);
}

cplx pair(const FieldSample& field, const TestFunctionRep& phi) {
    if (field.basis != phi.basis)
        throw std::invalid_argument("pair: field and test function use different bases");
    KahanSumC acc;
    for (std::size_t n = 0; n < field.coeffs.size(); ++n)
        acc.add(field.coeffs[n] * phi.projections[n]);
    return acc.value();
}

std::vector<RegularityPoint> regularity_profile(double s, const SpectralBasis& basis,
                                                std::span<const double> t_grid) {
    const int n = basis.size();
    if (n < 8) throw std::invalid_argument("regularity_profile: basis too small");

    std::vector<RegularityPoint> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) {
        const double expo = 2.0 * (s - t);
        KahanSum total;
        double s_quarter = 0.0, s_half = 0.0, s_three_quarter = 0.0;
        for (int i = 0; i < n; ++i) {
            total.add(std::pow(basis.eigenvalue(i), expo));
            if (i + 1 == n / 4) s_quarter = total.value();
            if (i + 1 == n / 2) s_half = total.value();
            if (i + 1 == 3 * (n / 4)) s_three_quarter = total.value();
        }
        RegularityPoint pt;
        pt.t = t;
        pt.partial_sum = total.value();
        // Dyadic block-sum ratio: terms ~ n^x give ratio 2^{1+x}, which
        // crosses 1 exactly at the convergence boundary x = -1.
        pt.block_ratio = (total.value() - s_half) / (s_half - s_quarter);
        pt.tail_ratio = (total.value() - s_three_quarter) / total.value();
        pt.divergent = pt.block_ratio >= 1.0;
        out.push_back(pt);
    }
    return out;
}

} // namespace cw
