#include "realstruct.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cw {

namespace {
constexpr double kSqrt2 = std::numbers::sqrt2;

void require_compatible(const FieldSample& a, const FieldSample& b) {
    if (a.basis != b.basis || a.coeffs.size() != b.coeffs.size())
        throw std::invalid_argument("field samples have mismatched basis or truncation");
}
} // namespace

FieldSample conjugate(const FieldSample& field) {
    FieldSample out = field;
    for (cplx& c : out.coeffs) c = std::conj(c);
    return out;
}

std::pair<FieldSample, FieldSample> decompose(const FieldSample& z) {
    FieldSample x, y;
    x.basis = y.basis = z.basis;
    x.scalar_field = y.scalar_field = ScalarField::Real;
    x.coeffs.resize(z.coeffs.size());
    y.coeffs.resize(z.coeffs.size());
    for (std::size_t n = 0; n < z.coeffs.size(); ++n) {
        x.coeffs[n] = kSqrt2 * z.coeffs[n].real();
        y.coeffs[n] = kSqrt2 * z.coeffs[n].imag();
    }
    return {std::move(x), std::move(y)};
}

FieldSample compose(const FieldSample& x, const FieldSample& y) {
    require_compatible(x, y);
    if (x.scalar_field != ScalarField::Real || y.scalar_field != ScalarField::Real)
        throw std::invalid_argument("compose: both parts must be Real-tagged");
    FieldSample z;
    z.basis = x.basis;
    z.scalar_field = ScalarField::Complex;
    z.coeffs.resize(x.coeffs.size());
    for (std::size_t n = 0; n < x.coeffs.size(); ++n)
        z.coeffs[n] = cplx(x.coeffs[n].real() / kSqrt2, y.coeffs[n].real() / kSqrt2);
    return z;
}

double pt_norm(const FieldSample& z) {
    KahanSum re2, im2;
    for (cplx c : z.coeffs) {
        re2.add(c.real() * c.real());
        im2.add(c.imag() * c.imag());
    }
    return std::sqrt(re2.value() + im2.value());
}

std::pair<std::vector<cplx>, std::vector<cplx>> rotation_pair_values(
    std::span<const cplx> x, std::span<const cplx> xp) {
    if (x.size() != xp.size())
        throw std::invalid_argument("rotation_pair: length mismatch");
    std::vector<cplx> y(x.size()), yp(x.size());
    for (std::size_t n = 0; n < x.size(); ++n) {
        y[n] = (x[n] + xp[n]) / kSqrt2;
        yp[n] = (x[n] - xp[n]) / kSqrt2;
    }
    return {std::move(y), std::move(yp)};
}

std::pair<FieldSample, FieldSample> rotation_pair(const FieldSample& x,
                                                 const FieldSample& xp) {
    require_compatible(x, xp);
    if (x.scalar_field != xp.scalar_field)
        throw std::invalid_argument("rotation_pair: scalar field mismatch");
    auto [yv, ypv] = rotation_pair_values(x.coeffs, xp.coeffs);
    FieldSample y{x.basis, std::move(yv), x.scalar_field};
    FieldSample yp{x.basis, std::move(ypv), x.scalar_field};
    return {std::move(y), std::move(yp)};
}

} // namespace cw
