#pragma once

#include "rng.hpp"
#include "stats.hpp"

#include <functional>
#include <vector>

namespace cw {

/// Complex-valued function on the uniform M x M grid of the square
/// [-L, L]^2 in the complex plane. Row-major: index i runs over the real
/// axis, j over the imaginary axis.
struct GridFunction2D {
    double half_extent = 6.0;
    int points_per_axis = 32;
    std::vector<cplx> values;

    static GridFunction2D make(double half_extent, int points_per_axis,
                               const std::function<cplx(cplx)>& fn);

    double coord(int i) const;
    double spacing() const { return 2.0 * half_extent / (points_per_axis - 1); }
    cplx& at(int i, int j) { return values[static_cast<std::size_t>(i) * points_per_axis + j]; }
    cplx at(int i, int j) const {
        return values[static_cast<std::size_t>(i) * points_per_axis + j];
    }

    /// Trapezoid quadrature weight of node (i, j).
    double quad_weight(int i, int j) const;

    /// Degree-5 Lagrange interpolation on a 6x6 stencil; zero outside the
    /// grid (domain truncation).
    cplx interp(double x, double y) const;

    /// L2 inner product (f, g) = sum w conj(g) f by grid quadrature.
    static cplx inner(const GridFunction2D& f, const GridFunction2D& g);
    double l2_norm() const;

    void validate() const;
};

/// Continuous bounded potential V with a declared sup bound.
struct Potential {
    std::function<cplx(cplx)> evaluator;
    double bound = 0.0;

    /// Verifies |V| <= bound at every node of the given grid geometry.
    static Potential checked(std::function<cplx(cplx)> fn, double bound,
                             double half_extent, int points_per_axis);
};

/// One step of the complex-BM transition semigroup,
///   (p_tau f)(z) = (pi tau)^-1 int exp(-|z - z'|^2 / tau) f(z') dz',
/// evaluated as a Gauss-Hermite average of the interpolated field. Stable
/// for any tau > 0, including steps far below the grid spacing.
GridFunction2D heat_step(const GridFunction2D& f, double tau);

/// Trotter product: n alternations of the heat step with pointwise
/// multiplication by exp(potential_sign * (T/n) * V). The default sign -1
/// is the weight consistent with e^{-TH}, H = -Delta + V.
GridFunction2D trotter_apply(const GridFunction2D& f, const Potential& v, double t_final,
                             int n_steps, double potential_sign = -1.0);

/// Independent reference: exponentiates the dense discretization
/// H = -(1/4) Lap_h - potential_sign V (4th-order 9-point cross Laplacian,
/// scaled to generate the heat_step semigroup). Dense solve, so M <= 32.
GridFunction2D spectral_expm_oracle(const GridFunction2D& f, const Potential& v,
                                    double t_final, double potential_sign = -1.0);

struct FkParams {
    double t_final = 0.5;
    int paths_per_start = 200;
    int time_steps = 32;
    double potential_sign = -1.0;
    std::uint64_t seed = 42;
};

/// Path-integral estimate of (e^{-TH} f, g): quadrature over grid starts
/// of conj(g) times the path average of exp(sign * int V) f(x(T)), with
/// int V by the left-endpoint rule.
MomentEstimate fk_mc_estimate(const GridFunction2D& f, const GridFunction2D& g,
                              const Potential& v, const FkParams& params);

} // namespace cw
