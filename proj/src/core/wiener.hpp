#pragma once

#include "rng.hpp"
#include "stats.hpp"

#include <vector>

namespace cw {

/// Complex Brownian path at a finite set of times. Convention throughout:
/// E|W_t|^2 = t, increments CN(0, dt, 0); this is the variance forced by
/// ||delta_t||_{H'} = sqrt(t).
struct PathSample {
    std::vector<double> times;   // strictly increasing, times[0] = 0
    std::vector<cplx> values;    // values[0] = start
    cplx start{};

    void validate() const;
};

/// Exact increment sampler; increment k consumes uniforms at offset 4k.
PathSample sample_bm(std::span<const double> times, RandomStream& rng, cplx start = 0.0);

/// cov(W_s, W_t) = min(s, t).
double bm_cov_oracle(double s, double t, double horizon);

/// Karhunen-Loeve series sampler on [0, T]:
///   W(t) = sum_{k<=K} xi_k sqrt(2T) sin((k-1/2) pi t / T) / ((k-1/2) pi)
/// with xi_k i.i.d. CN(0,1,0). T is taken to be the last grid point.
PathSample kl_bm_sample(int modes, std::span<const double> grid, RandomStream& rng);

/// Log of the finite-dimensional density of the path's marks. Per step:
///   -|dx|^2 / (scale dt) - ln(pi scale dt)
/// scale = 1 is this artifact's CN(0, dt, 0) convention; scale = 2 gives
/// the -|dx|^2/(2 dt) exponent variant.
double fdd_log_density(const PathSample& path, double variance_scale = 1.0);

PathSample shift_path(const PathSample& path, cplx x0);

/// Monte-Carlo estimate of E exp(alpha sup_t |W_t|^2) over the grid
/// (discrete sup, a lower bound on the path sup).
MomentEstimate fernique_moment(std::span<const PathSample> paths, double alpha);

} // namespace cw
