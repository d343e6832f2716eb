#include "wiener.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cw {

namespace {
constexpr double kPi = std::numbers::pi;
}

void PathSample::validate() const {
    if (times.empty() || times.size() != values.size())
        throw std::invalid_argument("PathSample: times/values length mismatch");
    if (times.front() != 0.0)
        throw std::invalid_argument("PathSample: first time must be 0");
    for (std::size_t k = 1; k < times.size(); ++k)
        if (!(times[k] > times[k - 1]))
            throw std::invalid_argument("PathSample: times must be strictly increasing");
    if (values.front() != start)
        throw std::invalid_argument("PathSample: values[0] must equal start");
}

PathSample sample_bm(std::span<const double> times, RandomStream& rng, cplx start) {
    if (times.empty() || times.front() != 0.0)
        throw std::invalid_argument("sample_bm: grid must start at 0");
    PathSample path;
    path.start = start;
    path.times.assign(times.begin(), times.end());
    path.values.resize(times.size());
    path.values[0] = start;
    for (std::size_t k = 1; k < times.size(); ++k) {
        const double dt = times[k] - times[k - 1];
        if (!(dt > 0.0))
            throw std::invalid_argument("sample_bm: times must be strictly increasing");
        rng.seek(4ULL * (k - 1));
        path.values[k] = path.values[k - 1] + std::sqrt(dt) * rng.standard_complex();
    }
    return path;
}

double bm_cov_oracle(double s, double t, double horizon) {
    if (s < 0.0 || t < 0.0 || s > horizon || t > horizon)
        throw std::out_of_range("bm_cov_oracle: time out of [0, T]");
    return std::min(s, t);
}

PathSample kl_bm_sample(int modes, std::span<const double> grid, RandomStream& rng) {
    if (modes < 1) throw std::invalid_argument("kl_bm_sample: need K >= 1");
    if (grid.empty() || grid.front() != 0.0)
        throw std::invalid_argument("kl_bm_sample: grid must start at 0");
    const double horizon = grid.back();
    if (!(horizon > 0.0)) throw std::invalid_argument("kl_bm_sample: empty horizon");

    std::vector<cplx> xi(modes);
    for (int k = 0; k < modes; ++k) {
        rng.seek(4ULL * k);
        xi[k] = rng.standard_complex();
    }

    PathSample path;
    path.start = 0.0;
    path.times.assign(grid.begin(), grid.end());
    path.values.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        KahanSumC acc;
        for (int k = 0; k < modes; ++k) {
            const double freq = (k + 0.5) * kPi / horizon;
            // h_k(t) = sqrt(2T) sin((k+1/2) pi t / T) / ((k+1/2) pi):
            // derivatives sqrt(2/T) cos(freq t) are L2-orthonormal.
            const double hk = std::sqrt(2.0 * horizon) * std::sin(freq * grid[i]) /
                              ((k + 0.5) * kPi);
            acc.add(xi[k] * hk);
        }
        path.values[i] = acc.value();
    }
    return path;
}

double fdd_log_density(const PathSample& path, double variance_scale) {
    path.validate();
    if (path.times.size() < 2)
        throw std::invalid_argument("fdd_log_density: need at least one increment");
    if (!(variance_scale > 0.0))
        throw std::invalid_argument("fdd_log_density: scale must be > 0");
    KahanSum acc;
    for (std::size_t k = 1; k < path.times.size(); ++k) {
        const double v = variance_scale * (path.times[k] - path.times[k - 1]);
        const double d2 = std::norm(path.values[k] - path.values[k - 1]);
        acc.add(-d2 / v - std::log(kPi * v));
    }
    return acc.value();
}

PathSample shift_path(const PathSample& path, cplx x0) {
    PathSample out = path;
    out.start += x0;
    for (cplx& v : out.values) v += x0;
    return out;
}

MomentEstimate fernique_moment(std::span<const PathSample> paths, double alpha) {
    if (paths.empty()) throw std::invalid_argument("fernique_moment: no paths");
    if (alpha < 0.0) throw std::invalid_argument("fernique_moment: alpha must be >= 0");
    std::vector<cplx> vals(paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i) {
        double sup2 = 0.0;
        for (cplx v : paths[i].values) sup2 = std::max(sup2, std::norm(v));
        vals[i] = std::exp(alpha * sup2);
    }
    return mc_mean(vals);
}

} // namespace cw
