#include "feynkac.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cw {

namespace {

constexpr double kPi = std::numbers::pi;

struct GaussHermite {
    std::vector<double> nodes;
    std::vector<double> weights;  // for int exp(-x^2) g(x) dx
};

// Golub-Welsch on the Hermite Jacobi matrix.
const GaussHermite& gauss_hermite_10() {
    static const GaussHermite rule = [] {
        constexpr int q = 10;
        Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(q, q);
        for (int k = 1; k < q; ++k) {
            const double off = std::sqrt(k / 2.0);
            jac(k - 1, k) = off;
            jac(k, k - 1) = off;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
        GaussHermite out;
        out.nodes.resize(q);
        out.weights.resize(q);
        for (int k = 0; k < q; ++k) {
            out.nodes[k] = es.eigenvalues()(k);
            const double v0 = es.eigenvectors()(0, k);
            out.weights[k] = std::sqrt(kPi) * v0 * v0;
        }
        return out;
    }();
    return rule;
}

} // namespace

GridFunction2D GridFunction2D::make(double half_extent, int points_per_axis,
                                    const std::function<cplx(cplx)>& fn) {
    GridFunction2D g;
    g.half_extent = half_extent;
    g.points_per_axis = points_per_axis;
    g.validate();
    g.values.resize(static_cast<std::size_t>(points_per_axis) * points_per_axis);
    for (int i = 0; i < points_per_axis; ++i)
        for (int j = 0; j < points_per_axis; ++j)
            g.at(i, j) = fn(cplx(g.coord(i), g.coord(j)));
    return g;
}

void GridFunction2D::validate() const {
    if (points_per_axis < 8)
        throw std::invalid_argument("GridFunction2D: need at least 8 points per axis");
    if (!(half_extent > 0.0))
        throw std::invalid_argument("GridFunction2D: half extent must be > 0");
}

double GridFunction2D::coord(int i) const {
    return -half_extent + spacing() * i;
}

double GridFunction2D::quad_weight(int i, int j) const {
    const double h = spacing();
    const double wi = (i == 0 || i == points_per_axis - 1) ? h / 2.0 : h;
    const double wj = (j == 0 || j == points_per_axis - 1) ? h / 2.0 : h;
    return wi * wj;
}

cplx GridFunction2D::interp(double x, double y) const {
    const int m = points_per_axis;
    const double h = spacing();
    const double gx = (x + half_extent) / h;
    const double gy = (y + half_extent) / h;
    if (gx < -3.0 || gx > m + 2.0 || gy < -3.0 || gy > m + 2.0) return 0.0;

    const int i0 = static_cast<int>(std::floor(gx));
    const int j0 = static_cast<int>(std::floor(gy));
    const double tx = gx - i0;
    const double ty = gy - j0;

    // Degree-5 Lagrange weights on nodes at offsets -2..3.
    auto weights = [](double t, double* w) {
        static const int offs[6] = {-2, -1, 0, 1, 2, 3};
        for (int k = 0; k < 6; ++k) {
            double num = 1.0;
            for (int l = 0; l < 6; ++l)
                if (l != k) num *= (t - offs[l]) / double(offs[k] - offs[l]);
            w[k] = num;
        }
    };
    double wx[6], wy[6];
    weights(tx, wx);
    weights(ty, wy);

    cplx acc = 0.0;
    for (int a = -2; a <= 3; ++a) {
        const int ia = i0 + a;
        if (ia < 0 || ia >= m) continue;
        const double wa = wx[a + 2];
        cplx row = 0.0;
        for (int b = -2; b <= 3; ++b) {
            const int jb = j0 + b;
            if (jb < 0 || jb >= m) continue;
            row += wy[b + 2] * at(ia, jb);
        }
        acc += wa * row;
    }
    return acc;
}

cplx GridFunction2D::inner(const GridFunction2D& f, const GridFunction2D& g) {
    if (f.points_per_axis != g.points_per_axis || f.half_extent != g.half_extent)
        throw std::invalid_argument("GridFunction2D::inner: geometry mismatch");
    KahanSumC acc;
    for (int i = 0; i < f.points_per_axis; ++i)
        for (int j = 0; j < f.points_per_axis; ++j)
            acc.add(f.quad_weight(i, j) * f.at(i, j) * std::conj(g.at(i, j)));
    return acc.value();
}

double GridFunction2D::l2_norm() const {
    KahanSum acc;
    for (int i = 0; i < points_per_axis; ++i)
        for (int j = 0; j < points_per_axis; ++j)
            acc.add(quad_weight(i, j) * std::norm(at(i, j)));
    return std::sqrt(acc.value());
}

Potential Potential::checked(std::function<cplx(cplx)> fn, double bound,
                             double half_extent, int points_per_axis) {
    GridFunction2D probe;
    probe.half_extent = half_extent;
    probe.points_per_axis = points_per_axis;
    for (int i = 0; i < points_per_axis; ++i)
        for (int j = 0; j < points_per_axis; ++j) {
            const cplx z(probe.coord(i), probe.coord(j));
            if (std::abs(fn(z)) > bound * (1.0 + 1e-12))
                throw std::invalid_argument("Potential: |V| exceeds declared bound on grid");
        }
    return {std::move(fn), bound};
}

GridFunction2D heat_step(const GridFunction2D& f, double tau) {
    f.validate();
    if (!(tau > 0.0)) throw std::invalid_argument("heat_step: tau must be > 0");
    const auto& gh = gauss_hermite_10();
    const double s = std::sqrt(tau);
    const int m = f.points_per_axis;

    GridFunction2D out = f;
    for (int i = 0; i < m; ++i) {
        const double x = f.coord(i);
        for (int j = 0; j < m; ++j) {
            const double y = f.coord(j);
            cplx acc = 0.0;
            for (std::size_t a = 0; a < gh.nodes.size(); ++a) {
                cplx row = 0.0;
                for (std::size_t b = 0; b < gh.nodes.size(); ++b)
                    row += gh.weights[b] * f.interp(x + s * gh.nodes[a], y + s * gh.nodes[b]);
                acc += gh.weights[a] * row;
            }
            out.at(i, j) = acc / kPi;
        }
    }
    return out;
}

GridFunction2D trotter_apply(const GridFunction2D& f, const Potential& v, double t_final,
                             int n_steps, double potential_sign) {
    if (n_steps < 1) throw std::invalid_argument("trotter_apply: need n >= 1");
    const double tau = t_final / n_steps;
    const int m = f.points_per_axis;

    // Pointwise factor exp(sign * tau * V), precomputed once.
    std::vector<cplx> factor(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            factor[static_cast<std::size_t>(i) * m + j] =
                std::exp(potential_sign * tau * v.evaluator(cplx(f.coord(i), f.coord(j))));

    GridFunction2D out = f;
    for (int step = 0; step < n_steps; ++step) {
        for (std::size_t idx = 0; idx < out.values.size(); ++idx)
            out.values[idx] *= factor[idx];
        out = heat_step(out, tau);
    }
    return out;
}

GridFunction2D spectral_expm_oracle(const GridFunction2D& f, const Potential& v,
                                    double t_final, double potential_sign) {
    const int m = f.points_per_axis;
    if (m > 32)
        throw std::invalid_argument("spectral_expm_oracle: dense solve limited to M <= 32");
    if (t_final == 0.0) return f;
    const int n = m * m;
    const double h = f.spacing();

    // 4th-order 9-point-cross Laplacian with Dirichlet truncation,
    // scaled by 1/4 to generate the E|W_t|^2 = t transition semigroup.
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
    auto idx = [m](int i, int j) { return i * m + j; };
    const double c0 = -30.0 / (12.0 * h * h);
    const double c1 = 16.0 / (12.0 * h * h);
    const double c2 = -1.0 / (12.0 * h * h);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const int row = idx(i, j);
            lap(row, row) += 2.0 * c0;
            for (int d = 0; d < 2; ++d) {
                const int di = d == 0 ? 1 : 0;
                const int dj = d == 0 ? 0 : 1;
                for (int off = 1; off <= 2; ++off) {
                    const double c = off == 1 ? c1 : c2;
                    if (i + off * di < m && j + off * dj < m)
                        lap(row, idx(i + off * di, j + off * dj)) += c;
                    if (i - off * di >= 0 && j - off * dj >= 0)
                        lap(row, idx(i - off * di, j - off * dj)) += c;
                }
            }
        }

    // Sample V on the grid; a real potential keeps the problem symmetric
    // and lets us exponentiate through a real eigendecomposition.
    Eigen::VectorXcd vdiag(n);
    bool v_real = true;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const cplx val = v.evaluator(cplx(f.coord(i), f.coord(j)));
            vdiag(idx(i, j)) = val;
            if (val.imag() != 0.0) v_real = false;
        }

    Eigen::VectorXcd fv(n);
    for (int i = 0; i < n; ++i) fv(i) = f.values[i];

    Eigen::VectorXcd result(n);
    if (v_real) {
        Eigen::MatrixXd ham = -0.25 * lap;
        for (int i = 0; i < n; ++i) ham(i, i) -= potential_sign * vdiag(i).real();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ham);
        const Eigen::VectorXd expvals =
            (-t_final * es.eigenvalues().array()).exp().matrix();
        const Eigen::MatrixXd& q = es.eigenvectors();
        result = q * (expvals.asDiagonal() * (q.transpose() * fv));
    } else {
        Eigen::MatrixXcd ham = (-0.25 * lap).cast<cplx>();
        for (int i = 0; i < n; ++i) ham(i, i) -= potential_sign * vdiag(i);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(ham);
        const Eigen::MatrixXcd& q = es.eigenvectors();
        const Eigen::VectorXcd expvals =
            (-t_final * es.eigenvalues().array()).exp().matrix();
        result = q * (expvals.asDiagonal() * q.colPivHouseholderQr().solve(fv));
    }

    GridFunction2D out = f;
    for (int i = 0; i < n; ++i) out.values[i] = result(i);
    return out;
}

MomentEstimate fk_mc_estimate(const GridFunction2D& f, const GridFunction2D& g,
                              const Potential& v, const FkParams& params) {
    if (f.points_per_axis != g.points_per_axis || f.half_extent != g.half_extent)
        throw std::invalid_argument("fk_mc_estimate: geometry mismatch");
    if (params.paths_per_start < 2 || params.time_steps < 1)
        throw std::invalid_argument("fk_mc_estimate: bad path configuration");

    const int m = f.points_per_axis;
    const double dt = params.t_final / params.time_steps;
    const double sdt = std::sqrt(dt);

    KahanSumC total;
    KahanSum var_acc;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const cplx z0(f.coord(i), f.coord(j));
            const cplx gw = f.quad_weight(i, j) * std::conj(g.at(i, j));
            if (gw == cplx(0.0)) continue;

            KahanSumC mean_acc;
            KahanSum sq_acc;
            const std::uint64_t start_index =
                static_cast<std::uint64_t>(i) * m + static_cast<std::uint64_t>(j);
            for (int p = 0; p < params.paths_per_start; ++p) {
                RandomStream rng(params.seed, "fkmc",
                                 start_index * params.paths_per_start + p);
                cplx z = z0;
                KahanSumC vint;
                for (int step = 0; step < params.time_steps; ++step) {
                    vint.add(v.evaluator(z) * dt);  // left-endpoint rule
                    z += sdt * rng.standard_complex();
                }
                const cplx weight =
                    std::exp(params.potential_sign * vint.value()) *
                    f.interp(z.real(), z.imag());
                mean_acc.add(weight);
                sq_acc.add(std::norm(weight));
            }
            const double np = params.paths_per_start;
            const cplx mean = mean_acc.value() / np;
            const double var =
                std::max(0.0, (sq_acc.value() / np - std::norm(mean))) / (np - 1);
            total.add(gw * mean);
            var_acc.add(std::norm(gw) * var);
        }

    MomentEstimate out;
    out.value = total.value();
    out.std_error = std::sqrt(var_acc.value());
    out.n_samples = static_cast<std::size_t>(m) * m * params.paths_per_start;
    return out;
}

} // namespace cw
