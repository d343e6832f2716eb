#include "verify.hpp"

#include "crv.hpp"
#include "feynkac.hpp"
#include "fgf.hpp"
#include "klfield.hpp"
#include "quad.hpp"
#include "realstruct.hpp"
#include "spectral.hpp"
#include "stats.hpp"
#include "wiener.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cw {

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<cplx> kProbes = {
    {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {2, 0}, {0, -2}, {0.5, -0.5}};

std::vector<std::pair<cplx, cplx>> probe_pairs() {
    std::vector<std::pair<cplx, cplx>> pairs;
    for (std::size_t i = 0; i < kProbes.size(); ++i)
        pairs.emplace_back(kProbes[i], kProbes[(i + 3) % kProbes.size()]);
    return pairs;
}

struct Gate {
    bool pass = true;
    nlohmann::json details = nlohmann::json::object();

    void require(const std::string& key, bool ok, nlohmann::json info) {
        info["pass"] = ok;
        details[key] = std::move(info);
        pass = pass && ok;
    }
};

nlohmann::json estimate_json(const MomentEstimate& e) {
    return {{"re", e.value.real()},
            {"im", e.value.imag()},
            {"std_error", e.std_error},
            {"n", e.n_samples}};
}

// --- criterion 1: E exp(-|xi|^2) = 1/2 (complex), E exp(-X^2) = 1/sqrt 3 ---

CriterionResult criterion_scalar_calculus(const VerifyConfig& cfg) {
    const int n = 1000000 / cfg.scale;
    RandomStream rc(cfg.seed, "c1.complex", 0);
    RandomStream rr(cfg.seed, "c1.real", 0);
    std::vector<cplx> ec(n), er(n);
    for (int i = 0; i < n; ++i) {
        ec[i] = std::exp(-std::norm(rc.standard_complex()));
        const double x = rr.normal();
        er[i] = std::exp(-x * x);
    }
    const auto mc = mc_mean(ec);
    const auto mr = mc_mean(er);
    const double target_c = 0.5;
    const double target_r = 1.0 / std::sqrt(3.0);

    Gate g;
    g.require("complex_exp_moment",
              std::abs(mc.value.real() - target_c) <= cfg.k_sigma * mc.std_error,
              {{"estimate", estimate_json(mc)}, {"target", target_c}});
    g.require("real_exp_moment",
              std::abs(mr.value.real() - target_r) <= cfg.k_sigma * mr.std_error,
              {{"estimate", estimate_json(mr)}, {"target", target_r}});
    return {1, "scalar exponential moments", g.pass, g.details};
}

// --- criterion 2: empirical CF of CN(0,1,0) matches exp(-|w|^2/4) ---

CriterionResult criterion_cf_identity(const VerifyConfig& cfg) {
    const int n = 1000000 / cfg.scale;
    RandomStream rng(cfg.seed, "c2", 0);
    std::vector<cplx> draws(n);
    const auto spec = GaussianSpec::standard_complex();
    for (int i = 0; i < n; ++i) draws[i] = sample_gaussian(spec, rng);

    Gate g;
    for (std::size_t p = 0; p < kProbes.size(); ++p) {
        const cplx w = kProbes[p];
        const auto emp = empirical_cf(draws, w);
        const cplx ana = cf_analytic(spec, w);
        g.require("probe_" + std::to_string(p),
                  std::abs(emp.value - ana) <= cfg.k_sigma * emp.std_error,
                  {{"w_re", w.real()},
                   {"w_im", w.imag()},
                   {"empirical", estimate_json(emp)},
                   {"analytic_re", ana.real()},
                   {"analytic_im", ana.imag()}});
    }
    return {2, "characteristic function identity", g.pass, g.details};
}

// --- criterion 3: proper <=> sqrt2 parts i.i.d. ---

CriterionResult criterion_decompose(const VerifyConfig& cfg) {
    const int n = 100000 / cfg.scale;
    RandomStream rng(cfg.seed, "c3", 0);
    const auto spec = GaussianSpec::standard_complex();
    std::vector<cplx> x(n), y(n);
    for (int i = 0; i < n; ++i) {
        const cplx z = sample_gaussian(spec, rng);
        x[i] = std::numbers::sqrt2 * z.real();
        y[i] = std::numbers::sqrt2 * z.imag();
    }
    const auto pairs = probe_pairs();
    const auto gap = cf_factorization_gap(x, y, pairs);
    const auto mx = estimate_moments(x);
    const auto my = estimate_moments(y);

    Gate g;
    g.require("factorization_gap", gap.gap <= cfg.k_sigma * gap.mc_error,
              {{"gap", gap.gap}, {"mc_error", gap.mc_error}});
    g.require("var_x",
              std::abs(mx.variance.value.real() - 1.0) <=
                  cfg.k_sigma * mx.variance.std_error,
              {{"estimate", estimate_json(mx.variance)}, {"target", 1.0}});
    g.require("var_y",
              std::abs(my.variance.value.real() - 1.0) <=
                  cfg.k_sigma * my.variance.std_error,
              {{"estimate", estimate_json(my.variance)}, {"target", 1.0}});
    return {3, "proper decomposition independence", g.pass, g.details};
}

// --- criterion 4: KL trace identity, alpha_n = 1/n^2, 100 modes ---

CriterionResult criterion_trace_identity(const VerifyConfig& cfg) {
    const int n_samples = 100000 / cfg.scale;
    const int modes = 100;
    auto basis = SpectralBasis::dirichlet(Domain::interval(1.0), modes);
    std::vector<double> alphas(modes);
    for (int i = 0; i < modes; ++i) alphas[i] = 1.0 / ((i + 1.0) * (i + 1.0));
    SpectralOperator op(basis, alphas);

    std::vector<FieldSample> samples(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        RandomStream rng(cfg.seed, "c4", static_cast<std::uint64_t>(i));
        samples[i] = kl_sample(op, modes, ScalarField::Complex, rng);
    }
    const auto check = trace_identity_check(op, samples);

    Gate g;
    g.require("trace_vs_empirical", check.gap_sigma <= cfg.k_sigma,
              {{"trace", check.trace},
               {"empirical", estimate_json(check.empirical_sq_norm)},
               {"gap_sigma", check.gap_sigma}});
    return {4, "KL trace identity", g.pass, g.details};
}

// --- criterion 5: coupled truncation tail, alpha_n = 2^-n ---

CriterionResult criterion_truncation_tail(const VerifyConfig& cfg) {
    const int n_samples = 100000 / cfg.scale;
    const int modes = 20;
    auto basis = SpectralBasis::dirichlet(Domain::interval(1.0), modes);
    std::vector<double> alphas(modes);
    for (int i = 0; i < modes; ++i) alphas[i] = std::pow(2.0, -(i + 1.0));
    SpectralOperator op(basis, alphas);

    std::vector<cplx> diff_sq(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        RandomStream rng(cfg.seed, "c5", static_cast<std::uint64_t>(i));
        const auto s10 = kl_sample(op, 10, ScalarField::Complex, rng);
        RandomStream rng2(cfg.seed, "c5", static_cast<std::uint64_t>(i));
        const auto s5 = kl_sample(op, 5, ScalarField::Complex, rng2);
        KahanSum acc;
        for (int k = 0; k < 5; ++k)
            if (s10.coeffs[k] != s5.coeffs[k])
                throw std::logic_error("coupling invariant violated");
        for (int k = 5; k < 10; ++k) acc.add(std::norm(s10.coeffs[k]));
        diff_sq[i] = acc.value();
    }
    const auto emp = mc_mean(diff_sq);
    const double tail = truncation_tail(op, 5, 10);

    Gate g;
    g.require("tail_formula",
              std::abs(emp.value.real() - tail) <= cfg.k_sigma * emp.std_error,
              {{"empirical", estimate_json(emp)}, {"analytic", tail}});
    return {5, "KL truncation tail", g.pass, g.details};
}

// --- criterion 6: nu(H) = 0 diagnostic slope ---

CriterionResult criterion_null_set(const VerifyConfig& cfg) {
    std::vector<int> ms;
    for (int m = 100; m <= 1000; m += 100) ms.push_back(m);
    const int n_samples = std::max(200, 2000 / cfg.scale);
    const auto diag = null_set_diagnostic(ScalarField::Complex, ms, n_samples,
                                          RandomStream::derive_base(cfg.seed, "c6", 0));

    Gate g;
    g.require("slope", std::abs(diag.slope - 1.0) <= 0.05,
              {{"slope", diag.slope}, {"tolerance", 0.05}});
    g.require("exp_moment",
              std::abs(diag.exp_moment.value.real() - 0.5) <=
                  cfg.k_sigma * diag.exp_moment.std_error,
              {{"estimate", estimate_json(diag.exp_moment)}, {"target", 0.5}});
    return {6, "Cameron-Martin null-set diagnostic", g.pass, g.details};
}

// --- criterion 7: Fernique rotation + moment stability ---

CriterionResult criterion_fernique(const VerifyConfig& cfg) {
    const int n = 100000 / cfg.scale;
    RandomStream rng(cfg.seed, "c7.rot", 0);
    const auto spec = GaussianSpec::standard_complex();
    std::vector<cplx> x(n), xp(n), y(n), yp(n);
    for (int i = 0; i < n; ++i) {
        x[i] = sample_gaussian(spec, rng);
        xp[i] = sample_gaussian(spec, rng);
        y[i] = (x[i] + xp[i]) / std::numbers::sqrt2;
        yp[i] = (x[i] - xp[i]) / std::numbers::sqrt2;
    }

    Gate g;
    const auto pairs = probe_pairs();
    std::vector<cplx> ph_x(n), ph_y(n);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto& [w1, w2] = pairs[p];
        for (int i = 0; i < n; ++i) {
            double a = std::real(w1 * std::conj(x[i])) + std::real(w2 * std::conj(xp[i]));
            ph_x[i] = cplx(std::cos(a), std::sin(a));
            a = std::real(w1 * std::conj(y[i])) + std::real(w2 * std::conj(yp[i]));
            ph_y[i] = cplx(std::cos(a), std::sin(a));
        }
        const auto cf_x = mc_mean(ph_x);
        const auto cf_y = mc_mean(ph_y);
        g.require("rotation_probe_" + std::to_string(p),
                  std::abs(cf_x.value - cf_y.value) <=
                      cfg.k_sigma * (cf_x.std_error + cf_y.std_error),
                  {{"cf_original", estimate_json(cf_x)},
                   {"cf_rotated", estimate_json(cf_y)}});
    }

    // Grid-refinement stability on coupled grids: the 256-point sup reads
    // every other node of the same 512-point paths.
    const int n_paths = std::max(2000, 20000 / cfg.scale);
    const double alpha = 0.1;
    std::vector<double> fine(513), coarse_mask;
    for (int i = 0; i <= 512; ++i) fine[i] = i / 512.0;
    std::vector<cplx> e_fine(n_paths), e_coarse(n_paths);
    for (int i = 0; i < n_paths; ++i) {
        RandomStream prng(cfg.seed, "c7.fernique", static_cast<std::uint64_t>(i));
        const auto path = sample_bm(fine, prng);
        double sup_f = 0.0, sup_c = 0.0;
        for (std::size_t k = 0; k < path.values.size(); ++k) {
            const double v = std::norm(path.values[k]);
            sup_f = std::max(sup_f, v);
            if (k % 2 == 0) sup_c = std::max(sup_c, v);
        }
        e_fine[i] = std::exp(alpha * sup_f);
        e_coarse[i] = std::exp(alpha * sup_c);
    }
    const auto mf = mc_mean(e_fine);
    const auto mco = mc_mean(e_coarse);
    const double rel =
        std::abs(mf.value.real() - mco.value.real()) / mco.value.real();
    g.require("fernique_grid_stability", rel <= 0.02,
              {{"coarse", estimate_json(mco)},
               {"fine", estimate_json(mf)},
               {"relative_change", rel},
               {"tolerance", 0.02}});
    return {7, "Fernique rotation and moment stability", g.pass, g.details};
}

// --- criterion 8: complex BM covariance structure, both samplers ---

CriterionResult criterion_brownian(const VerifyConfig& cfg) {
    const int n = 100000 / cfg.scale;
    const std::vector<double> marks = {0.0, 0.25, 0.5, 1.0};

    auto collect = [&](const char* tag, bool kl) {
        std::vector<std::vector<cplx>> at(marks.size(), std::vector<cplx>(n));
        for (int i = 0; i < n; ++i) {
            RandomStream rng(cfg.seed, tag, static_cast<std::uint64_t>(i));
            const PathSample path =
                kl ? kl_bm_sample(200, marks, rng) : sample_bm(marks, rng);
            for (std::size_t k = 0; k < marks.size(); ++k) at[k][i] = path.values[k];
        }
        return at;
    };

    Gate g;
    for (const bool kl : {false, true}) {
        const auto at = collect(kl ? "c8.kl" : "c8.inc", kl);
        const std::string prefix = kl ? "kl_" : "inc_";
        for (std::size_t a = 1; a < marks.size(); ++a)
            for (std::size_t b = a; b < marks.size(); ++b) {
                const auto cc = cross_cov(at[a], at[b]);
                const double target = std::min(marks[a], marks[b]);
                const double tol =
                    std::max(cfg.k_sigma * cc.cov.std_error, 0.01 * target);
                const std::string key = prefix + std::to_string(a) + std::to_string(b);
                g.require(key + "_cov", std::abs(cc.cov.value - target) <= tol,
                          {{"estimate", estimate_json(cc.cov)},
                           {"target", target},
                           {"tolerance", tol}});
                g.require(key + "_pcov",
                          std::abs(cc.pcov.value) <= cfg.k_sigma * cc.pcov.std_error,
                          {{"estimate", estimate_json(cc.pcov)}});
            }
        // independent increments: (W_.5 - W_.25) vs (W_1 - W_.5)
        std::vector<cplx> inc1(n), inc2(n);
        for (int i = 0; i < n; ++i) {
            inc1[i] = at[2][i] - at[1][i];
            inc2[i] = at[3][i] - at[2][i];
        }
        const auto pairs = probe_pairs();
        const auto gap = cf_factorization_gap(inc1, inc2, pairs);
        g.require(prefix + "increment_independence",
                  gap.gap <= cfg.k_sigma * gap.mc_error,
                  {{"gap", gap.gap}, {"mc_error", gap.mc_error}});
    }
    return {8, "complex Brownian covariance", g.pass, g.details};
}

// --- criterion 9: Chapman-Kolmogorov / density normalization ---

CriterionResult criterion_chapman_kolmogorov(const VerifyConfig&) {
    const SimpsonRule rule(-6.0, 6.0, 200);

    // one-step density integrates to 1
    KahanSum mass;
    for (std::size_t a = 0; a < rule.nodes.size(); ++a)
        for (std::size_t b = 0; b < rule.nodes.size(); ++b) {
            PathSample p{{0.0, 1.0}, {0.0, cplx(rule.nodes[a], rule.nodes[b])}, 0.0};
            mass.add(rule.weights[a] * rule.weights[b] * std::exp(fdd_log_density(p)));
        }

    // two half-steps with the midpoint integrated out vs one full step
    const double tau = 0.5;
    const cplx ze(0.4, 0.2);
    KahanSum conv;
    for (std::size_t a = 0; a < rule.nodes.size(); ++a)
        for (std::size_t b = 0; b < rule.nodes.size(); ++b) {
            const cplx zm(rule.nodes[a], rule.nodes[b]);
            PathSample two{{0.0, tau, 2.0 * tau}, {0.0, zm, ze}, 0.0};
            conv.add(rule.weights[a] * rule.weights[b] *
                     std::exp(fdd_log_density(two)));
        }
    PathSample one{{0.0, 2.0 * tau}, {0.0, ze}, 0.0};
    const double direct = std::exp(fdd_log_density(one));

    Gate g;
    g.require("normalization", std::abs(mass.value() - 1.0) <= 1e-6,
              {{"integral", mass.value()}, {"tolerance", 1e-6}});
    g.require("chapman_kolmogorov", std::abs(conv.value() - direct) <= 1e-6,
              {{"convolved", conv.value()}, {"direct", direct}, {"tolerance", 1e-6}});
    return {9, "Chapman-Kolmogorov consistency", g.pass, g.details};
}

// --- criterion 10: Feynman-Kac three-way agreement ---

CriterionResult criterion_feynman_kac(const VerifyConfig& cfg) {
    const double L = 6.0, T = 0.5;
    const int M = 32;
    const auto f = GridFunction2D::make(
        L, M, [](cplx z) { return std::exp(-std::norm(z) / 2.0); });
    const auto g2 = GridFunction2D::make(L, M, [](cplx z) {
        return std::exp(-std::norm(z - cplx(0.5, -0.3)) / 2.0);
    });
    const auto v = Potential::checked(
        [](cplx z) { return std::exp(-std::norm(z)); }, 1.0, L, M);

    const auto trotter = trotter_apply(f, v, T, 64, cfg.fk_sign);
    const auto oracle = spectral_expm_oracle(f, v, T, cfg.fk_sign);

    KahanSum diff2, ref2;
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < M; ++j) {
            const double w = oracle.quad_weight(i, j);
            diff2.add(w * std::norm(trotter.at(i, j) - oracle.at(i, j)));
            ref2.add(w * std::norm(oracle.at(i, j)));
        }
    const double rel_l2 = std::sqrt(diff2.value() / ref2.value());

    FkParams params;
    params.t_final = T;
    params.paths_per_start = std::max(20, 200 / cfg.scale);
    params.time_steps = 32;
    params.potential_sign = cfg.fk_sign;
    params.seed = cfg.seed;
    const auto mc = fk_mc_estimate(f, g2, v, params);
    const cplx spectral_ip = GridFunction2D::inner(oracle, g2);
    const double tol_mc =
        std::max(cfg.k_sigma * mc.std_error, 0.05 * std::abs(spectral_ip));

    Gate g;
    g.require("trotter_vs_spectral", rel_l2 <= 0.01,
              {{"relative_l2", rel_l2}, {"tolerance", 0.01}});
    g.require("mc_vs_spectral", std::abs(mc.value - spectral_ip) <= tol_mc,
              {{"mc", estimate_json(mc)},
               {"spectral_re", spectral_ip.real()},
               {"spectral_im", spectral_ip.imag()},
               {"tolerance", tol_mc}});
    return {10, "Feynman-Kac agreement", g.pass, g.details};
}

// --- criterion 11: Weyl ratios ---

CriterionResult criterion_weyl(const VerifyConfig&) {
    auto interval = SpectralBasis::dirichlet(Domain::interval(1.0), 200);
    const double kappa1 = 1.0 / (kPi * kPi);
    double worst = 0.0;
    for (int n = 1; n <= interval->size(); ++n)
        worst = std::max(worst,
                         std::abs(interval->weyl_ratio(n) - kappa1) / kappa1);

    auto square = SpectralBasis::dirichlet(Domain::rectangle(1.0, 1.0), 5000);
    const double kappa2 = 1.0 / (16.0 * kPi * kPi);
    const double ratio2 = square->weyl_ratio(5000);
    const double rel2 = std::abs(ratio2 - kappa2) / kappa2;

    Gate g;
    g.require("interval_constant", worst <= 1e-14,
              {{"max_relative_deviation", worst}, {"target", kappa1}});
    g.require("square_limit", rel2 <= 0.10,
              {{"ratio", ratio2}, {"target", kappa2}, {"relative_error", rel2}});
    return {11, "Weyl ratio", g.pass, g.details};
}

// --- criterion 12: fractional Gaussian field law ---

CriterionResult criterion_fgf(const VerifyConfig& cfg) {
    const int modes = 400;
    const double s = 0.5;
    const int n = 100000 / cfg.scale;
    Gate g;

    auto run_case = [&](const char* label, const TestFunctionRep& phi,
                        const SpectralOperator& op, const char* tag,
                        double var_rel_floor) {
        const cplx ls = ls_inner(phi, phi, s);
        std::vector<cplx> pairings(n);
        for (int i = 0; i < n; ++i) {
            RandomStream rng(cfg.seed, tag, static_cast<std::uint64_t>(i));
            const auto field = kl_sample(op, modes, ScalarField::Complex, rng);
            pairings[i] = pair(field, phi);
        }
        const auto m = estimate_moments(pairings);
        const double var_tol = std::max(cfg.k_sigma * m.variance.std_error,
                                        var_rel_floor * ls.real());
        g.require(std::string(label) + "_variance",
                  std::abs(m.variance.value.real() - ls.real()) <= var_tol,
                  {{"estimate", estimate_json(m.variance)},
                   {"ls_inner", ls.real()},
                   {"tolerance", var_tol}});
        g.require(std::string(label) + "_pseudo_variance",
                  std::abs(m.pseudo_variance.value) <=
                      cfg.k_sigma * m.pseudo_variance.std_error,
                  {{"estimate", estimate_json(m.pseudo_variance)}});
        const auto cf = empirical_cf(pairings, 1.0);
        const double cf_target = std::exp(-0.25 * ls.real());
        g.require(std::string(label) + "_aws_cf",
                  std::abs(cf.value - cf_target) <= cfg.k_sigma * cf.std_error,
                  {{"empirical", estimate_json(cf)}, {"target", cf_target}});
    };

    auto interval = SpectralBasis::dirichlet(Domain::interval(1.0), modes);
    const auto phi1 = TestFunctionRep::project_1d(
        interval, [](double x) { return cplx(x * x * (1 - x) * (1 - x)); });
    run_case("interval", phi1,
             SpectralOperator::from_eigenvalue_power(interval, 2.0 * s), "c12.int",
             0.01);

    auto square = SpectralBasis::dirichlet(Domain::rectangle(1.0, 1.0), modes);
    const auto phi2 = TestFunctionRep::project_2d(
        square,
        [](double x, double y) {
            return cplx(x * x * (1 - x) * (1 - x) * y * y * (1 - y) * (1 - y));
        },
        1024);
    run_case("square", phi2,
             SpectralOperator::from_eigenvalue_power(square, 2.0 * s), "c12.rect",
             0.02);

    return {12, "fractional Gaussian field law", g.pass, g.details};
}

// --- criterion 13: regularity threshold flip ---

CriterionResult criterion_regularity(const VerifyConfig&) {
    Gate g;
    auto run_case = [&](const char* label, Domain dom, double s) {
        const double d = dom.dim();
        auto basis = SpectralBasis::dirichlet(dom, 16384);
        const std::vector<double> ts = {s + d / 4.0 - 0.05, s + d / 4.0 + 0.05};
        const auto prof = regularity_profile(s, *basis, ts);
        g.require(std::string(label) + "_flip",
                  prof[0].divergent && !prof[1].divergent,
                  {{"below_threshold_block_ratio", prof[0].block_ratio},
                   {"above_threshold_block_ratio", prof[1].block_ratio}});
    };
    run_case("interval", Domain::interval(1.0), 0.0);
    run_case("square", Domain::rectangle(1.0, 1.0), 0.5);
    return {13, "regularity threshold", g.pass, g.details};
}

// --- criterion 14: determinism of the verify report ---

CriterionResult criterion_determinism(const VerifyConfig& cfg) {
    VerifyConfig quick = cfg;
    quick.scale = std::max(cfg.scale, 50);
    quick.include_determinism = false;
    const std::string a = run_verify(quick).to_json().dump(2);
    const std::string b = run_verify(quick).to_json().dump(2);

    Gate g;
    g.require("byte_identical_reports", a == b,
              {{"bytes", a.size()}, {"quick_scale", quick.scale}});
    return {14, "report determinism", g.pass, g.details};
}

} // namespace

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json out;
    out["seed"] = config.seed;
    out["k_sigma"] = config.k_sigma;
    out["scale"] = config.scale;
    out["fk_sign"] = config.fk_sign;
    out["all_pass"] = all_pass;
    out["criteria"] = nlohmann::json::array();
    for (const auto& c : criteria)
        out["criteria"].push_back(
            {{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"details", c.details}});
    return out;
}

VerifyReport run_verify(const VerifyConfig& config) {
    VerifyReport report;
    report.config = config;
    report.criteria.push_back(criterion_scalar_calculus(config));
    report.criteria.push_back(criterion_cf_identity(config));
    report.criteria.push_back(criterion_decompose(config));
    report.criteria.push_back(criterion_trace_identity(config));
    report.criteria.push_back(criterion_truncation_tail(config));
    report.criteria.push_back(criterion_null_set(config));
    report.criteria.push_back(criterion_fernique(config));
    report.criteria.push_back(criterion_brownian(config));
    report.criteria.push_back(criterion_chapman_kolmogorov(config));
    report.criteria.push_back(criterion_feynman_kac(config));
    report.criteria.push_back(criterion_weyl(config));
    report.criteria.push_back(criterion_fgf(config));
    report.criteria.push_back(criterion_regularity(config));
    if (config.include_determinism)
        report.criteria.push_back(criterion_determinism(config));

    report.all_pass = true;
    for (const auto& c : report.criteria) report.all_pass = report.all_pass && c.pass;
    return report;
}

} // namespace cw
