#include "campaigns.hpp"

#include "feynkac.hpp"
#include "fgf.hpp"
#include "io.hpp"
#include "klfield.hpp"
#include "spectral.hpp"
#include "wiener.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

namespace cw {

namespace {

using nlohmann::json;

void require_finite(double v, const char* what) {
    if (!std::isfinite(v))
        throw std::runtime_error(std::string("non-finite value in ") + what);
}

json config_json(const RunConfig& c) {
    return {{"seed", c.seed},       {"samples", c.samples}, {"trunc", c.trunc},
            {"domain", c.domain},   {"s", c.s},             {"T", c.t_final},
            {"grid", c.grid},       {"extent", c.extent},   {"alpha", c.alpha},
            {"k_sigma", c.k_sigma}, {"fk_sign", c.fk_sign}, {"format", c.format}};
}

void validate_common(const RunConfig& c) {
    if (c.samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (c.format != "csv" && c.format != "json")
        throw std::invalid_argument("format must be csv or json");
}

json estimate_json(const MomentEstimate& e) {
    return {{"re", e.value.real()},
            {"im", e.value.imag()},
            {"std_error", e.std_error},
            {"n", e.n_samples}};
}

std::vector<double> uniform_times(double t_final, int steps) {
    if (steps < 1) throw std::invalid_argument("grid must be >= 1");
    if (!(t_final > 0)) throw std::invalid_argument("T must be positive");
    std::vector<double> times(static_cast<std::size_t>(steps) + 1);
    for (int k = 0; k <= steps; ++k) times[k] = t_final * k / steps;
    return times;
}

} // namespace

CampaignOutput run_sample_bm(const RunConfig& config) {
    validate_common(config);
    const auto times = uniform_times(config.t_final, config.grid);

    std::vector<PathSample> paths(config.samples);
    for (int i = 0; i < config.samples; ++i) {
        RandomStream rng(config.seed, "bm", static_cast<std::uint64_t>(i));
        paths[i] = sample_bm(times, rng);
        for (cplx v : paths[i].values) {
            require_finite(v.real(), "sample_bm");
            require_finite(v.imag(), "sample_bm");
        }
    }

    KahanSum end_sq;
    for (const auto& p : paths) end_sq.add(std::norm(p.values.back()));

    CampaignOutput out;
    json summary{{"command", "sample-bm"},
                 {"config", config_json(config)},
                 {"rows", config.samples * (config.grid + 1)},
                 {"mean_endpoint_sq_norm", end_sq.value() / config.samples},
                 {"endpoint_sq_norm_target", config.t_final}};
    out.summary = summary.dump(2) + "\n";

    if (config.format == "csv") {
        out.body = paths_to_csv(paths);
    } else {
        json body{{"command", "sample-bm"}, {"config", config_json(config)}};
        body["times"] = times;
        body["paths"] = json::array();
        for (const auto& p : paths) {
            json rows = json::array();
            for (cplx v : p.values) rows.push_back({v.real(), v.imag()});
            body["paths"].push_back(std::move(rows));
        }
        out.body = body.dump(2) + "\n";
    }
    return out;
}

CampaignOutput run_sample_fgf(const RunConfig& config) {
    validate_common(config);
    if (config.trunc < 1) throw std::invalid_argument("trunc must be >= 1");
    auto basis = SpectralBasis::dirichlet(Domain::parse(config.domain), config.trunc);

    std::vector<FieldSample> fields(config.samples);
    for (int i = 0; i < config.samples; ++i) {
        RandomStream rng(config.seed, "fgf", static_cast<std::uint64_t>(i));
        fields[i] = sample_fgf(config.s, basis, config.trunc, rng);
        for (cplx c : fields[i].coeffs) {
            require_finite(c.real(), "sample_fgf");
            require_finite(c.imag(), "sample_fgf");
        }
    }

    KahanSum sq;
    for (const auto& f : fields) sq.add(f.norm() * f.norm());

    CampaignOutput out;
    json summary{{"command", "sample-fgf"},
                 {"config", config_json(config)},
                 {"rows", config.samples * config.trunc},
                 {"mean_coeff_sq_norm", sq.value() / config.samples}};
    out.summary = summary.dump(2) + "\n";

    if (config.format == "csv") {
        out.body = fields_to_csv(fields);
    } else {
        json body{{"command", "sample-fgf"},
                  {"config", config_json(config)},
                  {"basis", basis->to_json()}};
        body["fields"] = json::array();
        for (const auto& f : fields) {
            json rows = json::array();
            for (cplx c : f.coeffs) rows.push_back({c.real(), c.imag()});
            body["fields"].push_back(std::move(rows));
        }
        out.body = body.dump(2) + "\n";
    }
    return out;
}

CampaignOutput run_fk_compare(const RunConfig& config) {
    validate_common(config);
    const double L = config.extent;
    const int M = config.grid;
    if (M < 8 || M > 32)
        throw std::invalid_argument("fk-compare grid must be in [8, 32] (dense oracle)");
    const double T = config.t_final;

    const auto f = GridFunction2D::make(
        L, M, [](cplx z) { return std::exp(-std::norm(z) / 2.0); });
    const auto g = GridFunction2D::make(L, M, [](cplx z) {
        return std::exp(-std::norm(z - cplx(0.5, -0.3)) / 2.0);
    });
    const auto v = Potential::checked(
        [](cplx z) { return std::exp(-std::norm(z)); }, 1.0, L, M);

    const auto trotter = trotter_apply(f, v, T, 64, config.fk_sign);
    const auto oracle = spectral_expm_oracle(f, v, T, config.fk_sign);

    KahanSum diff2, ref2;
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < M; ++j) {
            const double w = oracle.quad_weight(i, j);
            diff2.add(w * std::norm(trotter.at(i, j) - oracle.at(i, j)));
            ref2.add(w * std::norm(oracle.at(i, j)));
        }
    const double trotter_rel_l2 = std::sqrt(diff2.value() / ref2.value());
    require_finite(trotter_rel_l2, "fk_compare trotter");

    FkParams params;
    params.t_final = T;
    params.paths_per_start = config.samples;
    params.time_steps = 32;
    params.potential_sign = config.fk_sign;
    params.seed = config.seed;
    const auto mc = fk_mc_estimate(f, g, v, params);
    require_finite(mc.value.real(), "fk_compare mc");
    require_finite(mc.value.imag(), "fk_compare mc");

    const cplx spectral_ip = GridFunction2D::inner(oracle, g);
    const cplx trotter_ip = GridFunction2D::inner(trotter, g);
    const double mc_tol = std::max(config.k_sigma * mc.std_error,
                                   0.05 * std::abs(spectral_ip));
    const bool mc_pass = std::abs(mc.value - spectral_ip) <= mc_tol;
    const bool trotter_pass = trotter_rel_l2 <= 0.01;

    json report{
        {"command", "fk-compare"},
        {"config", config_json(config)},
        {"geometry", {{"L", L}, {"M", M}, {"T", T}}},
        {"trotter",
         {{"inner_re", trotter_ip.real()},
          {"inner_im", trotter_ip.imag()},
          {"relative_l2_vs_spectral", trotter_rel_l2},
          {"tolerance", 0.01},
          {"pass", trotter_pass}}},
        {"spectral", {{"inner_re", spectral_ip.real()}, {"inner_im", spectral_ip.imag()}}},
        {"mc",
         {{"estimate", estimate_json(mc)},
          {"abs_error_vs_spectral", std::abs(mc.value - spectral_ip)},
          {"tolerance", mc_tol},
          {"pass", mc_pass}}},
        {"error_bars", {{"k_sigma", config.k_sigma}, {"mc_std_error", mc.std_error}}},
        {"all_pass", mc_pass && trotter_pass}};

    CampaignOutput out;
    out.body = report.dump(2) + "\n";
    out.summary = out.body;
    return out;
}

CampaignOutput run_fernique(const RunConfig& config) {
    validate_common(config);
    const int fine_steps = std::max(2, config.grid - config.grid % 2);
    const auto times = uniform_times(config.t_final, fine_steps);

    std::vector<cplx> e_fine(config.samples), e_coarse(config.samples);
    for (int i = 0; i < config.samples; ++i) {
        RandomStream rng(config.seed, "fernique", static_cast<std::uint64_t>(i));
        const auto path = sample_bm(times, rng);
        double sup_f = 0.0, sup_c = 0.0;
        for (std::size_t k = 0; k < path.values.size(); ++k) {
            const double v = std::norm(path.values[k]);
            sup_f = std::max(sup_f, v);
            if (k % 2 == 0) sup_c = std::max(sup_c, v);
        }
        e_fine[i] = std::exp(config.alpha * sup_f);
        e_coarse[i] = std::exp(config.alpha * sup_c);
    }
    const auto mf = mc_mean(e_fine);
    const auto mc = mc_mean(e_coarse);
    require_finite(mf.value.real(), "fernique");
    const double rel =
        std::abs(mf.value.real() - mc.value.real()) / mc.value.real();
    const bool stable = rel <= 0.02;

    json report{{"command", "fernique"},
                {"config", config_json(config)},
                {"moment", estimate_json(mf)},
                {"grid_stability",
                 {{"coarse_steps", fine_steps / 2},
                  {"fine_steps", fine_steps},
                  {"coarse", estimate_json(mc)},
                  {"relative_change", rel},
                  {"tolerance", 0.02},
                  {"pass", stable}}},
                {"all_pass", stable}};

    CampaignOutput out;
    out.body = report.dump(2) + "\n";
    out.summary = out.body;
    return out;
}

VerifyOutput run_verify_campaign(const RunConfig& config) {
    if (config.quick_scale < 1)
        throw std::invalid_argument("quick scale must be >= 1");
    VerifyConfig vc;
    vc.seed = config.seed;
    vc.k_sigma = config.k_sigma;
    vc.scale = config.quick_scale;
    vc.fk_sign = config.fk_sign;
    const auto report = run_verify(vc);

    VerifyOutput out;
    out.report = report.to_json().dump(2) + "\n";
    out.all_pass = report.all_pass;
    return out;
}

} // namespace cw
