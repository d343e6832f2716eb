// Command-line driver; talks to the library exclusively through the C API.

#include <cwiener.h>

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

namespace {

struct Options {
    std::uint64_t seed = 42;
    int samples = 10;
    int trunc = 100;
    std::string domain = "interval:1";
    double s = 0.5;
    double t_final = 1.0;
    int grid = 256;
    double extent = 6.0;
    double alpha = 0.1;
    double k_sigma = 4.0;
    double fk_sign = -1.0;
    std::string out_path;
    std::string format = "csv";
    int quick_scale = 1;
};

void add_common_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--seed", opt.seed, "Master seed (CWIENER_SEED overrides)");
    cmd->add_option("--out", opt.out_path, "Output file (stdout if omitted)");
}

cw_run_config to_config(const Options& opt) {
    cw_run_config cfg;
    cw_run_config_default(&cfg);
    cfg.seed = opt.seed;
    cfg.samples = opt.samples;
    cfg.trunc = opt.trunc;
    cfg.domain = opt.domain.c_str();
    cfg.s = opt.s;
    cfg.t_final = opt.t_final;
    cfg.grid = opt.grid;
    cfg.extent = opt.extent;
    cfg.alpha = opt.alpha;
    cfg.k_sigma = opt.k_sigma;
    cfg.fk_sign = opt.fk_sign;
    cfg.format = opt.format.c_str();
    cfg.quick_scale = opt.quick_scale;
    return cfg;
}

using CwString = std::unique_ptr<char, decltype(&cw_string_free)>;

CwString wrap(char* s) { return CwString(s, &cw_string_free); }

int fail(cw_status status) {
    std::fprintf(stderr, "error: %s", cw_status_message(status));
    const char* detail = cw_last_error();
    if (detail && *detail) std::fprintf(stderr, ": %s", detail);
    std::fprintf(stderr, "\n");
    return 1;
}

int emit(const Options& opt, const char* text) {
    if (opt.out_path.empty()) {
        std::fputs(text, stdout);
        return 0;
    }
    const cw_status st = cw_write_file_atomic(opt.out_path.c_str(), text);
    return st == CW_OK ? 0 : fail(st);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Complex Wiener-space sampling toolkit"};
    app.require_subcommand(1);

    Options opt;

    auto* bm = app.add_subcommand("sample-bm", "Sample complex Brownian paths");
    add_common_flags(bm, opt);
    bm->add_option("--samples", opt.samples, "Number of paths");
    bm->add_option("--T", opt.t_final, "Time horizon");
    bm->add_option("--grid", opt.grid, "Time steps (grid has grid+1 points)");
    bm->add_option("--format", opt.format, "csv or json");

    auto* fgf = app.add_subcommand("sample-fgf", "Sample fractional Gaussian fields");
    add_common_flags(fgf, opt);
    fgf->add_option("--samples", opt.samples, "Number of fields");
    fgf->add_option("--trunc", opt.trunc, "Truncation (number of modes)");
    fgf->add_option("--domain", opt.domain, "interval:L or rect:Lx,Ly");
    fgf->add_option("--s", opt.s, "Fractional order");
    fgf->add_option("--format", opt.format, "csv or json");

    auto* fk = app.add_subcommand("fk-compare",
                                  "Trotter / spectral / path-MC comparison");
    add_common_flags(fk, opt);
    fk->add_option("--samples", opt.samples, "Paths per grid start")
        ->default_val(200);
    fk->add_option("--T", opt.t_final, "Final time")->default_val(0.5);
    fk->add_option("--grid", opt.grid, "Grid points per axis (<= 32)")
        ->default_val(32);
    fk->add_option("--extent", opt.extent, "Half-extent L of the grid");
    fk->add_option("--k-sigma", opt.k_sigma, "Error-bar multiplier");
    fk->add_option("--fk-sign", opt.fk_sign, "Potential weight sign (-1 or +1)");

    auto* fern = app.add_subcommand("fernique", "Exponential sup-moment estimate");
    add_common_flags(fern, opt);
    fern->add_option("--samples", opt.samples, "Number of paths")
        ->default_val(20000);
    fern->add_option("--T", opt.t_final, "Time horizon");
    fern->add_option("--grid", opt.grid, "Time steps of the fine grid")
        ->default_val(512);
    fern->add_option("--alpha", opt.alpha, "Exponent alpha");

    auto* verify = app.add_subcommand("verify", "Run the full verification suite");
    add_common_flags(verify, opt);
    verify->add_option("--k-sigma", opt.k_sigma, "Error-bar multiplier");
    verify->add_option("--fk-sign", opt.fk_sign, "Potential weight sign");
    verify->add_option("--quick", opt.quick_scale,
                       "Divide Monte-Carlo budgets by this factor")
        ->default_val(1);

    CLI11_PARSE(app, argc, argv);

    if (const char* env = std::getenv("CWIENER_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (!end || *end != '\0') {
            std::fprintf(stderr, "error: CWIENER_SEED is not an integer: %s\n", env);
            return 1;
        }
        opt.seed = v;
    }

    const cw_run_config cfg = to_config(opt);

    if (bm->parsed() || fgf->parsed()) {
        char* body = nullptr;
        const cw_status st = bm->parsed() ? cw_run_sample_bm(&cfg, &body, nullptr)
                                          : cw_run_sample_fgf(&cfg, &body, nullptr);
        if (st != CW_OK) return fail(st);
        return emit(opt, wrap(body).get());
    }

    if (fk->parsed() || fern->parsed()) {
        char* report = nullptr;
        const cw_status st = fk->parsed() ? cw_run_fk_compare(&cfg, &report)
                                          : cw_run_fernique(&cfg, &report);
        if (st != CW_OK) return fail(st);
        return emit(opt, wrap(report).get());
    }

    char* report = nullptr;
    int all_pass = 0;
    const cw_status st = cw_run_verify(&cfg, &report, &all_pass);
    if (st != CW_OK) return fail(st);
    const auto owned = wrap(report);
    const int io_rc = emit(opt, owned.get());
    if (io_rc != 0) return io_rc;
    return all_pass ? 0 : 2;
}
