#include "cwiener.h"

#include "core/campaigns.hpp"
#include "core/crv.hpp"
#include "core/io.hpp"
#include "core/rng.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
cw_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return CW_OK;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return CW_ERR_INVALID_ARGUMENT;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return CW_ERR_INVALID_ARGUMENT;
    } catch (const std::runtime_error& e) {
        g_last_error = e.what();
        // io failures surface as runtime_error from the writer
        return std::string(e.what()).find("write") != std::string::npos ||
                       std::string(e.what()).find("open") != std::string::npos
                   ? CW_ERR_IO
                   : CW_ERR_NUMERIC;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CW_ERR_INTERNAL;
    }
}

cw::GaussianSpec make_spec(double mean_re, double mean_im, double variance,
                           double pvar_re, double pvar_im, int is_real) {
    cw::GaussianSpec spec;
    spec.mean = {mean_re, mean_im};
    spec.variance = variance;
    spec.pseudo_variance = {pvar_re, pvar_im};
    spec.scalar_field = is_real ? cw::ScalarField::Real : cw::ScalarField::Complex;
    spec.validate();
    return spec;
}

cw::RunConfig make_config(const cw_run_config* c) {
    if (!c) throw std::invalid_argument("config is null");
    cw::RunConfig out;
    out.seed = c->seed;
    out.samples = c->samples;
    out.trunc = c->trunc;
    out.domain = c->domain ? c->domain : "";
    out.s = c->s;
    out.t_final = c->t_final;
    out.grid = c->grid;
    out.extent = c->extent;
    out.alpha = c->alpha;
    out.k_sigma = c->k_sigma;
    out.fk_sign = c->fk_sign;
    out.format = c->format ? c->format : "";
    out.quick_scale = c->quick_scale;
    return out;
}

} // namespace

struct cw_rng {
    cw::RandomStream stream;
};

extern "C" {

const char* cw_status_message(cw_status status) {
    switch (status) {
        case CW_OK: return "ok";
        case CW_ERR_INVALID_ARGUMENT: return "invalid argument";
        case CW_ERR_NUMERIC: return "numeric failure";
        case CW_ERR_IO: return "i/o failure";
        case CW_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* cw_last_error(void) { return g_last_error.c_str(); }

void cw_string_free(char* s) { std::free(s); }

cw_status cw_rng_create(uint64_t seed, const char* tag, uint64_t index,
                        cw_rng** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("out is null");
        if (!tag) throw std::invalid_argument("tag is null");
        *out = new cw_rng{cw::RandomStream(seed, tag, index)};
    });
}

void cw_rng_destroy(cw_rng* rng) { delete rng; }

cw_status cw_rng_uniform(cw_rng* rng, double* out) {
    return guarded([&] {
        if (!rng || !out) throw std::invalid_argument("null pointer");
        *out = rng->stream.uniform();
    });
}

cw_status cw_rng_normal(cw_rng* rng, double* out) {
    return guarded([&] {
        if (!rng || !out) throw std::invalid_argument("null pointer");
        *out = rng->stream.normal();
    });
}

cw_status cw_rng_standard_complex(cw_rng* rng, double* re, double* im) {
    return guarded([&] {
        if (!rng || !re || !im) throw std::invalid_argument("null pointer");
        const auto z = rng->stream.standard_complex();
        *re = z.real();
        *im = z.imag();
    });
}

cw_status cw_rng_seek(cw_rng* rng, uint64_t offset) {
    return guarded([&] {
        if (!rng) throw std::invalid_argument("null pointer");
        rng->stream.seek(offset);
    });
}

cw_status cw_rng_position(const cw_rng* rng, uint64_t* out) {
    return guarded([&] {
        if (!rng || !out) throw std::invalid_argument("null pointer");
        *out = rng->stream.position();
    });
}

cw_status cw_sample_gaussian(double mean_re, double mean_im, double variance,
                             double pvar_re, double pvar_im, int is_real,
                             cw_rng* rng, double* re, double* im) {
    return guarded([&] {
        if (!rng || !re || !im) throw std::invalid_argument("null pointer");
        const auto spec =
            make_spec(mean_re, mean_im, variance, pvar_re, pvar_im, is_real);
        const auto z = cw::sample_gaussian(spec, rng->stream);
        *re = z.real();
        *im = z.imag();
    });
}

cw_status cw_cf_analytic(double mean_re, double mean_im, double variance,
                         double pvar_re, double pvar_im, int is_real,
                         double w_re, double w_im, double* re, double* im) {
    return guarded([&] {
        if (!re || !im) throw std::invalid_argument("null pointer");
        const auto spec =
            make_spec(mean_re, mean_im, variance, pvar_re, pvar_im, is_real);
        const auto v = cw::cf_analytic(spec, {w_re, w_im});
        *re = v.real();
        *im = v.imag();
    });
}

void cw_run_config_default(cw_run_config* config) {
    if (!config) return;
    static const cw::RunConfig d;
    static const char* kDomain = "interval:1";
    static const char* kFormat = "csv";
    config->seed = d.seed;
    config->samples = d.samples;
    config->trunc = d.trunc;
    config->domain = kDomain;
    config->s = d.s;
    config->t_final = d.t_final;
    config->grid = d.grid;
    config->extent = d.extent;
    config->alpha = d.alpha;
    config->k_sigma = d.k_sigma;
    config->fk_sign = d.fk_sign;
    config->format = kFormat;
    config->quick_scale = d.quick_scale;
}

cw_status cw_run_sample_bm(const cw_run_config* config, char** body, char** summary) {
    return guarded([&] {
        const auto out = cw::run_sample_bm(make_config(config));
        if (body) *body = dup_string(out.body);
        if (summary) *summary = dup_string(out.summary);
    });
}

cw_status cw_run_sample_fgf(const cw_run_config* config, char** body, char** summary) {
    return guarded([&] {
        const auto out = cw::run_sample_fgf(make_config(config));
        if (body) *body = dup_string(out.body);
        if (summary) *summary = dup_string(out.summary);
    });
}

cw_status cw_run_fk_compare(const cw_run_config* config, char** report) {
    return guarded([&] {
        const auto out = cw::run_fk_compare(make_config(config));
        if (report) *report = dup_string(out.body);
    });
}

cw_status cw_run_fernique(const cw_run_config* config, char** report) {
    return guarded([&] {
        const auto out = cw::run_fernique(make_config(config));
        if (report) *report = dup_string(out.body);
    });
}

cw_status cw_run_verify(const cw_run_config* config, char** report, int* all_pass) {
    return guarded([&] {
        const auto out = cw::run_verify_campaign(make_config(config));
        if (report) *report = dup_string(out.report);
        if (all_pass) *all_pass = out.all_pass ? 1 : 0;
    });
}

cw_status cw_write_file_atomic(const char* path, const char* content) {
    return guarded([&] {
        if (!path || !content) throw std::invalid_argument("null pointer");
        cw::write_text_atomic(path, content);
    });
}

} // extern "C"
