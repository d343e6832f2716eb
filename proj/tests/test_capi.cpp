// Exercises the shared library strictly through the public C header.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cwiener.h>

#include <cmath>
#include <string>

namespace {

struct Freed {
    char* s = nullptr;
    ~Freed() { cw_string_free(s); }
};

} // namespace

TEST_CASE("status messages and error reporting") {
    CHECK(std::string(cw_status_message(CW_OK)) == "ok");
    CHECK(cw_rng_create(1, nullptr, 0, nullptr) == CW_ERR_INVALID_ARGUMENT);
    CHECK(std::string(cw_last_error()).size() > 0);
}

TEST_CASE("rng handles draw and seek") {
    cw_rng* rng = nullptr;
    REQUIRE(cw_rng_create(42, "capi", 0, &rng) == CW_OK);

    double u1 = 0.0, u2 = 0.0;
    CHECK(cw_rng_uniform(rng, &u1) == CW_OK);
    CHECK(u1 > 0.0);
    CHECK(u1 < 1.0);

    uint64_t pos = 0;
    CHECK(cw_rng_position(rng, &pos) == CW_OK);
    CHECK(pos == 1);

    CHECK(cw_rng_seek(rng, 0) == CW_OK);
    CHECK(cw_rng_uniform(rng, &u2) == CW_OK);
    CHECK(u2 == u1);

    double re = 0.0, im = 0.0;
    CHECK(cw_rng_standard_complex(rng, &re, &im) == CW_OK);
    CHECK(std::isfinite(re));
    CHECK(std::isfinite(im));
    cw_rng_destroy(rng);
}

TEST_CASE("scalar gaussian sampling and CF through the C surface") {
    cw_rng* rng = nullptr;
    REQUIRE(cw_rng_create(7, "capi.gauss", 0, &rng) == CW_OK);

    // degenerate law returns the mean
    double re = 0.0, im = 0.0;
    CHECK(cw_sample_gaussian(1.5, -2.0, 0.0, 0.0, 0.0, 0, rng, &re, &im) == CW_OK);
    CHECK(re == 1.5);
    CHECK(im == -2.0);

    // invalid law is rejected
    CHECK(cw_sample_gaussian(0, 0, -1.0, 0, 0, 0, rng, &re, &im) ==
          CW_ERR_INVALID_ARGUMENT);

    // real-tagged draws are real
    for (int i = 0; i < 100; ++i) {
        CHECK(cw_sample_gaussian(0, 0, 1.0, 1.0, 0.0, 1, rng, &re, &im) == CW_OK);
        CHECK(im == 0.0);
    }

    CHECK(cw_cf_analytic(0, 0, 1.0, 0, 0, 0, 1.0, 0.0, &re, &im) == CW_OK);
    CHECK(re == doctest::Approx(std::exp(-0.25)));
    CHECK(im == 0.0);
    cw_rng_destroy(rng);
}

TEST_CASE("sample-bm campaign emits the documented row count") {
    cw_run_config cfg;
    cw_run_config_default(&cfg);
    cfg.samples = 10;
    cfg.grid = 256;
    cfg.t_final = 1.0;

    Freed body, summary;
    REQUIRE(cw_run_sample_bm(&cfg, &body.s, &summary.s) == CW_OK);
    int rows = 0;
    for (const char* p = body.s; *p; ++p)
        if (*p == '\n') ++rows;
    CHECK(rows == 1 + 10 * 257);  // header + samples * (grid + 1)
    CHECK(std::string(summary.s).find("\"rows\": 2570") != std::string::npos);
}

TEST_CASE("sample-fgf campaign validates its config") {
    cw_run_config cfg;
    cw_run_config_default(&cfg);
    cfg.samples = 3;
    cfg.trunc = 8;
    cfg.domain = "interval:1";

    Freed body;
    REQUIRE(cw_run_sample_fgf(&cfg, &body.s, nullptr) == CW_OK);
    int rows = 0;
    for (const char* p = body.s; *p; ++p)
        if (*p == '\n') ++rows;
    CHECK(rows == 1 + 3 * 8);

    cfg.domain = "hexagon:1";
    char* out = nullptr;
    CHECK(cw_run_sample_fgf(&cfg, &out, nullptr) == CW_ERR_INVALID_ARGUMENT);
}

TEST_CASE("identical configs give byte-identical campaign output") {
    cw_run_config cfg;
    cw_run_config_default(&cfg);
    cfg.samples = 5;
    cfg.grid = 32;

    Freed a, b;
    REQUIRE(cw_run_sample_bm(&cfg, &a.s, nullptr) == CW_OK);
    REQUIRE(cw_run_sample_bm(&cfg, &b.s, nullptr) == CW_OK);
    CHECK(std::string(a.s) == std::string(b.s));
}

TEST_CASE("fernique campaign reports a stable moment") {
    cw_run_config cfg;
    cw_run_config_default(&cfg);
    cfg.samples = 4000;
    cfg.grid = 128;
    cfg.alpha = 0.1;
    cfg.t_final = 1.0;

    Freed report;
    REQUIRE(cw_run_fernique(&cfg, &report.s) == CW_OK);
    CHECK(std::string(report.s).find("\"all_pass\": true") != std::string::npos);
}

TEST_CASE("quick verify passes end to end through the C API") {
    cw_run_config cfg;
    cw_run_config_default(&cfg);
    cfg.quick_scale = 200;

    Freed report;
    int all_pass = 0;
    REQUIRE(cw_run_verify(&cfg, &report.s, &all_pass) == CW_OK);
    CHECK(all_pass == 1);
}
