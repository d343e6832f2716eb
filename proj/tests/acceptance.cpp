// Acceptance gate: runs the full verification suite at the default seed and
// prints one line per criterion. Exit code 0 only if every criterion passes.

#include "core/verify.hpp"

#include <cstdio>
#include <cstring>

int main(int argc, char** argv) {
    cw::VerifyConfig config;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) config.scale = 100;
    }

    const auto report = cw::run_verify(config);
    for (const auto& c : report.criteria)
        std::printf("criterion %2d [%s] %s\n", c.id, c.pass ? "PASS" : "FAIL",
                    c.name.c_str());
    std::printf("overall: %s\n", report.all_pass ? "PASS" : "FAIL");

    if (!report.all_pass) {
        for (const auto& c : report.criteria)
            if (!c.pass)
                std::fprintf(stderr, "criterion %d details:\n%s\n", c.id,
                             c.details.dump(2).c_str());
        return 1;
    }
    return 0;
}
