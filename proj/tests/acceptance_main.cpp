// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
#include "spectral_er/acceptance.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

int main(int argc, char** argv) {
    ser::AcceptanceConfig cfg;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--n-max") == 0 && i + 1 < argc)
            cfg.spectral_er_nmax = std::atoi(argv[++i]);
        else if (std::strcmp(argv[i], "--workers") == 0 && i + 1 < argc)
            cfg.workers = std::atoi(argv[++i]);
    }
    bool all = true;
    auto progress = [&](const ser::CriterionResult& r) {
        all = all && r.pass;
        std::printf("[%s] criterion %2d: %s%s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.pass ? "" : " -- ", r.pass ? "" : r.detail.c_str());
        std::fflush(stdout);
    };
    ser::run_acceptance(cfg, progress);
    if (!all) {
        std::printf("acceptance: FAILURES PRESENT\n");
        return 1;
    }
    std::printf("acceptance: all 11 criteria pass\n");
    return 0;
}
