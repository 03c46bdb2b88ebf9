// Runs the ten acceptance criteria and prints one verdict line for each.
#include "brauer/suites.hpp"

#include <chrono>
#include <cstdio>
#include <string>

int main() {
    struct Criterion {
        int id;
        const char* suite;
        double limit_s;
    };
    const Criterion criteria[] = {
        {1, "presentation", 1},  {2, "completeness", 60}, {3, "sigma-lemmas", 120}, {4, "functor-relations", 60},
        {5, "enhanced", 120},    {6, "phi", 120},         {7, "ep", 120},           {8, "fft", 600},
        {9, "sft", 300},         {10, "oriented", 60},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        bk::Report rep;
        std::string error;
        try {
            rep = bk::run_suite(c.suite);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < c.limit_s;
        const bool pass = error.empty() && rep.ok() && in_time;
        failed += pass ? 0 : 1;
        std::printf("criterion %2d %-18s %s  %zu/%zu checks  %.2fs (limit %.0fs)%s\n", c.id, c.suite,
                    pass ? "PASS" : "FAIL", rep.checks.size() - rep.failures(), rep.checks.size(), secs, c.limit_s,
                    in_time ? "" : " over time");
        if (!error.empty()) std::printf("    error: %s\n", error.c_str());
        for (const auto& ch : rep.checks)
            if (!ch.pass) std::printf("    failed: %s [%s | %s]\n", ch.claim.c_str(), ch.lhs.c_str(), ch.rhs.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of 10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
