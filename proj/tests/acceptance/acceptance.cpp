// Runs every acceptance check and prints one PASS/FAIL line per criterion.

#include <cstdio>

#include "ftomo/verification.hpp"

int main() {
    int failed = 0;
    int index = 1;
    for (const auto& name : ftomo::check_names()) {
        const auto r = ftomo::run_check(name);
        std::printf("%s %2d %-20s residual %-11.4g %7.3fs / %3.0fs  %s\n", r.passed ? "PASS" : "FAIL", index++,
                    r.name.c_str(), r.residual, r.runtime_s, r.runtime_limit_s, r.detail.c_str());
        std::fflush(stdout);
        failed += r.passed ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(ftomo::check_names().size()) - failed,
                ftomo::check_names().size());
    return failed == 0 ? 0 : 1;
}
