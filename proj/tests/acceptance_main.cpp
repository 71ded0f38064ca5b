// Acceptance runner: executes the cross-oracle verification checks and prints
// one PASS/FAIL line per check.  With an integer argument it runs that check
// alone (used by ctest to register each check as its own test); with no
// argument it runs all fifteen.  Exit 0 iff every executed check passed.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <nlosc/selftest.hpp>

int main(int argc, char** argv) {
    std::vector<nlosc::check_result> results;
    try {
        if (argc > 1) {
            int id = std::atoi(argv[1]);
            if (id < 1 || id > 15) {
                std::fprintf(stderr, "usage: %s [check-id 1..15]\n", argv[0]);
                return 1;
            }
            results.push_back(nlosc::run_check(id));
        } else {
            results = nlosc::run_all_checks();
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }

    bool all_passed = true;
    for (const auto& r : results) {
        std::printf("%s %2d %-26s %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.c_str());
        all_passed = all_passed && r.passed;
    }
    return all_passed ? 0 : 1;
}
