// Acceptance suite: runs every criterion and prints one pass/fail line each.

#include "checks.hpp"

#include <cstdio>

int main() {
    auto reports = k3lat::run_acceptance_suite();
    bool all = true;
    for (const auto& r : reports) {
        bool pass = r.all_pass();
        all = all && pass;
        std::printf("criterion %-34s %s\n", r.name.c_str(), pass ? "PASS" : "FAIL");
        for (const auto& c : r.checks) {
            if (!pass || true) {
                std::printf("    [%s] %-28s %s\n", c.pass ? "ok" : "XX", c.id.c_str(),
                            c.detail.c_str());
            }
        }
    }
    std::printf("acceptance: %s\n", all ? "ALL PASS" : "FAILURES");
    return all ? 0 : 1;
}
