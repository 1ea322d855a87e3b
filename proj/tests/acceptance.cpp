// Acceptance gate: every criterion at zero tolerance, one line each.

#include "flagcoh/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

using namespace flagcoh;

namespace {

struct Gate {
    std::function<CriterionResult()> run;
    double budget_seconds;
};

}  // namespace

int main()
{
    const int max_rank = 4;
    const std::vector<Gate> gates{
        {[] { return check_borel_schubert(max_rank); }, 300.0},
        {[] { return check_generation(max_rank); }, 300.0},
        {[] { return check_negative_control(); }, 60.0},
        {[] { return check_example_suite(); }, 60.0},
        {[] { return check_weyl_orders(max_rank); }, 60.0},
        {[] { return check_properties(max_rank); }, 300.0},
    };

    bool all = true;
    for (const auto& g : gates) {
        const auto start = std::chrono::steady_clock::now();
        const CriterionResult r = g.run();
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds <= g.budget_seconds;
        const bool ok = r.passed() && in_time;
        all = all && ok;
        std::printf("%s criterion %d: %s (%ld cases, %.2fs of %.0fs)\n", ok ? "PASS" : "FAIL", r.id, r.title.c_str(),
                    r.cases, seconds, g.budget_seconds);
        if (!r.passed())
            std::printf("  diff: %s\n", r.diff.dump().c_str());
    }
    std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILED");
    return all ? 0 : 1;
}
