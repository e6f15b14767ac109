// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <cmath>
#include <cstdio>

#include "acfh/verify.hpp"

int main() {
    const std::vector<acfh::Criterion> cs = acfh::run_acceptance();
    int failures = 0;
    for (const auto& c : cs) {
        double worst = 0.0;
        for (const auto& r : c.rows) {
            const double err = std::abs(r.measured - r.expected);
            if (err > worst) worst = err;
        }
        std::printf("%s  %2d. %-55s worst |measured - expected| = %.3e\n",
                    c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), worst);
        if (!c.pass) {
            ++failures;
            for (const auto& r : c.rows)
                if (!r.pass)
                    std::printf("      failed: %s  measured=%.17g expected=%.17g tol=%.3g\n",
                                r.name.c_str(), r.measured, r.expected, r.tolerance);
        }
    }
    return failures == 0 ? 0 : 1;
}
