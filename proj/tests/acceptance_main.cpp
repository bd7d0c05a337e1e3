// Acceptance runner: executes every criterion at its pinned tolerance and
// prints one PASS/FAIL line each.  Exit status is non-zero if anything
// asserted fails.

#include <cstdio>
#include <exception>

#include "thermogeom/verify.hpp"

int main() {
    std::vector<thermogeom::CriterionResult> results;
    try {
        results = thermogeom::run_acceptance();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance suite aborted: %s\n", e.what());
        return 2;
    }

    int failed = 0;
    for (const auto& r : results) {
        const char* status = r.asserted ? (r.pass ? "PASS" : "FAIL") : "INFO";
        if (r.asserted && !r.pass) ++failed;
        std::printf("%s %-18s [%-8s] %s (expected %.9g, actual %.9g, tolerance %.9g)\n", status,
                    r.id.c_str(), r.section.c_str(), r.description.c_str(), r.expected, r.actual,
                    r.tolerance);
        if (!r.note.empty()) std::printf("     %s\n", r.note.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed,
                results.size());
    return failed == 0 ? 0 : 1;
}
