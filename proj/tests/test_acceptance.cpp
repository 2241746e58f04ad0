// End-to-end self-check: one line per criterion, nonzero exit on failure.
#include <cstdio>

#include "yq/acceptance.hpp"

int main() {
    const yq::GlobalParams par;
    const auto results = yq::run_acceptance(par, false);
    bool ok = true;
    for (const auto& r : results) {
        std::printf("criterion %d [%s]: %s  (worst %.3g of budget, %.1fs)%s%s\n",
                    r.id, r.name.c_str(), r.pass ? "PASS" : "FAIL", r.worst, r.seconds,
                    r.note.empty() ? "" : "  -- ", r.note.c_str());
        std::fflush(stdout);
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}
