// Runs the full identity battery over the whole catalog and prints a table.

#include <cstdio>

#include "endolax/endolax.hpp"

using namespace endolax;

int main() {
    for (const auto& L : standard_test_algebras()) {
        auto pkg = build(L);
        VerificationReport report = verify_fundamental_identity(pkg);
        report.append(verify_structural(pkg));
        int ok = 0;
        for (const auto& c : report.checks) ok += c.pass ? 1 : 0;
        std::printf("%-28s %d/%zu identities pass\n", L.name().c_str(), ok, report.checks.size());
        for (const auto& c : report.checks)
            if (!c.pass) std::printf("    FAIL %s: %s\n", c.identity.c_str(), c.witness.c_str());
    }
    return 0;
}
