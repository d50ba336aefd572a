#ifndef RATCALC_SELFTEST_HPP
#define RATCALC_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ratcalc {

struct SuiteResult {
    std::string name;
    int checks = 0;
    int failures = 0;
};

struct SelftestReport {
    bool passed = true;
    std::vector<SuiteResult> suites;
};

/// Finite-difference identities for n <= 12 plus 50 seeded random
/// derivative-vs-oracle equivalence cases. Same seed, same cases.
SelftestReport run_selftest(std::uint64_t seed);

}  // namespace ratcalc

#endif
