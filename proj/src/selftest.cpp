#include "ratcalc/selftest.hpp"

#include <random>

#include "ratcalc/oracle.hpp"
#include "ratcalc/derivatives.hpp"

namespace ratcalc {

namespace {

// Modulo draw instead of std::uniform_int_distribution: the latter's output
// sequence is implementation-defined, and selftest must replay identically
// for a given seed on every platform.
long long draw(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational draw_rational(std::mt19937_64& rng) {
    return Rational(Integer(draw(rng, -4, 4)), Integer(draw(rng, 1, 3)));
}

GaussianRational draw_scalar(std::mt19937_64& rng) {
    return GaussianRational(draw_rational(rng), draw_rational(rng));
}

FactoredDenominator draw_denominator(std::mt19937_64& rng) {
    const long long count = draw(rng, 1, 3);
    std::vector<Factor> factors;
    while (static_cast<long long>(factors.size()) < count) {
        GaussianRational root = draw_scalar(rng);
        bool seen = false;
        for (const auto& f : factors) seen = seen || f.root == root;
        if (seen) continue;
        factors.push_back(Factor{std::move(root), static_cast<int>(draw(rng, 1, 3))});
    }
    return FactoredDenominator(std::move(factors));
}

GaussianRational draw_point_off(std::mt19937_64& rng, const FactoredDenominator& d) {
    while (true) {
        GaussianRational z = draw_scalar(rng);
        if (!d.has_root(z)) return z;
    }
}

}  // namespace

SelftestReport run_selftest(std::uint64_t seed) {
    SelftestReport report;

    SuiteResult euler{"euler_finite_differences", 0, 0};
    for (int n = 0; n <= 12; ++n)
        for (int p = 0; p <= n; ++p) {
            ++euler.checks;
            Integer expected = p < n ? Integer(0)
                                     : (n % 2 == 0 ? factorial(n) : -factorial(n));
            if (euler_finite_difference(n, p) != expected) ++euler.failures;
        }
    report.suites.push_back(euler);

    SuiteResult equivalence{"derivative_vs_oracle", 0, 0};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 50; ++i) {
        FactoredDenominator d = draw_denominator(rng);
        GaussianRational z = draw_point_off(rng, d);
        int t = static_cast<int>(draw(rng, 0, 4));
        ++equivalence.checks;
        if (derivative(d, t, z) != oracle_derivative_at(d, t, z)) ++equivalence.failures;
    }
    report.suites.push_back(equivalence);

    for (const auto& suite : report.suites) report.passed = report.passed && suite.failures == 0;
    return report;
}

}  // namespace ratcalc
