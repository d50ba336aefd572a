#ifndef RATCALC_DERIVATIVES_HPP
#define RATCALC_DERIVATIVES_HPP

#include <optional>
#include <string>

#include "ratcalc/factored.hpp"

namespace ratcalc {

/// Everything a single formula evaluation needs. Factor indices are 0-based
/// throughout this API. N is used by formula I only.
struct EvalContext {
    FactoredDenominator denominator;
    GaussianRational z;
    int t = 0;
    int N = 1;
    ParamSet params;
};

/// First denominator factor found to vanish. j >= 1 identifies the
/// formula-I family (z-a_m)(js-p*s_r) - (z-a_r)(js-q*s_m); j == 0 marks the
/// j-independent family q*s_m(z-a_r) - p*s_r(z-a_m) with p,q >= 1.
struct ParamWitness {
    long long j = 0;
    size_t r = 0;
    size_t m = 0;
    int p = 0;
    int q = 0;
};

struct ValidityReport {
    bool ok = true;
    std::optional<ParamWitness> witness;
    std::string reason;
};

/// Checks s != 0, the "s_i = 0 iff exponent = 1" pattern, and that no
/// denominator factor of either formula vanishes for 1 <= j <= max(N, t).
ValidityReport validate_params(const FactoredDenominator& d, const GaussianRational& z,
                               int t, int N, const ParamSet& params);

/// Deterministic parameter choice valid for every admissible (t, N) at this z.
ParamSet canonical_params(const FactoredDenominator& d, const GaussianRational& z);

/// Innermost term of formula I. j >= 1, 0 <= p <= n_r.
GaussianRational theta1(const EvalContext& ctx, long long j, size_t r, int p);

/// Innermost term of formula II's principal sum. Requires n_r >= 1, 1 <= p <= n_r.
GaussianRational theta2(const EvalContext& ctx, size_t r, int p);

/// Sum-over-factors formula, valid for any N >= t+1.
GaussianRational derivative_formula_I(const EvalContext& ctx);

/// Same body without the N >= t+1 admissibility check (negative-control entry
/// point; still requires N >= 1 and valid params).
GaussianRational derivative_formula_I_unchecked(const EvalContext& ctx);

/// Alternative formula; requires sum of n_m plus t >= 1 (ctx.N ignored).
GaussianRational derivative_formula_II(const EvalContext& ctx);

/// High-level entry point: canonical parameters, formula I with N = t+1.
/// Returns the exact t-th derivative of 1/expand_factored(d) at z.
GaussianRational derivative(const FactoredDenominator& d, int t, const GaussianRational& z);

}  // namespace ratcalc

#endif
