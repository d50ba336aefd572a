#include "ratcalc/derivatives.hpp"

#include <algorithm>
#include <stdexcept>

#include "ratcalc/integer.hpp"

namespace ratcalc {

namespace {

/// Shape-level parameter checks shared by every formula entry point; the
/// exhaustive denominator-factor sweep lives in validate_params.
void check_shape(const FactoredDenominator& d, const GaussianRational& z,
                 const ParamSet& params) {
    if (d.has_root(z)) fail(errc::pole, "z coincides with a denominator root");
    if (params.s_list.size() != d.count())
        fail(errc::invalid_parameters, "parameter list length must match factor count");
    if (params.s.is_zero()) fail(errc::invalid_parameters, "s must be nonzero");
    for (size_t i = 0; i < d.count(); ++i) {
        const bool zero = params.s_list[i].is_zero();
        if (d.factor(i).n() == 0 ? !zero : zero)
            fail(errc::invalid_parameters,
                 "s_i must be zero exactly when the factor exponent is 1");
    }
}

/// Exponent of the theta1 numerator: (sum of n_m) + L - 1 + t.
long long theta1_exponent(const FactoredDenominator& d, int t) {
    return d.sum_n() + static_cast<long long>(d.count()) - 1 + t;
}

GaussianRational phi1(const EvalContext& ctx, long long j, size_t r) {
    const auto& d = ctx.denominator;
    const int n_r = d.factor(r).n();
    GaussianRational sum;
    for (int p = 0; p <= n_r; ++p) sum += theta1(ctx, j, r, p);
    // s_r^{n_r} is 1 when n_r = 0 (zero base, zero exponent).
    const GaussianRational den = ctx.params.s_list[r].pow(n_r) *
                                 (ctx.z - d.factor(r).root).pow(n_r + 1 + ctx.t);
    return sum / den;
}

/// Outer-sum term with an explicit upper index: j^{n_upper - t} * (-1)^j
/// / (j! (n_upper - j)!) times the factor sum. Formula I passes n_upper = N,
/// the correction sum of formula II passes n_upper = t.
GaussianRational psi1(const EvalContext& ctx, long long j, int n_upper) {
    GaussianRational sum;
    for (size_t r = 0; r < ctx.denominator.count(); ++r) sum += phi1(ctx, j, r);
    GaussianRational coef(
        Rational(Integer(j)).pow(n_upper - ctx.t) /
        Rational(factorial(static_cast<int>(j)) * factorial(n_upper - static_cast<int>(j))));
    if (j % 2 != 0) coef = -coef;
    return coef * sum;
}

GaussianRational formula_I_body(const EvalContext& ctx) {
    GaussianRational sum;
    for (long long j = 1; j <= ctx.N; ++j) sum += psi1(ctx, j, ctx.N);
    GaussianRational lead =
        GaussianRational(Rational(factorial(ctx.t))) / ctx.params.s.pow(ctx.t);
    if ((ctx.N + ctx.t) % 2 != 0) lead = -lead;
    return lead * sum;
}

GaussianRational phi2(const EvalContext& ctx, size_t r) {
    const auto& d = ctx.denominator;
    const int n_r = d.factor(r).n();
    long long expo = ctx.t;
    for (size_t m = 0; m < d.count(); ++m)
        if (m != r) expo += d.factor(m).n();
    GaussianRational sum;
    for (int p = 1; p <= n_r; ++p) sum += theta2(ctx, r, p);
    return ctx.params.s_list[r].pow(expo) * sum /
           (ctx.z - d.factor(r).root).pow(n_r + ctx.t);
}

Rational upper_abs(const GaussianRational& w) { return w.re().abs() + w.im().abs(); }
Rational lower_abs(const GaussianRational& w) {
    return std::max(w.re().abs(), w.im().abs());
}

bool is_positive_integer(const GaussianRational& v) {
    return v.is_real() && v.re().den() == 1 && v.re().num() > 0;
}

/// True iff no denominator factor of either formula can vanish for any
/// j >= 1, i.e. the candidate passes validate_params for every (t, N). Each
/// factor is linear in j, so it vanishes for at most one j, computed exactly.
bool valid_for_all_orders(const FactoredDenominator& d, const GaussianRational& z,
                          const ParamSet& params) {
    for (size_t r = 0; r < d.count(); ++r) {
        const GaussianRational& a_r = d.factor(r).root;
        for (size_t m = 0; m < d.count(); ++m) {
            if (m == r) continue;
            const GaussianRational& a_m = d.factor(m).root;
            const GaussianRational slope = params.s * (a_r - a_m);
            for (int p = 0; p <= d.factor(r).n(); ++p)
                for (int q = 0; q <= d.factor(m).n(); ++q) {
                    // factor value at j is j*slope + c
                    GaussianRational c = GaussianRational(q) * params.s_list[m] * (z - a_r) -
                                         GaussianRational(p) * params.s_list[r] * (z - a_m);
                    if (p >= 1 && q >= 1 && c.is_zero()) return false;
                    if (is_positive_integer(-c / slope)) return false;
                }
        }
    }
    return true;
}

}  // namespace

GaussianRational theta1(const EvalContext& ctx, long long j, size_t r, int p) {
    const auto& d = ctx.denominator;
    if (r >= d.count()) throw std::invalid_argument("theta1: factor index out of range");
    const int n_r = d.factor(r).n();
    if (j < 1 || p < 0 || p > n_r)
        throw std::invalid_argument("theta1: need j >= 1 and 0 <= p <= n_r");
    check_shape(d, ctx.z, ctx.params);

    const GaussianRational base =
        GaussianRational(j) * ctx.params.s - GaussianRational(p) * ctx.params.s_list[r];
    GaussianRational value = base.pow(theta1_exponent(d, ctx.t));
    if (p % 2 != 0) value = -value;
    value /= GaussianRational(Rational(factorial(p) * factorial(n_r - p)));

    const GaussianRational& a_r = d.factor(r).root;
    for (size_t m = 0; m < d.count(); ++m) {
        if (m == r) continue;
        const GaussianRational& a_m = d.factor(m).root;
        const GaussianRational left = (ctx.z - a_m) * base;
        for (int q = 0; q <= d.factor(m).n(); ++q) {
            GaussianRational den =
                left - (ctx.z - a_r) * (GaussianRational(j) * ctx.params.s -
                                        GaussianRational(q) * ctx.params.s_list[m]);
            if (den.is_zero())
                fail(errc::invalid_parameters,
                     "zero denominator factor; validate_params was skipped");
            value /= den;
        }
    }
    return value;
}

GaussianRational theta2(const EvalContext& ctx, size_t r, int p) {
    const auto& d = ctx.denominator;
    if (r >= d.count()) throw std::invalid_argument("theta2: factor index out of range");
    const int n_r = d.factor(r).n();
    if (n_r < 1 || p < 1 || p > n_r)
        throw std::invalid_argument("theta2: need n_r >= 1 and 1 <= p <= n_r");
    check_shape(d, ctx.z, ctx.params);

    GaussianRational value(Rational(int_pow(Integer(p), d.sum_n() + ctx.t),
                                    factorial(p) * factorial(n_r - p)));
    if (p % 2 != 0) value = -value;

    const GaussianRational& a_r = d.factor(r).root;
    for (size_t m = 0; m < d.count(); ++m) {
        if (m == r) continue;
        const GaussianRational& a_m = d.factor(m).root;
        for (int q = 1; q <= d.factor(m).n(); ++q) {
            GaussianRational den =
                GaussianRational(q) * ctx.params.s_list[m] * (ctx.z - a_r) -
                GaussianRational(p) * ctx.params.s_list[r] * (ctx.z - a_m);
            if (den.is_zero())
                fail(errc::invalid_parameters,
                     "zero denominator factor; validate_params was skipped");
            value /= den;
        }
    }
    return value;
}

GaussianRational derivative_formula_I(const EvalContext& ctx) {
    check_shape(ctx.denominator, ctx.z, ctx.params);
    if (ctx.t < 0) throw std::invalid_argument("derivative order must be nonnegative");
    if (ctx.N < ctx.t + 1) fail(errc::n_below_range);
    return formula_I_body(ctx);
}

GaussianRational derivative_formula_I_unchecked(const EvalContext& ctx) {
    check_shape(ctx.denominator, ctx.z, ctx.params);
    if (ctx.t < 0) throw std::invalid_argument("derivative order must be nonnegative");
    if (ctx.N < 1) throw std::invalid_argument("the outer sum needs N >= 1");
    return formula_I_body(ctx);
}

GaussianRational derivative_formula_II(const EvalContext& ctx) {
    check_shape(ctx.denominator, ctx.z, ctx.params);
    if (ctx.t < 0) throw std::invalid_argument("derivative order must be nonnegative");
    const auto& d = ctx.denominator;
    const int total = d.sum_n() + ctx.t;
    if (total < 1) fail(errc::formula_ii_inadmissible);

    GaussianRational principal;
    for (size_t r = 0; r < d.count(); ++r)
        if (d.factor(r).n() >= 1) principal += phi2(ctx, r);
    GaussianRational lead = GaussianRational(1) / ctx.params.s.pow(ctx.t);
    for (const auto& f : d.factors()) lead /= (ctx.z - f.root);
    if (total % 2 != 0) lead = -lead;
    principal = lead * principal;

    GaussianRational correction;
    for (long long j = 1; j <= ctx.t; ++j) correction += psi1(ctx, j, ctx.t);
    correction *= GaussianRational(Rational(factorial(ctx.t))) / ctx.params.s.pow(ctx.t);
    return principal + correction;
}

ValidityReport validate_params(const FactoredDenominator& d, const GaussianRational& z,
                               int t, int N, const ParamSet& params) {
    if (d.has_root(z)) fail(errc::pole, "z coincides with a denominator root");
    ValidityReport rep;
    auto reject = [&rep](std::string why) {
        rep.ok = false;
        rep.reason = std::move(why);
    };
    if (params.s_list.size() != d.count()) {
        reject("parameter list length must match factor count");
        return rep;
    }
    if (params.s.is_zero()) {
        reject("s must be nonzero");
        return rep;
    }
    for (size_t i = 0; i < d.count(); ++i) {
        const bool zero = params.s_list[i].is_zero();
        if (d.factor(i).n() == 0 && !zero) {
            reject("s_i must be zero when the factor exponent is 1");
            return rep;
        }
        if (d.factor(i).n() >= 1 && zero) {
            reject("s_i must be nonzero when the factor exponent exceeds 1");
            return rep;
        }
    }

    // Main family, shared by both formulas: scan j ascending, then r, m, p, q.
    const long long jmax = std::max(N, t);
    for (long long j = 1; j <= jmax; ++j)
        for (size_t r = 0; r < d.count(); ++r)
            for (size_t m = 0; m < d.count(); ++m) {
                if (m == r) continue;
                const GaussianRational& a_r = d.factor(r).root;
                const GaussianRational& a_m = d.factor(m).root;
                for (int p = 0; p <= d.factor(r).n(); ++p)
                    for (int q = 0; q <= d.factor(m).n(); ++q) {
                        GaussianRational den =
                            (z - a_m) * (GaussianRational(j) * params.s -
                                         GaussianRational(p) * params.s_list[r]) -
                            (z - a_r) * (GaussianRational(j) * params.s -
                                         GaussianRational(q) * params.s_list[m]);
                        if (den.is_zero()) {
                            reject("denominator factor of the main sum vanishes");
                            rep.witness = ParamWitness{j, r, m, p, q};
                            return rep;
                        }
                    }
            }

    // j-independent family of the principal sum (both p, q >= 1).
    for (size_t r = 0; r < d.count(); ++r)
        for (size_t m = 0; m < d.count(); ++m) {
            if (m == r) continue;
            const GaussianRational& a_r = d.factor(r).root;
            const GaussianRational& a_m = d.factor(m).root;
            for (int p = 1; p <= d.factor(r).n(); ++p)
                for (int q = 1; q <= d.factor(m).n(); ++q) {
                    GaussianRational den =
                        GaussianRational(q) * params.s_list[m] * (z - a_r) -
                        GaussianRational(p) * params.s_list[r] * (z - a_m);
                    if (den.is_zero()) {
                        reject("denominator factor of the principal sum vanishes");
                        rep.witness = ParamWitness{0, r, m, p, q};
                        return rep;
                    }
                }
        }
    return rep;
}

ParamSet canonical_params(const FactoredDenominator& d, const GaussianRational& z) {
    if (d.has_root(z)) fail(errc::pole, "z coincides with a denominator root");
    // Indices with n_i >= 1 first, original order preserved within each group.
    std::vector<size_t> order;
    for (size_t i = 0; i < d.count(); ++i)
        if (d.factor(i).n() >= 1) order.push_back(i);
    const size_t lprime = order.size();

    ParamSet params;
    params.s_list.assign(d.count(), GaussianRational());
    if (lprime == 0) {
        params.s = GaussianRational(1);
        return params;
    }

    // Rational stand-in for the modulus product |a_r-z|/|a_m-z| over ordered
    // pairs: bound each modulus above by |x|+|y| and below by max(|x|,|y|).
    Rational m_bound(1);
    for (size_t r = 0; r < d.count(); ++r)
        for (size_t m = 0; m < d.count(); ++m) {
            if (m == r) continue;
            m_bound *= Rational(1) + upper_abs(d.factor(r).root - z) /
                                         lower_abs(d.factor(m).root - z);
        }

    for (Rational k = Rational(3) * m_bound;; k *= 2) {
        GaussianRational cur(1);  // k^{i} * n_i * ... * n_1 as i advances
        for (size_t i = 0; i < lprime; ++i) {
            params.s_list[order[i]] = cur;
            cur *= GaussianRational(k * Rational(d.factor(order[i]).n()));
        }
        params.s = cur;
        if (valid_for_all_orders(d, z, params)) return params;
    }
}

GaussianRational derivative(const FactoredDenominator& d, int t,
                            const GaussianRational& z) {
    if (d.has_root(z)) fail(errc::pole, "z coincides with a denominator root");
    if (t < 0) throw std::invalid_argument("derivative order must be nonnegative");
    EvalContext ctx{d, z, t, t + 1, canonical_params(d, z)};
    return derivative_formula_I(ctx);
}

}  // namespace ratcalc
