#ifndef RATCALC_ORACLE_HPP
#define RATCALC_ORACLE_HPP

#include "ratcalc/factored.hpp"
#include "ratcalc/integer.hpp"

namespace ratcalc {

/// Possibly non-reduced quotient of polynomials; equality is decided by
/// cross-multiplication, never by gcd reduction.
struct RationalFunctionExpr {
    Polynomial numerator;
    Polynomial denominator;

    RationalFunctionExpr(Polynomial num, Polynomial den)
        : numerator(std::move(num)), denominator(std::move(den)) {
        if (denominator.is_zero())
            fail(errc::division_by_zero, "rational function with zero denominator");
    }

    GaussianRational eval(const GaussianRational& z) const {
        GaussianRational den = denominator.eval(z);
        if (den.is_zero()) fail(errc::pole, "evaluation at a pole");
        return numerator.eval(z) / den;
    }
};

/// a/b == c/d iff a*d == c*b.
bool cross_equal(const RationalFunctionExpr& a, const RationalFunctionExpr& b);

/// t-fold quotient rule, applied literally and without simplification.
RationalFunctionExpr symbolic_derivative(RationalFunctionExpr f, int t);

/// Ground truth for the t-th derivative of 1/expand_factored(d) at z.
GaussianRational oracle_derivative_at(const FactoredDenominator& d, int t,
                                      const GaussianRational& z);

/// Sum over j of (-1)^j C(n,j) j^p, with 0^0 = 1. Requires 0 <= p <= n;
/// equals 0 for p < n and (-1)^n n! for p = n.
Integer euler_finite_difference(int n, int p);

}  // namespace ratcalc

#endif
