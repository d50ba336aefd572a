#include "ratcalc/oracle.hpp"

#include <stdexcept>

namespace ratcalc {

bool cross_equal(const RationalFunctionExpr& a, const RationalFunctionExpr& b) {
    return a.numerator * b.denominator == b.numerator * a.denominator;
}

RationalFunctionExpr symbolic_derivative(RationalFunctionExpr f, int t) {
    for (int k = 0; k < t; ++k) {
        Polynomial num = f.numerator.derivative() * f.denominator -
                         f.numerator * f.denominator.derivative();
        Polynomial den = f.denominator * f.denominator;
        f = RationalFunctionExpr(std::move(num), std::move(den));
    }
    return f;
}

GaussianRational oracle_derivative_at(const FactoredDenominator& d, int t,
                                      const GaussianRational& z) {
    if (d.has_root(z)) fail(errc::pole, "z coincides with a denominator root");
    RationalFunctionExpr f(Polynomial::constant(GaussianRational(1)), expand_factored(d));
    return symbolic_derivative(std::move(f), t).eval(z);
}

Integer euler_finite_difference(int n, int p) {
    if (n < 0 || p < 0 || p > n)
        throw std::invalid_argument("euler_finite_difference requires 0 <= p <= n");
    Integer sum = 0;
    for (int j = 0; j <= n; ++j) {
        Integer term = binomial(n, j) * int_pow(Integer(j), p);
        if (j % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

}  // namespace ratcalc
