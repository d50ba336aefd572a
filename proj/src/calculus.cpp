#include "ratcalc/calculus.hpp"

#include <algorithm>
#include <stdexcept>

namespace ratcalc {

namespace {

/// d-th derivative of p_hat(z) / expand(den without factor i) at a_i, where
/// a_i is not a root of the remaining factors. With L = 1 the quotient
/// degenerates to the bare polynomial.
GaussianRational cofactor_derivative(const Polynomial& p_hat, const FactoredDenominator& den,
                                     size_t i, int d, const GaussianRational& a_i) {
    if (den.count() == 1) return p_hat.derivative(d).eval(a_i);
    return rational_derivative(p_hat, den.without(i), d, a_i);
}

}  // namespace

PartialFractionDecomposition partial_fractions(const Polynomial& num,
                                               const FactoredDenominator& den) {
    DivisionResult div = long_division(num, expand_factored(den));
    PartialFractionDecomposition pfd;
    pfd.polynomial_part = std::move(div.quotient);
    const Polynomial& p_hat = div.remainder;

    for (size_t i = 0; i < den.count(); ++i) {
        const Factor& f = den.factor(i);
        for (int j = 1; j <= f.multiplicity; ++j) {
            const int d = f.multiplicity - j;
            GaussianRational coef =
                cofactor_derivative(p_hat, den, i, d, f.root) / GaussianRational(Rational(factorial(d)));
            pfd.terms.push_back(PfTerm{f.root, j, std::move(coef)});
        }
    }
    return pfd;
}

RationalFunctionExpr recombine(const PartialFractionDecomposition& pfd) {
    RationalFunctionExpr acc(pfd.polynomial_part, Polynomial::constant(GaussianRational(1)));
    for (const auto& term : pfd.terms) {
        Polynomial den = Polynomial::linear_from_root(term.root).pow(term.order);
        acc = RationalFunctionExpr(
            acc.numerator * den + Polynomial::constant(term.coefficient) * acc.denominator,
            acc.denominator * den);
    }
    return acc;
}

GaussianRational rational_derivative(const Polynomial& num, const FactoredDenominator& den,
                                     int t, const GaussianRational& z) {
    if (den.has_root(z)) fail(errc::pole, "z coincides with a denominator root");
    if (t < 0) throw std::invalid_argument("derivative order must be nonnegative");
    GaussianRational sum;
    const int jmax = std::min(t, num.degree());
    for (int j = 0; j <= jmax; ++j) {
        GaussianRational term = GaussianRational(Rational(binomial(t, j))) *
                                num.derivative(j).eval(z) * derivative(den, t - j, z);
        sum += term;
    }
    return sum;
}

std::vector<std::pair<GaussianRational, GaussianRational>> residues(
    const Polynomial& num, const FactoredDenominator& den) {
    PartialFractionDecomposition pfd = partial_fractions(num, den);
    std::vector<std::pair<GaussianRational, GaussianRational>> out;
    for (const auto& term : pfd.terms)
        if (term.order == 1) out.emplace_back(term.root, term.coefficient);
    return out;
}

AntiderivativeExpr antiderivative(const Polynomial& num, const FactoredDenominator& den) {
    PartialFractionDecomposition pfd = partial_fractions(num, den);
    AntiderivativeExpr result;

    std::vector<GaussianRational> poly;
    const auto& coeffs = pfd.polynomial_part.coefficients();
    if (!coeffs.empty()) {
        poly.assign(coeffs.size() + 1, GaussianRational());
        for (size_t i = 0; i < coeffs.size(); ++i)
            poly[i + 1] = coeffs[i] / GaussianRational(static_cast<long long>(i) + 1);
    }
    result.polynomial_part = Polynomial(std::move(poly));

    for (const auto& term : pfd.terms) {
        if (term.coefficient.is_zero()) continue;
        if (term.order == 1) {
            result.log_terms.push_back(LogTerm{term.coefficient, term.root});
        } else {
            // B/(z-a)^j integrates to B/(1-j) * (z-a)^{1-j}
            GaussianRational coef =
                term.coefficient / GaussianRational(1LL - term.order);
            result.power_terms.push_back(PowerTerm{std::move(coef), term.root, 1 - term.order});
        }
    }
    return result;
}

GaussianRational contour_integral_sum(const Polynomial& num, const FactoredDenominator& den,
                                      const std::vector<GaussianRational>& enclosed) {
    for (size_t i = 0; i < enclosed.size(); ++i) {
        if (!den.has_root(enclosed[i]))
            throw std::invalid_argument("enclosed point is not a denominator root");
        for (size_t j = i + 1; j < enclosed.size(); ++j)
            if (enclosed[i] == enclosed[j])
                throw std::invalid_argument("enclosed roots must be distinct");
    }
    GaussianRational sum;
    for (const auto& [root, residue] : residues(num, den))
        if (std::find(enclosed.begin(), enclosed.end(), root) != enclosed.end())
            sum += residue;
    return sum;
}

}  // namespace ratcalc
