#ifndef RATCALC_CALCULUS_HPP
#define RATCALC_CALCULUS_HPP

#include <utility>
#include <vector>

#include "ratcalc/oracle.hpp"
#include "ratcalc/derivatives.hpp"

namespace ratcalc {

/// coefficient / (z - root)^order
struct PfTerm {
    GaussianRational root;
    int order = 1;
    GaussianRational coefficient;
};

/// polynomial_part + sum of terms. One term is emitted per (root, order)
/// pair, 1 <= order <= multiplicity, including exact-zero coefficients.
struct PartialFractionDecomposition {
    Polynomial polynomial_part;
    std::vector<PfTerm> terms;
};

/// coefficient * log(z - root)
struct LogTerm {
    GaussianRational coefficient;
    GaussianRational root;
};

/// coefficient * (z - root)^exponent with exponent <= -1
struct PowerTerm {
    GaussianRational coefficient;
    GaussianRational root;
    int exponent = -1;
};

/// Antiderivative with the integration constant fixed to zero. Zero-valued
/// log/power terms are omitted.
struct AntiderivativeExpr {
    Polynomial polynomial_part;
    std::vector<LogTerm> log_terms;
    std::vector<PowerTerm> power_terms;
};

PartialFractionDecomposition partial_fractions(const Polynomial& num,
                                               const FactoredDenominator& den);

/// Rebuild the decomposition over a common denominator (round-trip checks).
RationalFunctionExpr recombine(const PartialFractionDecomposition& pfd);

/// t-th derivative of num/den at z via the generalized product rule:
/// sum over j <= min(t, deg num) of C(t,j) * num^(j)(z) * (1/den)^(t-j)(z).
GaussianRational rational_derivative(const Polynomial& num, const FactoredDenominator& den,
                                     int t, const GaussianRational& z);

/// (root, residue) for every denominator root, in factor order.
std::vector<std::pair<GaussianRational, GaussianRational>> residues(
    const Polynomial& num, const FactoredDenominator& den);

AntiderivativeExpr antiderivative(const Polynomial& num, const FactoredDenominator& den);

/// Sum of residues over the enclosed poles; the caller scales by 2*pi*i.
GaussianRational contour_integral_sum(const Polynomial& num, const FactoredDenominator& den,
                                      const std::vector<GaussianRational>& enclosed);

}  // namespace ratcalc

#endif
