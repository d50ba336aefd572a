#include "ratcalc/recurrence.hpp"

#include <stdexcept>

namespace ratcalc {

namespace {

Polynomial characteristic_q(const std::vector<GaussianRational>& coefficients) {
    std::vector<GaussianRational> q(coefficients.size() + 2, GaussianRational());
    q[0] = GaussianRational(1);
    for (size_t j = 0; j < coefficients.size(); ++j) q[j + 1] = -coefficients[j];
    return Polynomial(std::move(q));
}

/// Numerator scaled so f = scaled_p / product (z-a_i)^{m_i} with monic factors.
Polynomial monic_numerator(const RecurrenceSpec& spec) {
    auto [p, q] = build_generating_function(spec);
    (void)q;
    GaussianRational lead = -spec.coefficients().back();
    return p * (GaussianRational(1) / lead);
}

}  // namespace

RecurrenceSpec::RecurrenceSpec(std::vector<GaussianRational> initials,
                               std::vector<GaussianRational> coefficients,
                               FactoredDenominator denominator_roots)
    : initials_(std::move(initials)),
      coefficients_(std::move(coefficients)),
      roots_(std::move(denominator_roots)) {
    if (coefficients_.empty()) fail(errc::bad_input, "recurrence needs coefficients");
    if (initials_.size() != coefficients_.size())
        fail(errc::bad_input, "need exactly as many starting values as coefficients");
    if (coefficients_.back().is_zero())
        fail(errc::bad_input, "the trailing recurrence coefficient must be nonzero");
    Polynomial q = characteristic_q(coefficients_);
    if (expand_factored(roots_) * (-coefficients_.back()) != q) fail(errc::roots_mismatch);
}

std::pair<Polynomial, Polynomial> build_generating_function(
    const std::vector<GaussianRational>& initials,
    const std::vector<GaussianRational>& coefficients) {
    std::vector<GaussianRational> p(initials.size(), GaussianRational());
    for (size_t m = 0; m < initials.size(); ++m) {
        p[m] = initials[m];
        for (size_t j = 0; j < m; ++j) p[m] -= coefficients[j] * initials[m - 1 - j];
    }
    return {Polynomial(std::move(p)), characteristic_q(coefficients)};
}

std::pair<Polynomial, Polynomial> build_generating_function(const RecurrenceSpec& spec) {
    return build_generating_function(spec.initials(), spec.coefficients());
}

GaussianRational closed_form_term(const RecurrenceSpec& spec, long long n) {
    if (n < 0) throw std::invalid_argument("sequence index must be nonnegative");
    if (n < static_cast<long long>(spec.initials().size())) return spec.initials()[n];
    GaussianRational value = rational_derivative(monic_numerator(spec),
                                                 spec.denominator_roots(),
                                                 static_cast<int>(n), GaussianRational());
    return value / GaussianRational(Rational(factorial(static_cast<int>(n))));
}

GaussianRational iterate_recurrence(const std::vector<GaussianRational>& initials,
                                    const std::vector<GaussianRational>& coefficients,
                                    long long n) {
    if (n < 0) throw std::invalid_argument("sequence index must be nonnegative");
    std::vector<GaussianRational> b = initials;
    for (long long m = static_cast<long long>(b.size()); m <= n; ++m) {
        GaussianRational next;
        for (size_t j = 0; j < coefficients.size(); ++j) next += coefficients[j] * b[m - 1 - j];
        b.push_back(std::move(next));
    }
    return b[n];
}

GaussianRational iterate_recurrence(const RecurrenceSpec& spec, long long n) {
    return iterate_recurrence(spec.initials(), spec.coefficients(), n);
}

PartialFractionDecomposition partial_fraction_closed_form(const RecurrenceSpec& spec) {
    return partial_fractions(monic_numerator(spec), spec.denominator_roots());
}

GaussianRational series_coefficient(const PartialFractionDecomposition& pfd, long long n) {
    if (n < 0) throw std::invalid_argument("series index must be nonnegative");
    GaussianRational sum = pfd.polynomial_part.coeff(static_cast<size_t>(n));
    for (const auto& term : pfd.terms) {
        if (term.root.is_zero())
            fail(errc::bad_input, "series expansion about 0 needs nonzero poles");
        GaussianRational value = term.coefficient *
                                 GaussianRational(Rational(binomial(n + term.order - 1,
                                                                    term.order - 1))) *
                                 term.root.pow(-n - term.order);
        if (term.order % 2 != 0) value = -value;
        sum += value;
    }
    return sum;
}

}  // namespace ratcalc
