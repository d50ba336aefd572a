#ifndef RATCALC_FACTORED_HPP
#define RATCALC_FACTORED_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "ratcalc/polynomial.hpp"

namespace ratcalc {

/// One factor (z - root)^multiplicity of a denominator, multiplicity >= 1.
/// The derivative formulas index factors via n = multiplicity - 1.
struct Factor {
    GaussianRational root;
    int multiplicity = 1;

    int n() const noexcept { return multiplicity - 1; }

    friend bool operator==(const Factor& a, const Factor& b) {
        return a.multiplicity == b.multiplicity && a.root == b.root;
    }
};

/// A fully factored monic denominator: product over distinct roots a_i of
/// (z - a_i)^(n_i + 1). Invariants are checked at construction.
class FactoredDenominator {
public:
    explicit FactoredDenominator(std::vector<Factor> factors)
        : factors_(std::move(factors)) {
        if (factors_.empty())
            fail(errc::invalid_parameters, "denominator needs at least one factor");
        for (size_t i = 0; i < factors_.size(); ++i) {
            if (factors_[i].multiplicity < 1)
                fail(errc::invalid_parameters, "factor multiplicity must be >= 1");
            for (size_t j = i + 1; j < factors_.size(); ++j)
                if (factors_[i].root == factors_[j].root)
                    fail(errc::invalid_parameters, "factor roots must be distinct");
        }
    }

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    const Factor& factor(size_t i) const { return factors_[i]; }
    size_t count() const noexcept { return factors_.size(); }

    /// Sum of the n_i = multiplicity_i - 1.
    int sum_n() const noexcept {
        int s = 0;
        for (const auto& f : factors_) s += f.n();
        return s;
    }
    int degree() const noexcept {
        int d = 0;
        for (const auto& f : factors_) d += f.multiplicity;
        return d;
    }

    bool has_root(const GaussianRational& z) const {
        for (const auto& f : factors_)
            if (f.root == z) return true;
        return false;
    }

    /// Copy with factor i removed; the remainder must stay nonempty.
    FactoredDenominator without(size_t i) const {
        std::vector<Factor> rest;
        rest.reserve(factors_.size() - 1);
        for (size_t k = 0; k < factors_.size(); ++k)
            if (k != i) rest.push_back(factors_[k]);
        return FactoredDenominator(std::move(rest));
    }

    GaussianRational eval(const GaussianRational& z) const {
        GaussianRational acc(1);
        for (const auto& f : factors_) acc *= (z - f.root).pow(f.multiplicity);
        return acc;
    }

    friend bool operator==(const FactoredDenominator& a, const FactoredDenominator& b) {
        return a.factors_ == b.factors_;
    }

private:
    std::vector<Factor> factors_;
};

inline Polynomial expand_factors(const std::vector<Factor>& factors) {
    Polynomial p = Polynomial::constant(GaussianRational(1));
    for (const auto& f : factors)
        p *= Polynomial::linear_from_root(f.root).pow(f.multiplicity);
    return p;
}

inline Polynomial expand_factored(const FactoredDenominator& d) {
    return expand_factors(d.factors());
}

/// Free parameters of the derivative formulas: one s_i per factor plus their
/// sum s. Validity rules live in derivatives.hpp.
struct ParamSet {
    std::vector<GaussianRational> s_list;
    GaussianRational s;

    friend bool operator==(const ParamSet& a, const ParamSet& b) {
        return a.s == b.s && a.s_list == b.s_list;
    }
};

}  // namespace ratcalc

#endif
