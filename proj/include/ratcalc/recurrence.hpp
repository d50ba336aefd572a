#ifndef RATCALC_RECURRENCE_HPP
#define RATCALC_RECURRENCE_HPP

#include <utility>
#include <vector>

#include "ratcalc/calculus.hpp"

namespace ratcalc {

/// Linear recurrence b_{n+k+1} = c_0 b_{n+k} + c_1 b_{n+k-1} + ... + c_k b_n
/// with starting values b_0..b_k. The generating function is p(z)/q(z) with
/// q(z) = 1 - c_0 z - ... - c_k z^{k+1}; the caller supplies q's roots, which
/// are verified (never computed): q must equal (-c_k) * product (z-a_i)^{m_i}.
class RecurrenceSpec {
public:
    RecurrenceSpec(std::vector<GaussianRational> initials,
                   std::vector<GaussianRational> coefficients,
                   FactoredDenominator denominator_roots);

    const std::vector<GaussianRational>& initials() const noexcept { return initials_; }
    const std::vector<GaussianRational>& coefficients() const noexcept {
        return coefficients_;
    }
    const FactoredDenominator& denominator_roots() const noexcept { return roots_; }
    int order() const noexcept { return static_cast<int>(coefficients_.size()); }

private:
    std::vector<GaussianRational> initials_;
    std::vector<GaussianRational> coefficients_;
    FactoredDenominator roots_;
};

/// (p, q) with f = p/q the generating function of the sequence. The vector
/// overload serves structure checks where q's roots are unknown or leave the
/// scalar field (it never touches declared roots).
std::pair<Polynomial, Polynomial> build_generating_function(
    const std::vector<GaussianRational>& initials,
    const std::vector<GaussianRational>& coefficients);
std::pair<Polynomial, Polynomial> build_generating_function(const RecurrenceSpec& spec);

/// b_n via n-fold differentiation of f at 0: b_n = f^{(n)}(0) / n!.
GaussianRational closed_form_term(const RecurrenceSpec& spec, long long n);

/// Literal unrolling of the recurrence (test oracle); the vector overload
/// needs no declared roots.
GaussianRational iterate_recurrence(const std::vector<GaussianRational>& initials,
                                    const std::vector<GaussianRational>& coefficients,
                                    long long n);
GaussianRational iterate_recurrence(const RecurrenceSpec& spec, long long n);

/// Partial fractions of the generating function.
PartialFractionDecomposition partial_fraction_closed_form(const RecurrenceSpec& spec);

/// Coefficient of z^n in the power series of a decomposition whose poles are
/// all nonzero: each B/(z-a)^j contributes B (-1)^j C(n+j-1, j-1) a^{-n-j}.
GaussianRational series_coefficient(const PartialFractionDecomposition& pfd, long long n);

}  // namespace ratcalc

#endif
