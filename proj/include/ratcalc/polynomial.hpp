#ifndef RATCALC_POLYNOMIAL_HPP
#define RATCALC_POLYNOMIAL_HPP

#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "ratcalc/gaussian.hpp"

namespace ratcalc {

/// Dense univariate polynomial over the Gaussian rationals, coefficient index
/// = power. Kept normalized: empty vector is the zero polynomial, otherwise
/// the last coefficient is nonzero. degree() returns -1 for zero.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<GaussianRational> coeffs)
        : c_(coeffs.begin(), coeffs.end()) {
        trim();
    }

    static Polynomial zero() { return {}; }
    static Polynomial constant(GaussianRational v) {
        Polynomial p;
        if (!v.is_zero()) p.c_.push_back(std::move(v));
        return p;
    }
    static Polynomial monomial(int power, GaussianRational coef = GaussianRational(1)) {
        Polynomial p;
        if (!coef.is_zero()) {
            p.c_.assign(static_cast<size_t>(power) + 1, GaussianRational());
            p.c_.back() = std::move(coef);
        }
        return p;
    }
    /// z - a
    static Polynomial linear_from_root(const GaussianRational& a) {
        return Polynomial{-a, GaussianRational(1)};
    }

    const std::vector<GaussianRational>& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    GaussianRational coeff(size_t i) const {
        return i < c_.size() ? c_[i] : GaussianRational();
    }
    const GaussianRational& leading() const { return c_.back(); }

    GaussianRational eval(const GaussianRational& z) const {
        GaussianRational acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Polynomial r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, GaussianRational());
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();  // leading product of nonzeros in a field is nonzero, but stay safe
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend Polynomial operator*(Polynomial a, const GaussianRational& s) {
        if (s.is_zero()) return {};
        for (auto& c : a.c_) c *= s;
        return a;
    }
    friend Polynomial operator*(const GaussianRational& s, Polynomial a) {
        return std::move(a) * s;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) noexcept {
        return !(a == b);
    }

    /// t-fold formal derivative; zero once t exceeds the degree.
    Polynomial derivative(int t = 1) const {
        Polynomial p = *this;
        for (int k = 0; k < t && !p.is_zero(); ++k) {
            std::vector<GaussianRational> d;
            d.reserve(p.c_.size() > 0 ? p.c_.size() - 1 : 0);
            for (size_t i = 1; i < p.c_.size(); ++i)
                d.push_back(p.c_[i] * Rational(static_cast<long long>(i)));
            p = Polynomial(std::move(d));
        }
        return p;
    }

    Polynomial pow(int e) const {
        Polynomial r = constant(GaussianRational(1));
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        os << '[';
        for (size_t i = 0; i < p.c_.size(); ++i) os << (i ? ", " : "") << p.c_[i];
        return os << ']';
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<GaussianRational> c_;
};

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};

/// p = quotient * q + remainder with deg(remainder) < deg(q).
inline DivisionResult long_division(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
    Polynomial rem = p;
    std::vector<GaussianRational> quot;
    const int dq = q.degree();
    if (rem.degree() >= dq) quot.assign(static_cast<size_t>(rem.degree() - dq) + 1, {});
    while (!rem.is_zero() && rem.degree() >= dq) {
        const int shift = rem.degree() - dq;
        GaussianRational factor = rem.leading() / q.leading();
        quot[static_cast<size_t>(shift)] = factor;
        rem -= Polynomial::monomial(shift, factor) * q;
    }
    return {Polynomial(std::move(quot)), std::move(rem)};
}

}  // namespace ratcalc

#endif
