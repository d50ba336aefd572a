#ifndef RATCALC_GAUSSIAN_HPP
#define RATCALC_GAUSSIAN_HPP

#include <ostream>
#include <string>
#include <utility>

#include "ratcalc/rational.hpp"

namespace ratcalc {

/// Exact complex scalar with rational real and imaginary parts. Closed under
/// +, -, *, / (nonzero divisor); the field every formula is evaluated in.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int n) : re_(n) {}
    GaussianRational(long long n) : re_(n) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const noexcept { return im_.is_zero(); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) fail(errc::division_by_zero);
        Rational n = o.norm();
        Rational r = (re_ * o.re_ + im_ * o.im_) / n;
        im_ = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        return *this;
    }
    GaussianRational& operator*=(const Rational& c) {
        re_ *= c;
        im_ *= c;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator*(GaussianRational a, const Rational& c) { return a *= c; }
    friend GaussianRational operator*(const Rational& c, GaussianRational a) { return a *= c; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) noexcept {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) noexcept {
        return !(a == b);
    }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    /// Integer power; negative exponents invert (nonzero base required).
    /// 0^0 = 1 by the evaluator's convention.
    GaussianRational pow(long long e) const {
        if (e < 0) {
            if (is_zero()) fail(errc::division_by_zero);
            return (GaussianRational(1) / *this).pow(-e);
        }
        GaussianRational r(1);
        GaussianRational base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    std::string to_string() const {
        if (im_.is_zero()) return re_.to_string();
        return re_.to_string() + (im_.sign() < 0 ? "" : "+") + im_.to_string() + "i";
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& v) {
        return os << v.to_string();
    }

private:
    Rational re_;
    Rational im_;
};

inline GaussianRational gr_div(const GaussianRational& a, const GaussianRational& b) {
    return a / b;
}

}  // namespace ratcalc

#endif
