#include "ratcalc/interpolation.hpp"

#include <stdexcept>

#include "ratcalc/derivatives.hpp"

namespace ratcalc {

namespace {

void check_distinct(const std::vector<GaussianRational>& points) {
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                fail(errc::bad_input, "interpolation points must be distinct");
}

void check_spec(const HermiteSpec& spec) {
    if (spec.nodes.empty()) fail(errc::bad_input, "interpolation needs at least one node");
    std::vector<GaussianRational> points;
    points.reserve(spec.nodes.size());
    for (const auto& node : spec.nodes) {
        if (node.targets.empty())
            fail(errc::bad_input, "every node needs at least a value target");
        points.push_back(node.point);
    }
    check_distinct(points);
}

/// t-th derivative of g_i = 1/p_i at a_i, where p_i is the normalized
/// product of the other nodes' (z-a_k)^{n_k+1} factors.
GaussianRational g_derivative(const HermiteSpec& spec, size_t i, int t) {
    if (spec.nodes.size() == 1)  // p_i is the empty product, g_i == 1
        return t == 0 ? GaussianRational(1) : GaussianRational();
    std::vector<Factor> rest;
    GaussianRational scale(1);  // product of (a_i - a_k)^{n_k+1}
    for (size_t k = 0; k < spec.nodes.size(); ++k) {
        if (k == i) continue;
        const int mult = static_cast<int>(spec.nodes[k].targets.size());
        rest.push_back(Factor{spec.nodes[k].point, mult});
        scale *= (spec.nodes[i].point - spec.nodes[k].point).pow(mult);
    }
    return scale * derivative(FactoredDenominator(std::move(rest)), t, spec.nodes[i].point);
}

}  // namespace

Polynomial lagrange_basis(const std::vector<GaussianRational>& points, size_t i) {
    if (i >= points.size()) throw std::invalid_argument("lagrange_basis: index out of range");
    check_distinct(points);
    Polynomial result = Polynomial::constant(GaussianRational(1));
    for (size_t j = 0; j < points.size(); ++j) {
        if (j == i) continue;
        result *= Polynomial::linear_from_root(points[j]) *
                  (GaussianRational(1) / (points[i] - points[j]));
    }
    return result;
}

Polynomial spitzbart_Q(const HermiteSpec& spec, size_t i, int l) {
    check_spec(spec);
    if (i >= spec.nodes.size()) throw std::invalid_argument("spitzbart_Q: index out of range");
    const int n_i = static_cast<int>(spec.nodes[i].targets.size()) - 1;
    if (l < 0 || l > n_i) throw std::invalid_argument("spitzbart_Q: order out of range");
    const GaussianRational& a_i = spec.nodes[i].point;

    Polynomial p_i = Polynomial::constant(GaussianRational(1));
    for (size_t k = 0; k < spec.nodes.size(); ++k) {
        if (k == i) continue;
        const int mult = static_cast<int>(spec.nodes[k].targets.size());
        p_i *= (Polynomial::linear_from_root(spec.nodes[k].point) *
                (GaussianRational(1) / (a_i - spec.nodes[k].point)))
                   .pow(mult);
    }

    Polynomial series;  // sum over t of g_i^{(t)}(a_i)/t! * (z-a_i)^t
    for (int t = 0; t <= n_i - l; ++t)
        series += Polynomial::linear_from_root(a_i).pow(t) *
                  (g_derivative(spec, i, t) / GaussianRational(Rational(factorial(t))));

    return p_i *
           (Polynomial::linear_from_root(a_i).pow(l) *
            (GaussianRational(1) / GaussianRational(Rational(factorial(l))))) *
           series;
}

Polynomial hermite_interpolate(const HermiteSpec& spec) {
    check_spec(spec);
    Polynomial result;
    for (size_t i = 0; i < spec.nodes.size(); ++i)
        for (size_t l = 0; l < spec.nodes[i].targets.size(); ++l)
            result += spitzbart_Q(spec, i, static_cast<int>(l)) * spec.nodes[i].targets[l];
    return result;
}

std::pair<Polynomial, Polynomial> hermite_phi_psi(const std::vector<GaussianRational>& points,
                                                  size_t i) {
    Polynomial basis = lagrange_basis(points, i);
    Polynomial squared = basis * basis;
    GaussianRational slope = basis.derivative().eval(points[i]);
    Polynomial phi =
        (Polynomial::constant(GaussianRational(1)) -
         Polynomial::linear_from_root(points[i]) * (GaussianRational(2) * slope)) *
        squared;
    Polynomial psi = Polynomial::linear_from_root(points[i]) * squared;
    return {std::move(phi), std::move(psi)};
}

}  // namespace ratcalc
