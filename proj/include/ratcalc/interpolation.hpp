#ifndef RATCALC_INTERPOLATION_HPP
#define RATCALC_INTERPOLATION_HPP

#include <utility>
#include <vector>

#include "ratcalc/polynomial.hpp"

namespace ratcalc {

/// One interpolation node: prescribed values targets[l] for the l-th
/// derivative at the point, l = 0..n_i (so n_i = targets.size() - 1).
struct HermiteNode {
    GaussianRational point;
    std::vector<GaussianRational> targets;
};

struct HermiteSpec {
    std::vector<HermiteNode> nodes;
};

/// Degree-(L-1) polynomial with value 1 at points[i] and 0 at the others.
Polynomial lagrange_basis(const std::vector<GaussianRational>& points, size_t i);

/// Cardinal basis polynomial: its s-th derivative at node k is 1 exactly
/// when (k, s) == (i, l) and 0 for every other prescribed pair.
Polynomial spitzbart_Q(const HermiteSpec& spec, size_t i, int l);

/// The unique polynomial of degree <= sum(n_i) + L - 1 matching all targets.
Polynomial hermite_interpolate(const HermiteSpec& spec);

/// Classical first-derivative Hermite pair (phi, psi) at points[i]:
/// phi matches value 1 / derivative 0 there, psi value 0 / derivative 1,
/// both vanish to second order at the other points. Used as an independent
/// cross-check for all-n_i=1 specs.
std::pair<Polynomial, Polynomial> hermite_phi_psi(const std::vector<GaussianRational>& points,
                                                  size_t i);

}  // namespace ratcalc

#endif
