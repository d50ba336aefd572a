#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "ratcalc/oracle.hpp"
#include "ratcalc/derivatives.hpp"
#include "test_support.hpp"

using namespace ratcalc;
using support::draw;
using support::draw_denominator;
using support::draw_point_off;
using support::draw_valid_params;
using support::gauss;
using support::rat;

namespace {

// h(z) = 1/(z (z-2)^2), first derivative at z = 1, with hand-picked
// admissible parameters s_1 = 0, s_2 = -1, s = 3.
EvalContext simple_pole_plus_double_root_I() {
    FactoredDenominator d({Factor{gauss(0), 1}, Factor{gauss(2), 2}});
    EvalContext ctx{d, gauss(1), 1, 2, ParamSet{{gauss(0), gauss(-1)}, gauss(3)}};
    return ctx;
}

// Same function and point, but parameters chosen for the principal-part
// formula: s_2 = -6, s = 1 (the N field is unused there).
EvalContext simple_pole_plus_double_root_II() {
    FactoredDenominator d({Factor{gauss(0), 1}, Factor{gauss(2), 2}});
    EvalContext ctx{d, gauss(1), 1, 1, ParamSet{{gauss(0), gauss(-6)}, gauss(1)}};
    return ctx;
}

}  // namespace

TEST_CASE("theta1 golden values for 1/(z(z-2)^2)") {
    const EvalContext ctx = simple_pole_plus_double_root_I();
    REQUIRE(validate_params(ctx.denominator, ctx.z, ctx.t, ctx.N, ctx.params).ok);

    CHECK(theta1(ctx, 1, 1, 0) == gauss(9, 2));
    CHECK(theta1(ctx, 1, 1, 1) == gauss(-64, 7));
    CHECK(theta1(ctx, 2, 1, 0) == gauss(18));
}

TEST_CASE("theta1 rejects out-of-range arguments") {
    const EvalContext ctx = simple_pole_plus_double_root_I();
    CHECK_THROWS_AS(theta1(ctx, 0, 1, 0), std::invalid_argument);   // j starts at 1
    CHECK_THROWS_AS(theta1(ctx, 1, 2, 0), std::invalid_argument);   // r < count
    CHECK_THROWS_AS(theta1(ctx, 1, 0, 1), std::invalid_argument);   // p <= n_r
    CHECK_NOTHROW(theta1(ctx, 3, 1, 0));  // j may exceed N: the term ignores N
}

TEST_CASE("theta1 reports unusable parameters when validation was skipped") {
    // Roots 0 and 1 with s_1 = s_2 = 1, s = 1 collide inside the product.
    FactoredDenominator d({Factor{gauss(0), 2}, Factor{gauss(1), 2}});
    EvalContext ctx{d, gauss(1, 2), 0, 1, ParamSet{{gauss(1), gauss(1)}, gauss(1)}};
    CHECK_THROWS_WITH_AS(theta1(ctx, 1, 0, 1),
                         "zero denominator factor; validate_params was skipped", Error);
}

TEST_CASE("theta2 golden values") {
    // h(z) = 1/z^2: the inner product is empty, so the term is -1.
    FactoredDenominator d({Factor{gauss(0), 2}});
    EvalContext ctx{d, gauss(5), 0, 1, ParamSet{{gauss(1)}, gauss(3)}};
    CHECK(theta2(ctx, 0, 1) == gauss(-1));

    const EvalContext ctx2 = simple_pole_plus_double_root_II();
    CHECK(theta2(ctx2, 1, 1) == gauss(-1));

    CHECK_THROWS_AS(theta2(ctx2, 1, 0), std::invalid_argument);  // p starts at 1
    CHECK_THROWS_AS(theta2(ctx2, 0, 1), std::invalid_argument);  // needs n_r >= 1
}

TEST_CASE("first formula golden values") {
    const EvalContext ctx = simple_pole_plus_double_root_I();
    CHECK(derivative_formula_I(ctx) == gauss(1));

    // h = 1/z at z = 5: value 1/5, independent of the redundancy order N.
    FactoredDenominator single({Factor{gauss(0), 1}});
    for (int n_order = 1; n_order <= 3; ++n_order) {
        EvalContext c{single, gauss(5), 0, n_order, canonical_params(single, gauss(5))};
        CHECK(derivative_formula_I(c) == gauss(1, 5));
    }

    // h = 1/z^2 at z = 2: value 1/4.
    FactoredDenominator dbl({Factor{gauss(0), 2}});
    EvalContext c2{dbl, gauss(2), 0, 1, canonical_params(dbl, gauss(2))};
    CHECK(derivative_formula_I(c2) == gauss(1, 4));
}

TEST_CASE("first formula enforces the order lower bound") {
    FactoredDenominator dbl({Factor{gauss(0), 2}});
    EvalContext ctx{dbl, gauss(2), 1, 1, ParamSet{{gauss(7)}, gauss(2)}};
    REQUIRE(validate_params(ctx.denominator, ctx.z, ctx.t, ctx.N, ctx.params).ok);

    try {
        derivative_formula_I(ctx);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::n_below_range);
    }

    // The unchecked entry point evaluates the same truncated sum anyway.
    // Frozen by direct expansion: the N = 1 partial sum equals 3/16 here,
    // while the true derivative of 1/z^2 at 2 is -1/4.
    CHECK(derivative_formula_I_unchecked(ctx) == gauss(3, 16));
    CHECK(derivative(ctx.denominator, 1, gauss(2)) == gauss(-1, 4));

    EvalContext bad = ctx;
    bad.N = 0;
    CHECK_THROWS_AS(derivative_formula_I_unchecked(bad), std::invalid_argument);
}

TEST_CASE("second formula golden values") {
    FactoredDenominator dbl({Factor{gauss(0), 2}});
    EvalContext ctx{dbl, gauss(3), 0, 1, canonical_params(dbl, gauss(3))};
    CHECK(derivative_formula_II(ctx) == gauss(1, 9));

    const EvalContext ctx2 = simple_pole_plus_double_root_II();
    CHECK(derivative_formula_II(ctx2) == gauss(1));
}

TEST_CASE("second formula rejects the all-simple zeroth-order case") {
    FactoredDenominator single({Factor{gauss(0), 1}});
    EvalContext ctx{single, gauss(5), 0, 1, canonical_params(single, gauss(5))};
    try {
        derivative_formula_II(ctx);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::formula_ii_inadmissible);
    }
    // Raising the derivative order makes the same denominator admissible.
    EvalContext c1{single, gauss(5), 1, 2, canonical_params(single, gauss(5))};
    CHECK(derivative_formula_II(c1) == gauss(-1, 25));
}

TEST_CASE("canonical parameter construction golden values") {
    // Single simple root: no factor needs a shift, so s_list = [0] and s = 1.
    FactoredDenominator single({Factor{gauss(0), 1}});
    ParamSet p1 = canonical_params(single, gauss(7));
    CHECK(p1.s_list == std::vector<GaussianRational>{gauss(0)});
    CHECK(p1.s == gauss(1));

    // Single double root at 0, z = 2: the pair bound is vacuous, so the
    // first admissible magnitude 3 is kept: s_1 = 1, s = 3.
    FactoredDenominator dbl({Factor{gauss(0), 2}});
    ParamSet p2 = canonical_params(dbl, gauss(2));
    CHECK(p2.s_list == std::vector<GaussianRational>{gauss(1)});
    CHECK(p2.s == gauss(3));
}

TEST_CASE("canonical parameters zero out simple factors and stay valid") {
    FactoredDenominator d({Factor{gauss(0), 1}, Factor{gauss(2), 3}});
    for (int t = 0; t <= 4; ++t) {
        for (int n_order = t + 1; n_order <= 8; ++n_order) {
            ParamSet params = canonical_params(d, gauss(1));
            CHECK(params.s_list[0].is_zero());
            CHECK_FALSE(params.s_list[1].is_zero());
            CHECK(validate_params(d, gauss(1), t, n_order, params).ok);
        }
    }
}

TEST_CASE("parameter validation golden rejections") {
    FactoredDenominator d({Factor{gauss(0), 1}, Factor{gauss(2), 2}});
    const GaussianRational z = gauss(1);

    ValidityReport zero_s = validate_params(d, z, 1, 2, ParamSet{{gauss(0), gauss(-1)}, gauss(0)});
    CHECK_FALSE(zero_s.ok);
    CHECK(zero_s.reason == "s must be nonzero");

    ValidityReport shifted_simple =
        validate_params(d, z, 1, 2, ParamSet{{gauss(1), gauss(-1)}, gauss(3)});
    CHECK_FALSE(shifted_simple.ok);
    CHECK(shifted_simple.reason == "s_i must be zero when the factor exponent is 1");

    ValidityReport unshifted_multiple =
        validate_params(d, z, 1, 2, ParamSet{{gauss(0), gauss(0)}, gauss(3)});
    CHECK_FALSE(unshifted_multiple.ok);
    CHECK(unshifted_multiple.reason == "s_i must be nonzero when the factor exponent exceeds 1");

    ValidityReport short_list = validate_params(d, z, 1, 2, ParamSet{{gauss(0)}, gauss(3)});
    CHECK_FALSE(short_list.ok);
    CHECK(short_list.reason == "parameter list length must match factor count");
}

TEST_CASE("parameter validation reports the first colliding witness") {
    FactoredDenominator d({Factor{gauss(0), 2}, Factor{gauss(1), 2}});
    ParamSet params{{gauss(1), gauss(1)}, gauss(1)};
    ValidityReport report = validate_params(d, gauss(1, 2), 0, 1, params);
    REQUIRE_FALSE(report.ok);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->j == 1);
    CHECK(report.witness->r == 0);
    CHECK(report.witness->m == 1);
    CHECK(report.witness->p == 1);
    CHECK(report.witness->q == 1);
}

TEST_CASE("validity for order N implies validity for every lower admissible order") {
    std::mt19937_64 rng(402);
    for (int iter = 0; iter < 20; ++iter) {
        FactoredDenominator d = draw_denominator(rng);
        GaussianRational z = draw_point_off(rng, d);
        int t = static_cast<int>(draw(rng, 0, 3));
        ParamSet params = draw_valid_params(rng, d, z, t, t + 4);
        for (int n_order = t + 1; n_order <= t + 4; ++n_order)
            CHECK(validate_params(d, z, t, n_order, params).ok);
    }
}

TEST_CASE("derivative golden values and pole detection") {
    FactoredDenominator d({Factor{gauss(0), 1}, Factor{gauss(2), 2}});
    CHECK(derivative(d, 1, gauss(1)) == gauss(1));

    FactoredDenominator dbl({Factor{gauss(0), 2}});
    CHECK(derivative(dbl, 1, gauss(2)) == gauss(-1, 4));

    FactoredDenominator single({Factor{gauss(0), 1}});
    CHECK(derivative(single, 3, gauss(1)) == gauss(-6));

    try {
        derivative(d, 0, gauss(2));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::pole);
    }
}

TEST_CASE("formula evaluations reject malformed parameter shapes outright") {
    FactoredDenominator d({Factor{gauss(0), 1}, Factor{gauss(2), 2}});
    EvalContext ctx{d, gauss(1), 1, 2, ParamSet{{gauss(0), gauss(-1)}, gauss(0)}};
    CHECK_THROWS_AS(derivative_formula_I(ctx), Error);
    ctx.params.s = gauss(3);
    ctx.params.s_list = {gauss(0)};
    CHECK_THROWS_AS(derivative_formula_II(ctx), Error);
}

TEST_CASE("redundancy order does not change the first formula's value") {
    std::mt19937_64 rng(403);
    for (int iter = 0; iter < 10; ++iter) {
        FactoredDenominator d = draw_denominator(rng);
        GaussianRational z = draw_point_off(rng, d);
        int t = static_cast<int>(draw(rng, 0, 3));
        ParamSet params = draw_valid_params(rng, d, z, t, t + 4);
        GaussianRational reference =
            derivative_formula_I(EvalContext{d, z, t, t + 1, params});
        for (int n_order = t + 2; n_order <= t + 4; ++n_order)
            CHECK(derivative_formula_I(EvalContext{d, z, t, n_order, params}) == reference);
    }
}

TEST_CASE("the value is independent of the admissible parameter choice") {
    std::mt19937_64 rng(404);
    for (int iter = 0; iter < 10; ++iter) {
        FactoredDenominator d = draw_denominator(rng);
        GaussianRational z = draw_point_off(rng, d);
        int t = static_cast<int>(draw(rng, 0, 3));
        int n_order = t + static_cast<int>(draw(rng, 1, 3));
        GaussianRational reference = derivative(d, t, z);
        for (int rep = 0; rep < 3; ++rep) {
            ParamSet params = draw_valid_params(rng, d, z, t, n_order);
            CHECK(derivative_formula_I(EvalContext{d, z, t, n_order, params}) == reference);
        }
    }
}

TEST_CASE("both formulas agree whenever the second one applies") {
    std::mt19937_64 rng(405);
    int exercised = 0;
    while (exercised < 10) {
        FactoredDenominator d = draw_denominator(rng);
        GaussianRational z = draw_point_off(rng, d);
        int t = static_cast<int>(draw(rng, 0, 3));
        if (d.sum_n() + t < 1) continue;
        ++exercised;
        ParamSet params = draw_valid_params(rng, d, z, t, t + 1);
        CHECK(derivative_formula_II(EvalContext{d, z, t, t + 1, params}) ==
              derivative_formula_I(EvalContext{d, z, t, t + 1, params}));
    }
}

TEST_CASE("closed forms match the oracle on random instances") {
    std::mt19937_64 rng(406);
    for (int iter = 0; iter < 50; ++iter) {
        FactoredDenominator d = draw_denominator(rng);
        GaussianRational z = draw_point_off(rng, d);
        int t = static_cast<int>(draw(rng, 0, 4));
        CHECK(derivative(d, t, z) == oracle_derivative_at(d, t, z));
    }
}
