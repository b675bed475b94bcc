#include "ptcubic/asymptotics.hpp"
#include "ptcubic/errors.hpp"
#include "ptcubic/perturbation.hpp"
#include "ptcubic/quadrature.hpp"

#include "doctest.h"

#include <boost/math/constants/constants.hpp>

#include <string>
#include <vector>

using namespace ptcubic;

namespace {

Real rel_delta(const Real& a, const Real& b) { return abs(a - b) / abs(b); }

const PerturbationSeries& series46() {
    static const PerturbationSeries s = compute_coefficients(46);
    return s;
}

} // namespace

TEST_SUITE_BEGIN("asymptotics");

TEST_CASE("leading growth prediction matches its frozen values") {
    // frozen from an independent 50-digit evaluation of the closed form
    CHECK(format_real(leading_growth_prediction(1, 30), 20) ==
          "26.151825740964624997");
    CHECK(format_real(leading_growth_prediction(2, 30), 20) ==
          "-2353.6643166868162497");
    CHECK(leading_growth_prediction(3, 30) > 0); // alternating signs
    CHECK(leading_growth_prediction(4, 30) < 0);
    CHECK_THROWS_AS(leading_growth_prediction(0, 30), InputError);
}

TEST_CASE("depth zero reduces to the leading prediction") {
    for (int n : {1, 7, 46})
        CHECK(format_real(wkb_growth_prediction(n, 0, 40), 40) ==
              format_real(leading_growth_prediction(n, 40), 40));
}

TEST_CASE("correction coefficients are the frozen rationals") {
    const auto& r = WkbGrowthModel::correction_coefficients();
    CHECK(r[0] == Rat(169, 120));
    CHECK(r[1] == Rat(44507, 28800));
    CHECK(r[6] == Rat(parse_integer("933142404651555165943"),
                      parse_integer("143327232000000000")));
}

TEST_CASE("the depth-7 ratio at order 46 hits the frozen target") {
    const Real ratio = wkb_growth_prediction(46, 7, 60) / to_real(series46().b(46));
    CHECK(abs(ratio - Real("1.00000000807")) <= Real("1e-11"));
}

TEST_CASE("deeper corrections refine the prediction monotonically") {
    const Real b40 = to_real(series46().b(40));
    Real previous_gap;
    for (int depth = 0; depth <= 7; ++depth) {
        const Real gap = abs(wkb_growth_prediction(40, depth, 60) / b40 - 1);
        if (depth > 0) CHECK(gap < previous_gap);
        previous_gap = gap;
    }
}

TEST_CASE("depth-7 ratios settle within 1e-7 for n = 40..46") {
    for (int n = 40; n <= 46; ++n) {
        const Real ratio = wkb_growth_prediction(n, 7, 60) / to_real(series46().b(n));
        CHECK(abs(ratio - 1) < Real("1e-7"));
    }
}

TEST_CASE("growth preconditions are enforced") {
    CHECK_THROWS_AS(wkb_growth_prediction(3, 7, 30), InputError); // n < depth+1
    CHECK_THROWS_AS(wkb_growth_prediction(10, 8, 30), InputError);
    CHECK_NOTHROW(wkb_growth_prediction(8, 7, 30));
}

TEST_CASE("growth report caps the depth per row") {
    const GrowthReport report = growth_report(compute_coefficients(5), 7, 30);
    REQUIRE(report.rows.size() == 5);
    CHECK(report.rows[0].wkb_depth == 0); // n=1 admits no correction factor
    CHECK(report.rows[1].wkb_depth == 1);
    CHECK(report.rows[4].wkb_depth == 4);
    for (const auto& row : report.rows) {
        CHECK(row.leading_ratio > 0);
        CHECK(row.wkb_ratio > 0);
    }
}

TEST_CASE("richardson extrapolation removes power-law tails") {
    SUBCASE("constant sequences are fixed points") {
        const std::vector<Real> fives(6, Real(5));
        CHECK(abs(richardson_extrapolate(fives, 2) - 5) < Real("1e-80"));
    }
    SUBCASE("a pure 1/n correction is removed exactly at r = 1") {
        std::vector<Real> seq;
        for (int n = 1; n <= 8; ++n) seq.push_back(Real(1) + Real(1) / n);
        CHECK(abs(richardson_extrapolate(seq, 1) - 1) < Real("1e-80"));
    }
    SUBCASE("order must be smaller than the sequence") {
        const std::vector<Real> two(2, Real(1));
        CHECK_THROWS_AS(richardson_extrapolate(two, 2), InputError);
        CHECK_THROWS_AS(richardson_extrapolate(two, -1), InputError);
    }
    SUBCASE("the leading-ratio sequence accelerates toward 1") {
        const GrowthReport report = growth_report(series46(), 0, 30);
        std::vector<Real> ratios;
        for (const auto& row : report.rows) ratios.push_back(row.leading_ratio);
        const Real raw_gap = abs(ratios.back() - 1);        // ~ 0.033
        const Real acc_gap = abs(richardson_extrapolate(ratios, 4) - 1);
        CHECK(acc_gap < Real("1e-4"));
        CHECK(acc_gap < raw_gap / 100);
    }
}

TEST_CASE("discontinuity matches its frozen value and scaling") {
    CHECK(format_real(discontinuity(Real(1) / 60, 40), 20) ==
          "-0.56840935031694319128");
    CHECK(discontinuity(Real("0.001"), 40) < 0); // negative on the whole cut
    CHECK_THROWS_AS(discontinuity(Real(0), 40), InputError);
    CHECK_THROWS_AS(discontinuity(Real(-1), 40), InputError);
}

TEST_CASE("dispersion moments reproduce the closed form") {
    const QuadratureConfig config;
    for (int n : {1, 3}) {
        const DispersionMoment m = dispersion_moment(
            n, [](const Real& t) { return discontinuity(t, kRealDigits); }, config);
        CHECK(m.value < 0);
        CHECK(rel_delta(m.abs_value, m.closed_form_reference) < Real("1e-30"));
        CHECK(rel_delta(m.abs_value, abs(leading_growth_prediction(n, 60))) <
              Real("1e-30"));
        CHECK(m.nodes_used > 0);
    }
    CHECK_THROWS_AS(dispersion_moment(0, [](const Real&) { return Real(0); }, config),
                    InputError);
}

TEST_CASE("gauss-legendre scheme agrees with double-exponential") {
    QuadratureConfig gl;
    gl.scheme = QuadratureScheme::gauss_legendre;
    gl.nodes = 400;
    gl.rel_tolerance = Real("1e-12");
    const DispersionMoment m = dispersion_moment(
        2, [](const Real& t) { return discontinuity(t, kRealDigits); }, gl);
    CHECK(rel_delta(m.abs_value, m.closed_form_reference) < Real("1e-10"));
}

TEST_CASE("decay width of the inverted well") {
    CHECK(format_real(im_energy(Real("0.1"), 40).value, 20) ==
          "0.11992398763428442025");
    CHECK(format_real(im_energy(Real("0.05"), 40).value, 20) ==
          "0.0016160829451975787479");
    CHECK(!im_energy(Real("0.1"), 40).underflowed_to_zero);

    const ImEnergy tiny = im_energy(Real("1e-9"), 40);
    CHECK(tiny.value == 0);
    CHECK(tiny.underflowed_to_zero);

    CHECK_THROWS_AS(im_energy(Real(0), 40), InputError);
}

TEST_CASE("bounce action equals the closed form") {
    const QuadratureConfig config;
    const BounceAction a10 = bounce_action(Rat(1, 10), config);
    CHECK(a10.closed_form == Rat(5, 3));
    CHECK(rel_delta(a10.numeric, to_real(a10.closed_form)) < Real("1e-25"));

    SUBCASE("quartic scaling in the coupling") {
        const BounceAction a5 = bounce_action(Rat(1, 5), config);
        CHECK(a5.closed_form == Rat(5, 12));
        CHECK(abs(a5.numeric - a10.numeric / 4) < Real("1e-20"));
    }
    SUBCASE("gauss-legendre path") {
        QuadratureConfig gl;
        gl.scheme = QuadratureScheme::gauss_legendre;
        gl.nodes = 200;
        gl.rel_tolerance = Real("1e-12");
        const BounceAction a = bounce_action(Rat(1, 2), gl);
        CHECK(a.closed_form == Rat(1, 15));
        CHECK(rel_delta(a.numeric, to_real(a.closed_form)) < Real("1e-10"));
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(bounce_action(Rat(0), config), InputError);
        CHECK_THROWS_AS(bounce_action(Rat(-1, 10), config), InputError);
    }
}

TEST_CASE("quadrature building blocks") {
    const QuadratureConfig config;
    SUBCASE("finite interval") {
        const QuadratureResult r = integrate_finite(
            [](const Real& x) { return sin(x); }, Real(0),
            boost::math::constants::pi<Real>(), config);
        CHECK(abs(r.value - 2) < Real("1e-25"));
        CHECK(r.nodes_used > 0);
    }
    SUBCASE("semi-infinite interval") {
        const QuadratureResult r =
            integrate_semi_infinite([](const Real& u) { return exp(-u); }, config);
        CHECK(abs(r.value - 1) < Real("1e-25"));
    }
    SUBCASE("runtime gauss-legendre rules") {
        std::vector<Real> nodes, weights;
        gauss_legendre_rule(7, nodes, weights);
        REQUIRE(nodes.size() == 7);
        Real weight_sum = 0, node_sum = 0;
        for (size_t i = 0; i < 7; ++i) {
            weight_sum += weights[i];
            node_sum += nodes[i];
        }
        CHECK(abs(weight_sum - 2) < Real("1e-100"));
        CHECK(abs(node_sum) < Real("1e-100")); // symmetric rule
        // degree-13 exactness: integral of x^12 over (-1,1) is 2/13
        Real moment = 0;
        for (size_t i = 0; i < 7; ++i) moment += weights[i] * pow(nodes[i], 12);
        CHECK(abs(moment - Real(2) / 13) < Real("1e-100"));
    }
    SUBCASE("unattainable tolerance raises QuadratureError") {
        QuadratureConfig strict;
        strict.scheme = QuadratureScheme::gauss_legendre;
        strict.nodes = 4; // far too coarse for 1e-30
        CHECK_THROWS_AS(integrate_finite([](const Real& x) { return exp(x * x); },
                                         Real(0), Real(2), strict),
                        QuadratureError);
    }
}

TEST_SUITE_END();
