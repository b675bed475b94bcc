#include "ptcubic/errors.hpp"
#include "ptcubic/pade.hpp"
#include "ptcubic/perturbation.hpp"
#include "ptcubic/spectral.hpp"

#include "doctest.h"

#include <cmath>
#include <complex>

using namespace ptcubic;

TEST_SUITE_BEGIN("spectral");

TEST_CASE("zero coupling reproduces the harmonic ground state") {
    ShootingConfig config;
    // E = 1/2 is the exact ground level of p^2 + x^2/4
    CHECK(std::abs(matching_determinant(0.0, {0.5, 0.0}, config)) < 1e-8);
    // E = 1 lies between levels, the determinant must stay away from zero
    CHECK(std::abs(matching_determinant(0.0, {1.0, 0.0}, config)) > 1e-2);

    config.energy_guess = {0.6, 0.0};
    const EigenResult result = solve_ground_energy(0.0, config);
    CHECK(std::abs(result.energy.real() - 0.5) < 1e-9);
    CHECK(std::abs(result.energy.imag()) < 1e-10);
    CHECK(result.residual <= config.root_tolerance);
}

TEST_CASE("half-line data is normalized and symmetry-consistent") {
    ShootingConfig config;
    const HalfLineResult left = integrate_halfline(0.25, {0.7, 0.0}, Side::left, config);
    const HalfLineResult right = integrate_halfline(0.25, {0.7, 0.0}, Side::right, config);
    CHECK(std::abs(left.psi) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(right.psi) == doctest::Approx(1.0).epsilon(1e-12));
    // combined parity + conjugation maps the left boundary problem onto the
    // right one, so at real E the log-derivatives obey d_R = -conj(d_L)
    const std::complex<double> dl = left.dpsi / left.psi;
    const std::complex<double> dr = right.dpsi / right.psi;
    CHECK(std::abs(dr + std::conj(dl)) < 1e-7);
}

TEST_CASE("reference couplings are reproduced to five decimals") {
    struct Row {
        double lambda;
        double energy;
        double tolerance;
    };
    const Row rows[] = {
        {1.0 / 16, 0.53393, 5e-6},
        {1.0 / 8, 0.59492, 5e-6},
        {1.0, 1.16746, 1e-4},
    };
    for (const Row& row : rows) {
        ShootingConfig config;
        config.energy_guess = {row.energy, 0.0};
        const EigenResult result = solve_ground_energy(row.lambda, config);
        CHECK(std::abs(result.energy.real() - row.energy) < row.tolerance);
        CHECK(std::abs(result.energy.imag()) < 1e-9); // PT-real spectrum
    }
}

TEST_CASE("the eigenvalue is insensitive to solver knobs") {
    ShootingConfig base;
    base.energy_guess = {0.7, 0.0};
    const double e0 = solve_ground_energy(0.25, base).energy.real();

    SUBCASE("manual domain radius") {
        ShootingConfig config = base;
        config.domain_radius = choose_domain_radius(0.25, {0.7, 0.0}) + 2.0;
        CHECK(std::abs(solve_ground_energy(0.25, config).energy.real() - e0) < 1e-9);
    }
    SUBCASE("match point off the origin") {
        ShootingConfig config = base;
        config.match_point = 0.5;
        CHECK(std::abs(solve_ground_energy(0.25, config).energy.real() - e0) < 1e-8);
    }
    SUBCASE("tighter step tolerance") {
        ShootingConfig config = base;
        config.step_tolerance = 1e-13;
        CHECK(std::abs(solve_ground_energy(0.25, config).energy.real() - e0) < 1e-9);
    }
}

TEST_CASE("small-coupling eigenvalues agree with the resummed series") {
    const PerturbationSeries series = compute_coefficients(46);
    const EnergyEstimate est = energy_estimate(series, Rat(1, 64), 22, 20);
    const double resummed = static_cast<double>(to_real(est.average));

    ShootingConfig config;
    config.energy_guess = {resummed, 0.0};
    const EigenResult result = solve_ground_energy(1.0 / 64, config);
    CHECK(std::abs(result.energy.real() - resummed) < 5e-9);
}

TEST_CASE("an exact initial guess converges immediately") {
    ShootingConfig config;
    config.energy_guess = {0.5, 0.0};
    const EigenResult result = solve_ground_energy(0.0, config);
    CHECK(result.iterations <= 1);
    CHECK(std::abs(result.energy - std::complex<double>{0.5, 0.0}) < 1e-10);
}

TEST_CASE("failure modes raise SolverError") {
    SUBCASE("iteration cap") {
        ShootingConfig config;
        config.energy_guess = {10.0, 0.0};
        config.max_iterations = 2;
        CHECK_THROWS_AS(solve_ground_energy(0.25, config), SolverError);
    }
    SUBCASE("basin escape") {
        // the root lies at 0.7129; a bound at 0.55 is crossed on the way
        ShootingConfig config;
        config.energy_guess = {0.5, 0.0};
        config.energy_bound = 0.55;
        CHECK_THROWS_AS(solve_ground_energy(0.25, config), SolverError);
    }
    SUBCASE("energy above the boundary potential breaks the WKB precondition") {
        ShootingConfig config;
        config.domain_radius = 2.0; // Q(+-2) = 1 + 8 i lambda - E has Re < 0 for E > 1
        config.energy_guess = {5.0, 0.0};
        CHECK_THROWS_AS(matching_determinant(0.0, {5.0, 0.0}, config), SolverError);
    }
}

TEST_CASE("the adaptive domain radius lands on the quarter grid") {
    const double radius = choose_domain_radius(0.125, {0.6, 0.0});
    CHECK(radius >= 4.0);
    CHECK(radius <= 40.0);
    CHECK(std::abs(radius * 4.0 - std::round(radius * 4.0)) < 1e-12);
    // stronger coupling confines harder: the radius must not grow
    const double radius_strong = choose_domain_radius(2.0, {1.5, 0.0});
    CHECK(radius_strong <= radius + 0.25);
}

TEST_SUITE_END();
