#include "ptcubic/spectral.hpp"
#include "ptcubic/errors.hpp"

#include <boost/numeric/odeint.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <string>

namespace ptcubic {

namespace {

using state_type = std::array<std::complex<double>, 2>; // {psi, psi'}

std::complex<double> potential_q(double lambda, std::complex<double> E, double x) {
    return std::complex<double>(x * x / 4.0, lambda * x * x * x) - E;
}

// sqrt with the branch Re >= 0 (principal branch already has Re >= 0, but
// guard against the negative-real-axis edge).
std::complex<double> sqrt_decaying(std::complex<double> q) {
    std::complex<double> r = std::sqrt(q);
    return r.real() < 0 ? -r : r;
}

} // namespace

double choose_domain_radius(double lambda, std::complex<double> E) {
    // Scan outward accumulating Re sqrt(Q) with the trapezoid rule on each
    // side; stop once both sides have accumulated at least 40 beyond the
    // turning region (where Re sqrt(Q) first exceeds a small threshold).
    const double target = 40.0;
    const double dx = 0.05;
    const double max_radius = 60.0;
    double needed[2] = {0.0, 0.0};
    for (int side = 0; side < 2; ++side) {
        const double sign = side == 0 ? 1.0 : -1.0;
        double accumulated = 0.0;
        bool in_asymptotic = false;
        double prev = 0.0;
        double radius = 0.0;
        for (double x = 0.0; x <= max_radius; x += dx) {
            const double g = std::max(0.0, sqrt_decaying(potential_q(lambda, E, sign * x)).real());
            if (!in_asymptotic) {
                if (g > 0.1) {
                    in_asymptotic = true;
                    prev = g;
                }
                continue;
            }
            accumulated += dx * (prev + g) / 2.0;
            prev = g;
            if (accumulated >= target) {
                radius = x;
                break;
            }
        }
        needed[side] = radius; // 0 when the scan failed
    }
    if (needed[0] == 0.0 || needed[1] == 0.0) return 12.0; // fallback
    const double l = std::max(needed[0], needed[1]);
    return std::ceil(l / 0.25) * 0.25;
}

HalfLineResult integrate_halfline(double lambda, std::complex<double> E, Side side,
                                  const ShootingConfig& config) {
    const double radius = config.domain_radius > 0.0
                              ? config.domain_radius
                              : choose_domain_radius(lambda, E);
    const double start = side == Side::left ? -radius : radius;
    const double end = config.match_point;
    if ((side == Side::left && start >= end) || (side == Side::right && start <= end))
        throw InputError("match point must lie strictly inside (-L, L)");

    const std::complex<double> q_start = potential_q(lambda, E, start);
    const std::complex<double> root = sqrt_decaying(q_start);
    if (!(root.real() > 0))
        throw SolverError("asymptotic region not reached at x = " + std::to_string(start) +
                          ": Re sqrt(Q) = " + std::to_string(root.real()));

    // Decaying WKB data: the solution grows when integrated inward, so the
    // derivative points along +sqrt(Q) on the left and -sqrt(Q) on the right.
    state_type y;
    y[0] = 1.0;
    y[1] = side == Side::left ? root : -root;

    auto rhs = [lambda, E](const state_type& s, state_type& dsdx, double x) {
        dsdx[0] = s[1];
        dsdx[1] = potential_q(lambda, E, x) * s[0];
    };

    namespace ode = boost::numeric::odeint;
    auto stepper = ode::make_controlled(config.step_tolerance, config.step_tolerance,
                                        ode::runge_kutta_dopri5<state_type>());

    const double direction = side == Side::left ? 1.0 : -1.0;
    double x = start;
    double dx = direction * 1e-3;
    while (direction * (end - x) > 0) {
        if (direction * (x + dx) > direction * end) dx = end - x;
        ode::controlled_step_result result = ode::fail;
        for (int attempt = 0; attempt < 60 && result == ode::fail; ++attempt)
            result = stepper.try_step(rhs, y, x, dx);
        if (result == ode::fail)
            throw SolverError("adaptive step size collapsed at x = " + std::to_string(x));
        const double mag = std::abs(y[0]);
        if (mag > config.renorm_ceiling) {
            if (!config.renormalize)
                throw SolverError("solution overflowed the rescaling ceiling at x = " +
                                  std::to_string(x) + " with renormalization disabled");
            y[0] /= mag;
            y[1] /= mag;
        }
    }

    const double mag = std::abs(y[0]);
    if (mag == 0.0)
        throw SolverError("solution vanished at the match point; cannot normalize");
    return HalfLineResult{y[0] / mag, y[1] / mag};
}

std::complex<double> matching_determinant(double lambda, std::complex<double> E,
                                          const ShootingConfig& config) {
    // Fix the domain radius once per evaluation so both sides and every
    // secant iterate see the same discretized problem.
    ShootingConfig fixed = config;
    if (fixed.domain_radius <= 0.0) fixed.domain_radius = choose_domain_radius(lambda, E);
    const HalfLineResult left = integrate_halfline(lambda, E, Side::left, fixed);
    const HalfLineResult right = integrate_halfline(lambda, E, Side::right, fixed);
    return left.psi * right.dpsi - left.dpsi * right.psi;
}

EigenResult solve_ground_energy(double lambda, ShootingConfig config) {
    config.lambda = lambda;
    if (config.domain_radius <= 0.0)
        config.domain_radius = choose_domain_radius(lambda, config.energy_guess);

    std::complex<double> e0 = config.energy_guess;
    std::complex<double> e1 = e0 * (1.0 + 1e-3);
    std::complex<double> d0 = matching_determinant(lambda, e0, config);
    std::complex<double> d1 = matching_determinant(lambda, e1, config);

    EigenResult result;
    result.config_echo = config;
    for (int iter = 1; iter <= config.max_iterations; ++iter) {
        if (std::abs(d1) <= config.root_tolerance) {
            result.energy = e1;
            result.residual = std::abs(d1);
            result.iterations = iter - 1;
            return result;
        }
        const std::complex<double> denom = d1 - d0;
        if (denom == std::complex<double>(0.0, 0.0))
            throw SolverError("secant stalled: matching determinant is flat between iterates");
        const std::complex<double> e2 = e1 - d1 * (e1 - e0) / denom;
        if (!std::isfinite(e2.real()) || !std::isfinite(e2.imag()))
            throw SolverError("secant produced a non-finite energy iterate");
        if (std::abs(e2) > config.energy_bound)
            throw SolverError("energy iterate escaped the search basin (|E| = " +
                              std::to_string(std::abs(e2)) + " > bound " +
                              std::to_string(config.energy_bound) + ")");
        e0 = e1;
        d0 = d1;
        e1 = e2;
        d1 = matching_determinant(lambda, e1, config);
    }
    if (std::abs(d1) <= config.root_tolerance) {
        result.energy = e1;
        result.residual = std::abs(d1);
        result.iterations = config.max_iterations;
        return result;
    }
    throw SolverError("no convergence after " + std::to_string(config.max_iterations) +
                      " secant iterations (|D| = " + std::to_string(std::abs(d1)) + ")");
}

} // namespace ptcubic
