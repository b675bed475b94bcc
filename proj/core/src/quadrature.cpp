#include "ptcubic/quadrature.hpp"
#include "ptcubic/errors.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <vector>

namespace ptcubic {

namespace {

Integrand counted(const Integrand& f, int& counter) {
    return [&f, &counter](const Real& x) {
        ++counter;
        return f(x);
    };
}

void require_converged(const Real& rel_err, const Real& target) {
    if (!(rel_err <= target))
        throw QuadratureError("quadrature did not reach the requested relative tolerance " +
                              target.str(3) + " (estimate " + rel_err.str(3) + ")");
}

QuadratureResult gauss_result(const Integrand& f,
                              const std::function<Real(const Integrand&, int)>& apply,
                              const QuadratureConfig& config) {
    int used = 0;
    Integrand g = counted(f, used);
    const int n = std::max(config.nodes, 4);
    const Real full = apply(g, n);
    const Real half = apply(g, n / 2);
    QuadratureResult out;
    out.value = full;
    out.estimated_error = boost::multiprecision::abs(full - half);
    out.nodes_used = used;
    Real scale = boost::multiprecision::abs(full);
    if (scale == 0) scale = 1;
    require_converged(out.estimated_error / scale, config.rel_tolerance);
    return out;
}

} // namespace

void gauss_legendre_rule(int n, std::vector<Real>& nodes, std::vector<Real>& weights) {
    nodes.assign(static_cast<size_t>(n), Real(0));
    weights.assign(static_cast<size_t>(n), Real(0));
    const Real pi = boost::math::constants::pi<Real>();
    // Roots are symmetric; compute the upper half and mirror.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev-style initial guess, then Newton on P_n via the
        // three-term recurrence (also yields P'_n).
        Real x = cos(pi * (Real(i) + Real(3) / 4) / (Real(n) + Real(1) / 2));
        Real dp(0);
        for (int iter = 0; iter < 200; ++iter) {
            Real p0(1), p1 = x;
            for (int k = 2; k <= n; ++k) {
                Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = Real(n) * (x * p1 - p0) / (x * x - 1);
            Real dx = p1 / dp;
            x -= dx;
            if (boost::multiprecision::abs(dx) < Real("1e-115")) break;
        }
        const Real w = 2 / ((1 - x * x) * dp * dp);
        nodes[static_cast<size_t>(n - 1 - i)] = x;
        weights[static_cast<size_t>(n - 1 - i)] = w;
        nodes[static_cast<size_t>(i)] = -x;
        weights[static_cast<size_t>(i)] = w;
    }
    if (n % 2 == 1) nodes[static_cast<size_t>(n / 2)] = 0; // exact center
}

QuadratureResult integrate_finite(const Integrand& f, const Real& a, const Real& b,
                                  const QuadratureConfig& config) {
    if (!(a < b)) throw InputError("integration interval must have a < b");

    if (config.scheme == QuadratureScheme::gauss_legendre) {
        auto apply = [&a, &b](const Integrand& g, int n) {
            std::vector<Real> x, w;
            gauss_legendre_rule(n, x, w);
            const Real mid = (a + b) / 2, halfwidth = (b - a) / 2;
            Real acc(0);
            for (size_t i = 0; i < x.size(); ++i)
                acc += w[i] * g(mid + halfwidth * x[i]);
            return Real(acc * halfwidth);
        };
        return gauss_result(f, apply, config);
    }

    // tanh-sinh; the explicit min_complement keeps the node generator away
    // from the extreme tail where (2-x)/x overflows the exponent range.
    boost::math::quadrature::tanh_sinh<Real> integrator(15, Real("1e-130"));
    int used = 0;
    Integrand g = counted(f, used);
    Real error(0), l1(0);
    Real value = integrator.integrate(g, a, b, config.rel_tolerance, &error, &l1);
    QuadratureResult out;
    out.value = value;
    Real scale = boost::multiprecision::abs(value);
    if (scale == 0) scale = 1;
    out.estimated_error = error * scale; // boost reports a relative estimate
    out.nodes_used = used;
    require_converged(error, config.rel_tolerance);
    return out;
}

QuadratureResult integrate_semi_infinite(const Integrand& f,
                                         const QuadratureConfig& config) {
    if (config.scheme == QuadratureScheme::gauss_legendre) {
        // Map (0, inf) -> (0, 1) via u = y/(1-y).
        auto apply = [](const Integrand& g, int n) {
            std::vector<Real> x, w;
            gauss_legendre_rule(n, x, w);
            Real acc(0);
            for (size_t i = 0; i < x.size(); ++i) {
                const Real y = (x[i] + 1) / 2; // map (-1,1) -> (0,1)
                const Real om = 1 - y;
                acc += w[i] / 2 * g(y / om) / (om * om);
            }
            return acc;
        };
        return gauss_result(f, apply, config);
    }

    boost::math::quadrature::exp_sinh<Real> integrator(12);
    int used = 0;
    Integrand g = counted(f, used);
    Real error(0), l1(0);
    Real value = integrator.integrate(g, config.rel_tolerance, &error, &l1);
    QuadratureResult out;
    out.value = value;
    Real scale = boost::multiprecision::abs(value);
    if (scale == 0) scale = 1;
    out.estimated_error = error * scale;
    out.nodes_used = used;
    require_converged(error, config.rel_tolerance);
    return out;
}

} // namespace ptcubic
